use std::process::ExitCode;

use clap::Parser;
use derange_cli::{finish, lincover, LincoverCommand};

/// Hyperplane counts and covers over small finite fields.
#[derive(Parser, Debug)]
#[command(name = "lincover", version)]
struct Cli {
    #[command(subcommand)]
    command: LincoverCommand,
}

fn main() -> ExitCode {
    finish(lincover(&Cli::parse().command))
}
