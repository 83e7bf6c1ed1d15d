use std::process::ExitCode;

use clap::Parser;
use derange_cli::{finish, subdirect, SubdirectArgs};

/// Subdirect products of two permutation groups, up to conjugacy by default.
#[derive(Parser, Debug)]
#[command(name = "subdirect", version)]
struct Cli {
    #[command(flatten)]
    args: SubdirectArgs,
}

fn main() -> ExitCode {
    finish(subdirect(&Cli::parse().args))
}
