use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use derange_cli::{
    check_degree, classify, derangement_command, enumerate, finish, lincover, pndr_command,
    subdirect, verify, LincoverCommand, SubdirectArgs, VerifyArgs,
};

/// Derangements in permutation groups with two orbits of equal length.
#[derive(Parser, Debug)]
#[command(name = "derange", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every subdirect product of transitive imprimitive groups of
    /// one degree for a derangement.
    Verify(VerifyArgs),
    /// Write the transitive groups of a small degree as group files.
    Enumerate {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exact proportion of non-derangements of a group file.
    Pndr {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Find a derangement in a group file.
    Derangement {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Which argument covers orbit length n.
    Classify {
        #[arg(long)]
        n: u64,
    },
    /// Subdirect products of two groups.
    Subdirect(SubdirectArgs),
    /// Hyperplane counts and covers.
    #[command(subcommand)]
    Lincover(LincoverCommand),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    finish(match &cli.command {
        Command::Verify(args) => check_degree(args.degree).and_then(|_| verify(args)),
        Command::Enumerate { degree, out } => {
            check_degree(*degree).and_then(|_| enumerate(*degree, out))
        }
        Command::Pndr { group, seed } => pndr_command(group, *seed),
        Command::Derangement { group, seed } => derangement_command(group, *seed),
        Command::Classify { n } => classify(*n),
        Command::Subdirect(args) => subdirect(args),
        Command::Lincover(cmd) => lincover(cmd),
    })
}
