//! `plotkin`: build and analyze binary codes from the command line.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "plotkin",
    version,
    about = "Binary codes under the (u|u+v) construction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print length, size, distance, rank and kernel dimension of a code.
    Info {
        file: PathBuf,
        /// Emit one JSON object instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Write {(u | u+v) : u in A, v in B}.
    Plotkin {
        file_a: PathBuf,
        file_b: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Write the kernel {x : C + x = C}.
    Kernel {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Write a canonical basis of the linear span, then its words when within the cap.
    Span {
        file: PathBuf,
        /// Only print the basis.
        #[arg(long)]
        basis_only: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Check kernel, span, rank and parameter identities for the pair (A, B).
    Verify {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Cross-check with the brute-force routines.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
        /// Fail on any broken identity, even when an input lacks the zero word.
        #[arg(long)]
        strict: bool,
        /// Where to write a counterexample bundle on failure.
        #[arg(long, default_value = "plotkin-counterexample")]
        bundle: PathBuf,
    },
    /// Emit a member of a code family: repetition N, universe N, parity N,
    /// reed-muller R M, random N M SEED [ZERO], or from-generator FILE.
    Family {
        kind: String,
        params: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Emit a seeded random code.
    Random {
        #[arg(short = 'n', long = "length")]
        n: usize,
        #[arg(short = 'M', long = "size")]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Force the zero word into the code.
        #[arg(long)]
        zero: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Verify a seeded corpus of random pairs and print a summary table.
    Corpus {
        #[arg(long)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 64)]
        max_size: usize,
        /// Drop the zero-word guarantee; failures then become informational.
        #[arg(long)]
        no_zero: bool,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct Output {
    /// Output file; stdout when omitted.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
