//! `dpcodes`: build the code families, verify their claimed parameters, scan
//! shortenings and certify operators.

mod cert;
mod construct;
mod scan;
mod source;
mod verify;

use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "dpcodes", version, about = "Build and check perfect codes over the star-edge space X^n")]
pub struct Cli {
    /// Emit JSON (one record per line) instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Worker threads for the parallel checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code and write it as a code file.
    Construct(construct::Args),
    /// Run verification suites on a code file or a constructed family.
    Verify(verify::Args),
    /// Shortening scans and nonequivalence certificates.
    #[command(subcommand)]
    Scan(scan::Command),
    /// Report which construction conditions an operator satisfies.
    Cert(cert::Args),
}

/// Outcome of a command that ran to completion.
pub enum Status {
    Ok,
    ChecksFailed,
}

/// Exit codes: 1 I/O, 2 precondition, 3 resource cap, 4 failed check.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<dpcodes_core::Error>() {
            return match e {
                dpcodes_core::Error::Io(_) | dpcodes_core::Error::CodeFile { .. } => 1,
                dpcodes_core::Error::TooLarge { .. } => 3,
                _ => 2,
            };
        }
        if cause.downcast_ref::<std::io::Error>().is_some() {
            return 1;
        }
    }
    2
}

fn run(cli: &Cli) -> anyhow::Result<Status> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the worker pool")?;
    }
    match &cli.command {
        Command::Construct(args) => construct::run(cli, args),
        Command::Verify(args) => verify::run(cli, args),
        Command::Scan(cmd) => scan::run(cli, cmd),
        Command::Cert(args) => cert::run(cli, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::ChecksFailed) => ExitCode::from(4),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
