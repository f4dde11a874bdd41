use std::path::PathBuf;

use anyhow::bail;
use clap::Subcommand;
use dpcodes_core::verify::{nonequivalence_certificate, shorten_scan, Fixing};
use dpcodes_core::{build_d3, parse_operator, AnyCode, Code, Error, TernaryWord};
use serde_json::json;

use crate::source::{load, Built, FieldArgs, SourceArgs};
use crate::{Cli, Status};

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Find coordinate fixings that shorten the code to a perfect code in X^k.
    Shorten(ShortenArgs),
    /// Compare the shortening profiles of two codes.
    Noneq(NoneqArgs),
}

#[derive(clap::Args, Debug)]
pub struct ShortenArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Target length, a power of two below n.
    #[arg(long)]
    k: usize,
    /// How many fixings to print.
    #[arg(long, default_value_t = 10)]
    limit: usize,
}

#[derive(clap::Args, Debug)]
pub struct NoneqArgs {
    /// Code file, or an operator literal for the distance-3 family over `--m`.
    #[arg(long)]
    left: String,
    /// Code file, or an operator literal for the distance-3 family over `--m`.
    #[arg(long)]
    right: String,
    #[command(flatten)]
    field: FieldArgs,
}

fn ternary(built: Built) -> anyhow::Result<Code<TernaryWord>> {
    match built {
        Built::Code(AnyCode::Ternary(code), _) => Ok(code),
        Built::Code(AnyCode::Binary(_), _) => {
            bail!(Error::Precondition("shortening scans need a ternary code".into()))
        }
        Built::StreamD3(c) => Ok(c.materialize()?),
        Built::StreamD5(c) => Ok(c.materialize()?),
    }
}

fn show(fixing: &Fixing) -> String {
    fixing
        .iter()
        .map(|&(p, v)| format!("{p}={}", u8::from(v)))
        .collect::<Vec<_>>()
        .join(",")
}

fn code_from(spec: &str, field: &FieldArgs) -> anyhow::Result<Code<TernaryWord>> {
    let path = PathBuf::from(spec);
    if path.exists() {
        return ternary(Built::Code(load(&path)?.0, None));
    }
    Ok(build_d3(parse_operator(spec, field.field()?)?)?)
}

pub fn run(cli: &Cli, cmd: &Command) -> anyhow::Result<Status> {
    match cmd {
        Command::Shorten(args) => {
            let code = ternary(args.source.resolve()?)?;
            let scan = shorten_scan(code.n(), code.words(), args.k)?;
            if cli.json {
                let shown: Vec<&Fixing> = scan.found.iter().take(args.limit).collect();
                println!(
                    "{}",
                    json!({
                        "k": scan.k,
                        "fixings_checked": scan.fixings_checked.to_string(),
                        "found": scan.found.len(),
                        "fixings": shown,
                    })
                );
            } else if scan.found.is_empty() {
                println!("none: no fixing of {} gives a perfect code in X^{}", scan.fixings_checked, scan.k);
            } else {
                println!(
                    "found: {} of {} fixings give a perfect code in X^{}",
                    scan.found.len(),
                    scan.fixings_checked,
                    scan.k
                );
                for f in scan.found.iter().take(args.limit) {
                    println!("  {}", show(f));
                }
            }
        }
        Command::Noneq(args) => {
            let left = code_from(&args.left, &args.field)?;
            let right = code_from(&args.right, &args.field)?;
            if left.n() != right.n() {
                bail!(Error::LengthMismatch { left: left.n(), right: right.n() });
            }
            let cert = nonequivalence_certificate(left.n(), left.words(), right.words())?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "verdict": cert.verdict.to_string(),
                        "left": cert.left,
                        "right": cert.right,
                        "separating_k": cert.separating_k,
                    })
                );
            } else {
                println!("{}", cert.verdict);
                for ((k, l), (_, r)) in cert.left.iter().zip(&cert.right) {
                    println!("  k={k}: left {}, right {}", yes_no(*l), yes_no(*r));
                }
            }
        }
    }
    Ok(Status::Ok)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "shortens"
    } else {
        "does not shorten"
    }
}
