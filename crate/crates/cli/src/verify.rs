use std::time::Instant;

use anyhow::bail;
use clap::ValueEnum;
use dpcodes_core::verify::{
    check_matching, check_perfect_coloring, check_perfect_d3, check_transitivity,
    is_diameter_perfect, min_distance, sampled_min_distance, sampled_min_distance_in, SampleRng,
};
use dpcodes_core::construct::MATERIALIZE_CAP;
use dpcodes_core::{
    anticode_a, ball, square_anticode, AnyCode, BinaryWord, CheckReport, Code, D3Construction,
    Error, Family, Mode, TernaryWord, Verdict, Word,
};

use crate::source::{Built, SourceArgs};
use crate::{Cli, Status};

/// Largest code checked pairwise; bigger ones are sampled.
const EXACT_DISTANCE_MAX_WORDS: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Distance,
    Perfect,
    DiameterPerfect,
    Matching,
    Transitivity,
    Coloring,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AnticodeArg {
    /// Radius-1 ball around the first codeword.
    Ball1,
    /// The diameter-3 anticode around the first codeword.
    A,
    /// Radius-2 ball around the all-zero binary word.
    Ball2,
    /// The diameter-2 square anticode.
    Square,
}

#[derive(clap::Args, Debug)]
pub struct Args {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Anticode for the diameter-perfect check (default depends on the family).
    #[arg(long, value_enum)]
    anticode: Option<AnticodeArg>,
    /// Random pairs for sampled distance checks.
    #[arg(long, default_value_t = 1_000_000)]
    pairs: u64,
}

fn emit(cli: &Cli, report: &CheckReport) -> anyhow::Result<()> {
    if cli.json {
        println!("{}", serde_json::to_string(report)?);
    } else {
        println!("{report}");
    }
    Ok(())
}

fn distance_report<W: Word>(words: &[W], claimed: usize, pairs: u64, seed: u64) -> anyhow::Result<CheckReport> {
    let start = Instant::now();
    let claim = format!("minimum distance at least {claimed}");
    if words.len() <= EXACT_DISTANCE_MAX_WORDS {
        let (d, (a, b)) = min_distance(words)?;
        return Ok(CheckReport::new("distance", claim, Mode::Exact)
            .values(d, format!(">= {claimed}"))
            .pass_if(d >= claimed)
            .witness((d < claimed).then(|| format!("{a} {b}")))
            .runtime(start));
    }
    let s = sampled_min_distance_in(words, pairs, seed)?;
    Ok(sampled_report(claim, claimed, s.observed_min, s.pairs, s.witness, start))
}

fn sampled_report<W: Word>(
    claim: String,
    claimed: usize,
    observed: usize,
    pairs: u64,
    witness: Option<(W, W)>,
    start: Instant,
) -> CheckReport {
    let violated = observed < claimed;
    CheckReport::new("distance", claim, Mode::Sampled)
        .values(format!("{observed} over {pairs} random pairs"), format!(">= {claimed}"))
        .verdict(if violated { Verdict::Fail } else { Verdict::Inconclusive })
        .witness(witness.filter(|_| violated).map(|(a, b)| format!("{a} {b}")))
        .runtime(start)
}

fn default_suites(family: Family, ternary: bool, transitive: bool) -> Vec<Suite> {
    use Suite::*;
    if !ternary {
        return vec![Distance];
    }
    match family {
        Family::D3 if transitive => vec![Distance, Perfect, DiameterPerfect, Matching, Transitivity],
        Family::D3 => vec![Distance, Perfect, DiameterPerfect, Matching],
        Family::D5 => vec![Distance, DiameterPerfect],
        Family::D4Conference => vec![Distance, DiameterPerfect, Coloring],
        _ => vec![Distance, Perfect, Matching],
    }
}

fn anticode(choice: AnticodeArg, code: &Code<TernaryWord>) -> anyhow::Result<Vec<TernaryWord>> {
    let n = code.n();
    let Some(&first) = code.words().first() else {
        bail!(Error::TooFewWords(0));
    };
    Ok(match choice {
        AnticodeArg::Ball1 => ball(first, 1),
        AnticodeArg::A => anticode_a(&first),
        AnticodeArg::Ball2 => ball(BinaryWord::zero(n), 2),
        AnticodeArg::Square => square_anticode(n),
    })
}

fn ternary_suite(
    suite: Suite,
    args: &Args,
    seed: u64,
    code: &Code<TernaryWord>,
    construction: Option<&D3Construction>,
) -> anyhow::Result<CheckReport> {
    let (n, words) = (code.n(), code.words());
    Ok(match suite {
        Suite::Distance => distance_report(words, code.claimed_distance(), args.pairs, seed)?,
        Suite::Perfect => check_perfect_d3(n, words)?,
        Suite::DiameterPerfect => {
            let choice = args.anticode.unwrap_or(match code.meta().family {
                Family::D5 => AnticodeArg::Ball2,
                Family::D4Conference => AnticodeArg::A,
                _ => AnticodeArg::Ball1,
            });
            is_diameter_perfect(n, words, &anticode(choice, code)?)?
        }
        Suite::Matching => check_matching(n, words)?.report,
        Suite::Transitivity => {
            let Some(c) = construction else {
                bail!(Error::Precondition(
                    "transitivity needs a distance-3 family (build it with --family d3 or a file header naming it)".into()
                ));
            };
            check_transitivity(words, c)?.report
        }
        Suite::Coloring => check_perfect_coloring(n, words)?.report,
        Suite::All => unreachable!("expanded by the caller"),
    })
}

pub fn run(cli: &Cli, args: &Args) -> anyhow::Result<Status> {
    let mut reports = Vec::new();
    match args.source.resolve()? {
        Built::Code(AnyCode::Ternary(code), construction) => {
            let suites = match args.suite {
                Suite::All => default_suites(
                    code.meta().family,
                    true,
                    construction.as_ref().is_some_and(|c| c.n() <= 8),
                ),
                s => vec![s],
            };
            for suite in suites {
                let r = ternary_suite(suite, args, cli.seed, &code, construction.as_ref())?;
                emit(cli, &r)?;
                reports.push(r);
            }
        }
        Built::Code(AnyCode::Binary(code), _) => {
            if !matches!(args.suite, Suite::All | Suite::Distance) {
                bail!(Error::Precondition(format!("suite {:?} needs a ternary code", args.suite)));
            }
            let r = distance_report(code.words(), code.claimed_distance(), args.pairs, cli.seed)?;
            emit(cli, &r)?;
            reports.push(r);
        }
        Built::StreamD3(c) => {
            let r = stream_report(args, cli.seed, 3, c.cardinality(), |rng| c.sample(rng))?;
            emit(cli, &r)?;
            reports.push(r);
        }
        Built::StreamD5(c) => {
            let r = stream_report(args, cli.seed, 5, c.cardinality(), |rng| c.sample(rng))?;
            emit(cli, &r)?;
            reports.push(r);
        }
    }
    Ok(if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        Status::ChecksFailed
    } else {
        Status::Ok
    })
}

/// Codes too large to hold: only sampled distances.
fn stream_report(
    args: &Args,
    seed: u64,
    claimed: usize,
    size: u128,
    sample: impl FnMut(&mut SampleRng) -> TernaryWord,
) -> anyhow::Result<CheckReport> {
    if !matches!(args.suite, Suite::All | Suite::Distance) {
        bail!(Error::TooLarge {
            what: format!("code for suite {:?}", args.suite),
            size,
            cap: MATERIALIZE_CAP,
        });
    }
    let start = Instant::now();
    let s = sampled_min_distance(sample, args.pairs, seed);
    Ok(sampled_report(
        format!("minimum distance at least {claimed}"),
        claimed,
        s.observed_min,
        s.pairs,
        s.witness,
        start,
    ))
}
