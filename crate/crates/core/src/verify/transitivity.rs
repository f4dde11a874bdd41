use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;

use crate::construct::D3Construction;
use crate::error::{Error, Result};
use crate::report::{CheckReport, Mode};
use crate::word::{BinaryWord, TernaryWord, Word};

pub const TRANSITIVITY_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitivityReport {
    pub base: TernaryWord,
    pub targets: usize,
    /// Targets `t` with `tau(base) = t`.
    pub reached: usize,
    /// Targets whose `tau` maps the word set onto itself.
    pub closed: usize,
    pub report: CheckReport,
}

fn even_end(t: &TernaryWord) -> BinaryWord {
    let x = t.fill(false);
    if x.weight() % 2 == 0 {
        x
    } else {
        t.fill(true)
    }
}

/// For every word `t`, build `tau = tau_{p'} o tau_{p0}^{-1}` from the even
/// endpoints `p0` of the base word (the one covering `0^n`) and `p'` of `t`,
/// then check `tau(base) = t` and that `tau` preserves the word set.
pub fn check_transitivity(
    words: &[TernaryWord],
    construction: &D3Construction,
) -> Result<TransitivityReport> {
    let start = Instant::now();
    let n = construction.n();
    if n > TRANSITIVITY_MAX_N {
        return Err(Error::TooLarge {
            what: format!("orbit walk at length {n}"),
            size: n as u128,
            cap: TRANSITIVITY_MAX_N as u128,
        });
    }
    if let Some(w) = words.iter().find(|w| w.len() != n) {
        return Err(Error::LengthMismatch { left: w.len(), right: n });
    }
    let zero = BinaryWord::zero(n);
    let base = *words
        .iter()
        .find(|t| t.distance_to_binary(&zero) == 1)
        .ok_or_else(|| Error::Precondition("no word covers the zero vertex".into()))?;
    let set: HashSet<TernaryWord> = words.iter().copied().collect();
    let back = construction.tau(&even_end(&base))?.inverse();
    let results: Vec<(bool, bool, TernaryWord)> = words
        .par_iter()
        .map(|t| {
            let tau = construction.tau(&even_end(t)).expect("even endpoint").compose(&back);
            let reached = tau.apply_ternary(&base) == *t;
            let closed = words.iter().all(|w| set.contains(&tau.apply_ternary(w)));
            (reached, closed, *t)
        })
        .collect();
    let reached = results.iter().filter(|r| r.0).count();
    let closed = results.iter().filter(|r| r.1).count();
    let witness = results
        .iter()
        .find(|r| !(r.0 && r.1))
        .map(|r| format!("target {} reached={} closed={}", r.2, r.0, r.1));
    let report = CheckReport::new(
        "transitivity",
        "the automorphism group of the code acts transitively on its words",
        Mode::Exact,
    )
    .values(
        format!("{reached} reached, {closed} closed"),
        format!("{} of each", words.len()),
    )
    .pass_if(witness.is_none())
    .witness(witness)
    .runtime(start);
    Ok(TransitivityReport {
        base,
        targets: words.len(),
        reached,
        closed,
        report,
    })
}
