use rayon::prelude::*;

use super::distance::Symbols;
use super::perfect::TABLE_MAX_N;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// One coordinate fixing: 1-based positions with their values.
pub type Fixing = Vec<(usize, bool)>;

const FREE: u8 = u8::MAX;

/// Direction of the edge through every vertex of the cube, or `FREE`.
fn partner_directions<W: Word>(n: usize, words: &[W]) -> Result<Vec<u8>> {
    if W::ALPHABET != Alphabet::Ternary {
        return Err(Error::Precondition("shortening scan needs ternary words".into()));
    }
    if n > TABLE_MAX_N {
        return Err(Error::TooLarge {
            what: format!("shortening scan at length {n}"),
            size: 1u128 << n,
            cap: 1u128 << TABLE_MAX_N,
        });
    }
    let mut dir = vec![FREE; 1 << n];
    for w in words {
        let s = Symbols::of(w);
        let star = s.stars.trailing_zeros() as u8;
        dir[s.ones as usize] = star;
        dir[(s.ones | s.stars) as usize] = star;
    }
    Ok(dir)
}

/// All `k`-subsets of `0..n` as bit masks, in increasing order.
fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if k == 0 {
        return vec![0];
    }
    let limit = 1u64 << n;
    let mut x = (1u64 << k) - 1;
    while x < limit {
        out.push(x as u32);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

/// Every assignment of values to the coordinates in `mask`, as sub-masks.
fn assignments(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let cur = next?;
        let succ = cur.wrapping_sub(mask) & mask;
        next = (succ != 0).then_some(succ);
        Some(cur)
    })
}

/// Whether every vertex of the subcube `values + span(free)` is matched along
/// a free direction. Stops at the first vertex that is not.
fn subcube_closed(dir: &[u8], free: u32, values: u32) -> bool {
    assignments(free).all(|sub| {
        let d = dir[(values | sub) as usize];
        d != FREE && free >> d & 1 == 1
    })
}

fn fixing(n: usize, free: u32, values: u32) -> Fixing {
    (0..n)
        .filter(|i| free >> i & 1 == 0)
        .map(|i| (i + 1, values >> i & 1 == 1))
        .collect()
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if !k.is_power_of_two() || k < 2 || k >= n {
        Err(Error::Precondition(format!(
            "k = {k} must be a power of two with 2 <= k < n = {n}"
        )))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortenScan {
    pub k: usize,
    pub fixings_checked: u128,
    /// Fixings whose shortened code is a perfect distance-3 code in `X^k`.
    pub found: Vec<Fixing>,
}

/// Try every way of fixing `n - k` coordinates. A shortened code is perfect
/// in `X^k` exactly when the codeword edges inside the subcube match all of
/// its vertices, since the distance conditions are inherited.
pub fn shorten_scan<W: Word>(n: usize, words: &[W], k: usize) -> Result<ShortenScan> {
    check_k(n, k)?;
    let dir = partner_directions(n, words)?;
    let full = ((1u64 << n) - 1) as u32;
    let mut found: Vec<Fixing> = subsets_of_size(n, k)
        .into_par_iter()
        .flat_map_iter(|free| {
            let dir = &dir;
            assignments(full & !free)
                .filter(move |&values| subcube_closed(dir, free, values))
                .map(move |values| fixing(n, free, values))
        })
        .collect();
    found.sort();
    let positions = subsets_of_size(n, k).len() as u128;
    Ok(ShortenScan {
        k,
        fixings_checked: positions << (n - k),
        found,
    })
}

/// The first perfect shortening to `X^k` found, if any.
pub fn shorten_exists<W: Word>(n: usize, words: &[W], k: usize) -> Result<Option<Fixing>> {
    check_k(n, k)?;
    let dir = partner_directions(n, words)?;
    let full = ((1u64 << n) - 1) as u32;
    Ok(subsets_of_size(n, k).into_par_iter().find_map_first(|free| {
        assignments(full & !free)
            .find(|&values| subcube_closed(&dir, free, values))
            .map(|values| fixing(n, free, values))
    }))
}

/// For each power of two `k < n`: can the code be shortened to a perfect
/// code in `X^k`? Coordinate permutations and translations move subcubes to
/// subcubes, so equivalent codes have equal profiles.
pub fn shortening_profile<W: Word>(n: usize, words: &[W]) -> Result<Vec<(usize, bool)>> {
    let ks = std::iter::successors(Some(2usize), |k| Some(k * 2)).take_while(|&k| k < n);
    ks.map(|k| Ok((k, shorten_exists(n, words, k)?.is_some())))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Nonequivalent,
    Inconclusive,
}

impl std::fmt::Display for Equivalence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Equivalence::Nonequivalent => "NONEQUIVALENT",
            Equivalence::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonequivalenceCertificate {
    pub left: Vec<(usize, bool)>,
    pub right: Vec<(usize, bool)>,
    /// First `k` where the profiles differ.
    pub separating_k: Option<usize>,
    pub verdict: Equivalence,
}

pub fn nonequivalence_certificate<W: Word>(
    n: usize,
    left: &[W],
    right: &[W],
) -> Result<NonequivalenceCertificate> {
    if let Some(w) = left.iter().chain(right).find(|w| w.len() != n) {
        return Err(Error::LengthMismatch { left: w.len(), right: n });
    }
    let (l, r) = (shortening_profile(n, left)?, shortening_profile(n, right)?);
    let separating_k = l.iter().zip(&r).find(|(a, b)| a.1 != b.1).map(|(a, _)| a.0);
    Ok(NonequivalenceCertificate {
        verdict: if separating_k.is_some() {
            Equivalence::Nonequivalent
        } else {
            Equivalence::Inconclusive
        },
        left: l,
        right: r,
        separating_k,
    })
}
