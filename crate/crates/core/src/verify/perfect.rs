use std::time::Instant;

use super::distance::{max_distance, min_distance, Symbols};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Mode};
use crate::word::{Alphabet, Word};

/// Largest length for checks that tabulate all of `X^n` or `{0,1}^n`.
pub const TABLE_MAX_N: usize = 20;

fn check_table_len(n: usize) -> Result<()> {
    if n == 0 || n > TABLE_MAX_N {
        Err(Error::TooLarge {
            what: format!("table over words of length {n}"),
            size: 1u128 << n.min(127),
            cap: 1u128 << TABLE_MAX_N,
        })
    } else {
        Ok(())
    }
}

/// `|X^n|` or `2^n`.
pub fn ambient_size<W: Word>(n: usize) -> u128 {
    match W::ALPHABET {
        Alphabet::Binary => 1u128 << n,
        Alphabet::Ternary => (n as u128) << (n - 1),
    }
}

/// Render a ternary word from its star position and bits.
fn render(n: usize, star: usize, ones: u64) -> String {
    (0..n)
        .map(|i| {
            if i == star {
                '*'
            } else if ones >> i & 1 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

/// Whether the radius-1 balls around the words tile `X^n`. On failure the
/// witness is an uncovered or doubly covered word.
pub fn check_perfect_d3<W: Word>(n: usize, words: &[W]) -> Result<CheckReport> {
    let start = Instant::now();
    let report = CheckReport::new(
        "perfect-d3",
        "radius-1 balls around the codewords are disjoint and cover X^n",
        Mode::Exact,
    );
    if W::ALPHABET != Alphabet::Ternary {
        return Err(Error::Precondition("perfectness check needs ternary words".into()));
    }
    check_table_len(n)?;
    let mut cover = vec![0u8; n << n];
    for w in words {
        let s = Symbols::of(w);
        let star = s.stars.trailing_zeros() as usize;
        let base = star << n;
        cover[base | s.ones as usize] += 1;
        for i in (0..n).filter(|&i| i != star) {
            let c = &mut cover[base | (s.ones ^ (1 << i)) as usize];
            *c = c.saturating_add(1);
        }
    }
    let mut covered = 0u128;
    let mut witness = None;
    for star in 0..n {
        for ones in 0..1u64 << n {
            if ones >> star & 1 == 1 {
                continue;
            }
            match cover[(star << n) | ones as usize] {
                1 => covered += 1,
                c if witness.is_none() => {
                    witness = Some(format!("{} covered {c} times", render(n, star, ones)))
                }
                _ => {}
            }
        }
    }
    let total = ambient_size::<W>(n);
    Ok(report
        .values(format!("{covered} words covered once"), total)
        .pass_if(witness.is_none() && covered == total)
        .witness(witness)
        .runtime(start))
}

pub fn is_perfect_d3<W: Word>(n: usize, words: &[W]) -> bool {
    check_perfect_d3(n, words).map(|r| r.passed()).unwrap_or(false)
}

/// Compare `|C| |A|` with the size of the whole space after checking that
/// the anticode's diameter is below the code's distance. With `equality`
/// the check asks for a diameter perfect code, otherwise only for the bound.
fn anticode_check<W: Word>(
    n: usize,
    code: &[W],
    anticode: &[W],
    equality: bool,
) -> Result<CheckReport> {
    let start = Instant::now();
    let (name, claim) = if equality {
        ("diameter-perfect", "|C| |A| equals the size of the space")
    } else {
        ("anticode-bound", "|C| |A| is at most the size of the space")
    };
    let report = CheckReport::new(name, claim, Mode::Exact);
    let (d, pair) = min_distance(code)?;
    let diam = max_distance(anticode);
    let product = code.len() as u128 * anticode.len() as u128;
    let total = ambient_size::<W>(n);
    let measured = format!("{} * {} = {product}, diam(A) = {diam}, d(C) = {d}", code.len(), anticode.len());
    if diam >= d {
        return Ok(report
            .values(measured, format!("diam(A) < {d}"))
            .pass_if(false)
            .witness(Some(format!("code pair {} {} at distance {d}", pair.0, pair.1)))
            .runtime(start));
    }
    let ok = if equality { product == total } else { product <= total };
    Ok(report
        .values(measured, format!("{}{total}", if equality { "" } else { "<= " }))
        .pass_if(ok)
        .runtime(start))
}

pub fn is_diameter_perfect<W: Word>(n: usize, code: &[W], anticode: &[W]) -> Result<CheckReport> {
    anticode_check(n, code, anticode, true)
}

pub fn check_anticode_bound<W: Word>(n: usize, code: &[W], anticode: &[W]) -> Result<CheckReport> {
    anticode_check(n, code, anticode, false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingReport {
    /// No vertex lies on two edges.
    pub is_matching: bool,
    /// Every vertex is covered; `None` unless there are `2^(n-1)` edges.
    pub is_perfect: Option<bool>,
    /// No two parallel edges at distance 1 or 2.
    pub parallel_far: bool,
    pub witness: Option<String>,
    pub report: CheckReport,
}

/// Read each ternary word as an edge of the cube and check the matching
/// conditions that characterize perfect distance-3 codes.
pub fn check_matching<W: Word>(n: usize, words: &[W]) -> Result<MatchingReport> {
    let start = Instant::now();
    if W::ALPHABET != Alphabet::Ternary {
        return Err(Error::Precondition("matching check needs ternary words".into()));
    }
    check_table_len(n)?;
    const FREE: u8 = u8::MAX;
    // direction of the edge through each vertex
    let mut owner = vec![FREE; 1 << n];
    let mut witness = None;
    let mut is_matching = true;
    for w in words {
        let s = Symbols::of(w);
        let star = s.stars.trailing_zeros() as u8;
        for v in [s.ones, s.ones | s.stars] {
            let slot = &mut owner[v as usize];
            if *slot != FREE {
                is_matching = false;
                witness.get_or_insert_with(|| format!("vertex {v:#x} on two edges, one is {w}"));
            }
            *slot = star;
        }
    }
    let is_perfect = (words.len() as u128 == 1u128 << (n - 1))
        .then(|| owner.iter().all(|&d| d != FREE));
    if is_perfect == Some(false) {
        witness.get_or_insert_with(|| "some vertex is uncovered".into());
    }
    let mut parallel_far = true;
    'edges: for w in words {
        let s = Symbols::of(w);
        let star = s.stars.trailing_zeros();
        let others: Vec<u32> = (0..n as u32).filter(|&i| i != star).collect();
        for (a, &i) in others.iter().enumerate() {
            for &j in &others[a..] {
                let v = s.ones ^ (1 << i) ^ if i == j { 0 } else { 1 << j };
                if owner[v as usize] == star as u8 {
                    parallel_far = false;
                    witness.get_or_insert_with(|| {
                        format!("{w} has a parallel edge through vertex {v:#x}")
                    });
                    break 'edges;
                }
            }
        }
    }
    let ok = is_matching && is_perfect != Some(false) && parallel_far;
    let report = CheckReport::new(
        "matching",
        "codewords form a perfect matching of the cube with no parallel edges at distance 1 or 2",
        Mode::Exact,
    )
    .values(
        format!(
            "matching={is_matching} perfect={} parallel_far={parallel_far}",
            is_perfect.map_or("n/a".to_string(), |p| p.to_string())
        ),
        "matching=true perfect=true parallel_far=true",
    )
    .pass_if(ok)
    .witness(witness.clone())
    .runtime(start);
    Ok(MatchingReport {
        is_matching,
        is_perfect,
        parallel_far,
        witness,
        report,
    })
}
