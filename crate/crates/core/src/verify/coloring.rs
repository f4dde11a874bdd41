use std::time::Instant;

use super::distance::Symbols;
use crate::error::{Error, Result};
use crate::report::{CheckReport, Mode};
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringReport {
    /// `|C1|`, `|C2|`.
    pub sizes: (usize, usize),
    /// Distinct `(neighbours in C1, neighbours in C2)` counts seen in `C1`.
    pub c1_profiles: Vec<(usize, usize)>,
    pub c2_profiles: Vec<(usize, usize)>,
    pub report: CheckReport,
}

/// Split the binary cube into `C1`, the vertices at distance 1 from the
/// ternary code, and the rest `C2`, and check the neighbour counts
/// `((1, n-1), (n/2, n/2))`.
pub fn check_perfect_coloring<W: Word>(n: usize, words: &[W]) -> Result<ColoringReport> {
    let start = Instant::now();
    if W::ALPHABET != Alphabet::Ternary {
        return Err(Error::Precondition("coloring check needs ternary words".into()));
    }
    if n > 16 || n % 2 == 1 {
        return Err(Error::Precondition(format!("coloring check needs even n <= 16, got {n}")));
    }
    let symbols: Vec<Symbols> = words.iter().map(Symbols::of).collect();
    // a binary x is at distance 1 from t iff it agrees with t off the star
    let in_c1: Vec<bool> = (0..1u64 << n)
        .map(|x| {
            symbols
                .iter()
                .any(|s| ((x ^ s.ones) & !s.stars) == 0)
        })
        .collect();
    let mut c1_profiles = Vec::new();
    let mut c2_profiles = Vec::new();
    let mut witness = None;
    for x in 0..1u64 << n {
        let ones = (0..n).filter(|i| in_c1[(x ^ (1 << i)) as usize]).count();
        let profile = (ones, n - ones);
        let (profiles, want) = if in_c1[x as usize] {
            (&mut c1_profiles, (1, n - 1))
        } else {
            (&mut c2_profiles, (n / 2, n / 2))
        };
        if !profiles.contains(&profile) {
            profiles.push(profile);
        }
        if profile != want && witness.is_none() {
            witness = Some(format!("vertex {x:#x} has neighbour counts {profile:?}, expected {want:?}"));
        }
    }
    c1_profiles.sort();
    c2_profiles.sort();
    let c1 = in_c1.iter().filter(|&&b| b).count();
    let sizes = (c1, (1 << n) - c1);
    let report = CheckReport::new(
        "perfect-coloring",
        "vertices at distance 1 from the code and the rest form a perfect coloring ((1,n-1),(n/2,n/2))",
        Mode::Exact,
    )
    .values(
        format!("C1 {c1_profiles:?}, C2 {c2_profiles:?}, |C1|={}, |C2|={}", sizes.0, sizes.1),
        format!("C1 [(1, {})], C2 [({}, {})]", n - 1, n / 2, n / 2),
    )
    .pass_if(witness.is_none())
    .witness(witness)
    .runtime(start);
    Ok(ColoringReport {
        sizes,
        c1_profiles,
        c2_profiles,
        report,
    })
}
