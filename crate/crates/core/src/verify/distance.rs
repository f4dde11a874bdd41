use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::word::Word;

/// A word re-read from its rendering: positions holding `1` and `*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Symbols {
    pub ones: u64,
    pub stars: u64,
}

impl Symbols {
    pub fn of<W: Word>(w: &W) -> Self {
        let mut s = Symbols { ones: 0, stars: 0 };
        for (i, c) in w.to_string().chars().enumerate() {
            match c {
                '1' => s.ones |= 1 << i,
                '*' => s.stars |= 1 << i,
                _ => {}
            }
        }
        s
    }

    /// Number of positions with different symbols.
    #[inline]
    pub fn distance(&self, other: &Symbols) -> usize {
        ((self.ones ^ other.ones) | (self.stars ^ other.stars)).count_ones() as usize
    }
}

/// Exact minimum distance over all pairs, with one pair achieving it.
pub fn min_distance<W: Word>(words: &[W]) -> Result<(usize, (W, W))> {
    if words.len() < 2 {
        return Err(Error::TooFewWords(words.len()));
    }
    let symbols: Vec<Symbols> = words.iter().map(Symbols::of).collect();
    let (d, i, j) = (0..symbols.len() - 1)
        .into_par_iter()
        .map(|i| {
            let a = symbols[i];
            let mut best = (usize::MAX, i, i);
            for (j, b) in symbols.iter().enumerate().skip(i + 1) {
                let d = a.distance(b);
                if d < best.0 {
                    best = (d, i, j);
                }
            }
            best
        })
        .min()
        .expect("at least one row");
    Ok((d, (words[i], words[j])))
}

/// Largest distance over all pairs; 0 for fewer than two words.
pub fn max_distance<W: Word>(words: &[W]) -> usize {
    let symbols: Vec<Symbols> = words.iter().map(Symbols::of).collect();
    (0..symbols.len())
        .into_par_iter()
        .map(|i| {
            symbols[i + 1..]
                .iter()
                .map(|b| symbols[i].distance(b))
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledDistance<W> {
    /// Smallest distance seen: an upper bound on the true minimum.
    pub observed_min: usize,
    pub witness: Option<(W, W)>,
    pub pairs: u64,
    /// Pairs where both draws gave the same word; not counted in `pairs`.
    pub collisions: u64,
}

/// Draw `pairs` random pairs of distinct words with `sample` from a ChaCha
/// stream seeded by `seed`.
pub fn sampled_min_distance<W: Word>(
    mut sample: impl FnMut(&mut ChaCha8Rng) -> W,
    pairs: u64,
    seed: u64,
) -> SampledDistance<W> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SampledDistance {
        observed_min: usize::MAX,
        witness: None,
        pairs: 0,
        collisions: 0,
    };
    while out.pairs < pairs {
        let (a, b) = (sample(&mut rng), sample(&mut rng));
        if a == b {
            out.collisions += 1;
            continue;
        }
        out.pairs += 1;
        let d = Symbols::of(&a).distance(&Symbols::of(&b));
        if d < out.observed_min {
            out.observed_min = d;
            out.witness = Some((a, b));
        }
    }
    out
}

/// [`sampled_min_distance`] over uniform draws from a word list.
pub fn sampled_min_distance_in<W: Word>(words: &[W], pairs: u64, seed: u64) -> Result<SampledDistance<W>> {
    use rand::Rng;
    if words.len() < 2 {
        return Err(Error::TooFewWords(words.len()));
    }
    Ok(sampled_min_distance(|rng| words[rng.gen_range(0..words.len())], pairs, seed))
}
