//! Builders for the code families: perfect distance-3 codes from pairs of
//! Hamming cosets, distance-5 codes from an APN permutation, the length-6
//! distance-4 code and the binary Preparata-like codes.

mod conference;
mod d3;
mod d5;
mod preparata;
mod shorten;

use std::fmt;
use std::str::FromStr;

pub use conference::{build_d4_conference, CONFERENCE_MATRIX};
pub use d3::{build_d3, D3Construction};
pub use d5::{build_d5, D5Construction};
pub use preparata::{build_preparata, PreparataConstruction};
pub use shorten::shorten;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::word::Word;

/// Codes above this many words are only available as membership tests and
/// streams.
pub const MATERIALIZE_CAP: u128 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Family {
    D3,
    D5,
    D4Conference,
    Preparata,
    Shortened,
    #[default]
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::D3 => "d3",
            Family::D5 => "d5",
            Family::D4Conference => "d4conf",
            Family::Preparata => "preparata",
            Family::Shortened => "shortened",
            Family::Custom => "custom",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "d3" => Family::D3,
            "d5" => Family::D5,
            "d4conf" => Family::D4Conference,
            "preparata" => Family::Preparata,
            "shortened" => Family::Shortened,
            "custom" => Family::Custom,
            other => return Err(Error::Precondition(format!("unknown family {other:?}"))),
        })
    }
}

/// Where a code came from.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CodeMeta {
    pub family: Family,
    pub field: Option<FieldSpec>,
    /// Operator literal, re-parsable with [`crate::parse_operator`].
    pub operator: Option<String>,
    pub provenance: Option<String>,
    /// Syndrome of the odd coset `Q` for the distance-5 family.
    pub syndrome: Option<FieldElement>,
    /// For the distance-3 family: `directions[beta]` is the 1-based star
    /// position shared by every word of block `beta`.
    pub directions: Vec<usize>,
    pub note: Option<String>,
}

/// A finite set of words of one length, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code<W: Word> {
    n: usize,
    words: Vec<W>,
    meta: CodeMeta,
    claimed_distance: usize,
    claimed_cardinality: u128,
}

impl<W: Word> Code<W> {
    /// Sorts the words; rejects words of another length and duplicates.
    pub fn new(
        n: usize,
        mut words: Vec<W>,
        meta: CodeMeta,
        claimed_distance: usize,
        claimed_cardinality: u128,
    ) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| w.len() != n) {
            return Err(Error::LengthMismatch {
                left: w.len(),
                right: n,
            });
        }
        words.sort_unstable();
        if let Some(pair) = words.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::DuplicateWord(pair[0].to_string()));
        }
        Ok(Code {
            n,
            words,
            meta,
            claimed_distance,
            claimed_cardinality,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[W] {
        &self.words
    }

    pub fn into_words(self) -> Vec<W> {
        self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Fewer than two words: not a code in the strict sense.
    pub fn is_degenerate(&self) -> bool {
        self.words.len() < 2
    }

    pub fn contains(&self, w: &W) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn meta(&self) -> &CodeMeta {
        &self.meta
    }

    pub fn claimed_distance(&self) -> usize {
        self.claimed_distance
    }

    pub fn claimed_cardinality(&self) -> u128 {
        self.claimed_cardinality
    }
}

fn check_cap(what: &str, size: u128) -> Result<()> {
    if size > MATERIALIZE_CAP {
        Err(Error::TooLarge {
            what: what.to_string(),
            size,
            cap: MATERIALIZE_CAP,
        })
    } else {
        Ok(())
    }
}

fn pow_mod(mut base: u128, mut exp: u128, modulus: u128) -> u128 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// A perfect distance-3 code in `X^n` needs `n` to divide `2^(n-1)`, the
/// number of words with the star in a fixed position.
pub fn perfect_d3_length_admissible(n: u64) -> bool {
    n >= 1 && pow_mod(2, n as u128 - 1, n as u128) == 0
}

/// A diameter perfect distance-4 code in `X^n` needs `3n - 2` to divide
/// `|X^n| = n 2^(n-1)`.
pub fn d4_length_admissible(n: u64) -> bool {
    if n < 1 {
        return false;
    }
    let modulus = 3 * n as u128 - 2;
    (n as u128 % modulus) * pow_mod(2, n as u128 - 1, modulus) % modulus == 0
}

/// The admissible distance-4 length `(2^(2m) + 2) / 3`.
pub fn d4_length_for(m: u32) -> u64 {
    ((1u64 << (2 * m)) + 2) / 3
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d3_lengths_are_powers_of_two() {
        for n in 1..=200u64 {
            assert_eq!(perfect_d3_length_admissible(n), n.is_power_of_two(), "n={n}");
        }
    }

    #[test]
    fn d4_lengths_follow_the_closed_form() {
        assert_eq!(
            (1..=3).map(d4_length_for).collect::<Vec<_>>(),
            vec![2, 6, 22]
        );
        let closed: Vec<u64> = (1..=5).map(d4_length_for).collect();
        for n in 2..=400u64 {
            assert_eq!(d4_length_admissible(n), closed.contains(&n), "n={n}");
        }
    }

    #[test]
    fn code_rejects_duplicates_and_mixed_lengths() {
        use crate::word::BinaryWord;
        let w = BinaryWord::zero(4);
        assert!(matches!(
            Code::new(4, vec![w, w], CodeMeta::default(), 1, 2),
            Err(Error::DuplicateWord(_))
        ));
        assert!(Code::new(4, vec![w, BinaryWord::zero(3)], CodeMeta::default(), 1, 2).is_err());
        let c = Code::new(4, vec![BinaryWord::ones(4), w], CodeMeta::default(), 4, 2).unwrap();
        assert_eq!(c.words()[0], w);
        assert!(c.contains(&w) && !c.is_degenerate());
    }
}
