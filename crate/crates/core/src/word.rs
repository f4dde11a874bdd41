//! The binary cube `F^n = {0,1}^n`, the space `X^n` of words over `{0,1,*}`
//! with exactly one `*`, the edge bijection between them, distances,
//! anticodes and coordinate automorphisms.
//!
//! Coordinates are 1-based in every public method. Internally coordinate `i`
//! lives at bit `i - 1`. Text rendering prints coordinate 1 first.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_LEN: usize = 64;

#[inline]
fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_len(n: usize) -> Result<()> {
    if n == 0 || n > MAX_LEN {
        Err(Error::WordLength(n))
    } else {
        Ok(())
    }
}


/// Compare two bit vectors coordinate 1 first.
#[inline]
fn lex_bits(a: u64, b: u64) -> Ordering {
    a.reverse_bits().cmp(&b.reverse_bits())
}

/// Common behaviour of the two word types a [`crate::Code`] can hold.
pub trait Word:
    Copy + Eq + Hash + Ord + fmt::Display + fmt::Debug + Send + Sync + 'static
{
    const ALPHABET: Alphabet;

    fn len(&self) -> usize;

    /// Hamming distance to a word of the same length.
    fn distance(&self, other: &Self) -> usize;

    fn parse(s: &str) -> Result<Self>;

    /// If every `(position, value)` pair matches this word, the word with
    /// those coordinates deleted.
    fn restrict(&self, fixed: &[(usize, bool)]) -> Option<Self>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    Binary,
    /// Words of `X^n`: ternary, weight `n - 1` after relabeling.
    Ternary,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::Binary => "binary",
            Alphabet::Ternary => "ternary",
        })
    }
}

/// One coordinate of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Zero,
    One,
    Star,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Star => '*',
        }
    }
}

/// Keep the coordinates outside `removed` (a bit mask), packing them down.
fn compress(bits: u64, n: usize, removed: u64) -> u64 {
    let mut out = 0u64;
    let mut k = 0;
    for i in 0..n {
        if removed >> i & 1 == 0 {
            out |= (bits >> i & 1) << k;
            k += 1;
        }
    }
    out
}

fn fixing_masks(fixed: &[(usize, bool)], n: usize) -> Option<(u64, u64)> {
    let mut positions = 0u64;
    let mut values = 0u64;
    for &(pos, value) in fixed {
        if pos == 0 || pos > n {
            return None;
        }
        positions |= 1 << (pos - 1);
        values |= (value as u64) << (pos - 1);
    }
    Some((positions, values))
}

// ---------------------------------------------------------------------------

/// An element of `F^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    n: u8,
    bits: u64,
}

impl BinaryWord {
    /// # Panics
    /// If `n` is not in `1..=64` or `bits` has bits at or above `n`.
    pub fn new(n: usize, bits: u64) -> Self {
        assert!((1..=MAX_LEN).contains(&n), "word length {n}");
        assert_eq!(bits & !mask(n), 0, "bits beyond length {n}");
        BinaryWord { n: n as u8, bits }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(n, 0)
    }

    pub fn ones(n: usize) -> Self {
        Self::new(n, mask(n))
    }

    /// The unit vector with a one at `position`.
    pub fn unit(n: usize, position: usize) -> Self {
        assert!(position >= 1 && position <= n);
        Self::new(n, 1 << (position - 1))
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn bit(&self, position: usize) -> bool {
        debug_assert!(position >= 1 && position <= self.len());
        self.bits >> (position - 1) & 1 == 1
    }

    pub fn flip(&self, position: usize) -> Self {
        debug_assert!(position >= 1 && position <= self.len());
        BinaryWord {
            n: self.n,
            bits: self.bits ^ (1 << (position - 1)),
        }
    }

    /// Coordinate-wise sum mod 2.
    pub fn xor(&self, other: &BinaryWord) -> Self {
        debug_assert_eq!(self.n, other.n);
        BinaryWord {
            n: self.n,
            bits: self.bits ^ other.bits,
        }
    }

    /// `(self, tail)` as one word of length `len + tail.len`.
    pub fn concat(&self, tail: &BinaryWord) -> Self {
        let n = self.len() + tail.len();
        Self::new(n, self.bits | tail.bits << self.n)
    }

    pub fn symbol(&self, position: usize) -> Symbol {
        if self.bit(position) {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }
}

impl Word for BinaryWord {
    const ALPHABET: Alphabet = Alphabet::Binary;

    fn len(&self) -> usize {
        self.n as usize
    }

    fn distance(&self, other: &Self) -> usize {
        debug_assert_eq!(self.n, other.n);
        (self.bits ^ other.bits).count_ones() as usize
    }

    fn parse(s: &str) -> Result<Self> {
        s.parse()
    }

    fn restrict(&self, fixed: &[(usize, bool)]) -> Option<Self> {
        let n = self.len();
        let (positions, values) = fixing_masks(fixed, n)?;
        if self.bits & positions != values || positions.count_ones() as usize >= n {
            return None;
        }
        let k = n - positions.count_ones() as usize;
        Some(BinaryWord::new(k, compress(self.bits, n, positions)))
    }
}

impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| lex_bits(self.bits, other.bits))
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        check_len(s.len()).map_err(|_| Error::InvalidWord(s.to_string()))?;
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::InvalidWord(s.to_string())),
            }
        }
        Ok(BinaryWord::new(s.len(), bits))
    }
}

// ---------------------------------------------------------------------------

/// An element of `X^n`. The bit under the star is kept at 0 so that equality
/// and hashing are bitwise.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TernaryWord {
    n: u8,
    star: u8,
    bits: u64,
}

impl TernaryWord {
    /// Builds the word with `*` at `star` (1-based); the bit of `bits` at the
    /// star is ignored.
    ///
    /// # Panics
    /// If `n` is not in `1..=64`, `star` is not a coordinate, or `bits` has bits
    /// at or above `n`.
    pub fn new(n: usize, star: usize, bits: u64) -> Self {
        assert!((1..=MAX_LEN).contains(&n), "word length {n}");
        assert!(star >= 1 && star <= n, "star {star} outside 1..={n}");
        assert_eq!(bits & !mask(n), 0, "bits beyond length {n}");
        TernaryWord {
            n: n as u8,
            star: (star - 1) as u8,
            bits: bits & !(1 << (star - 1)),
        }
    }

    /// 1-based position of the star.
    pub fn star(&self) -> usize {
        self.star as usize + 1
    }

    /// The bits with a 0 under the star.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub(crate) fn star_mask(&self) -> u64 {
        1u64 << self.star
    }

    pub fn symbol(&self, position: usize) -> Symbol {
        debug_assert!(position >= 1 && position <= self.len());
        if position - 1 == self.star as usize {
            Symbol::Star
        } else if self.bits >> (position - 1) & 1 == 1 {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    /// The binary word obtained by writing `value` in place of the star.
    pub fn fill(&self, value: bool) -> BinaryWord {
        BinaryWord {
            n: self.n,
            bits: self.bits | (value as u64) << self.star,
        }
    }

    /// Distance to a binary word: the star always differs.
    pub fn distance_to_binary(&self, x: &BinaryWord) -> usize {
        debug_assert_eq!(self.n, x.n);
        1 + ((self.bits ^ x.bits) & !self.star_mask()).count_ones() as usize
    }
}

impl Word for TernaryWord {
    const ALPHABET: Alphabet = Alphabet::Ternary;

    fn len(&self) -> usize {
        self.n as usize
    }

    #[inline]
    fn distance(&self, other: &Self) -> usize {
        debug_assert_eq!(self.n, other.n);
        if self.star == other.star {
            (self.bits ^ other.bits).count_ones() as usize
        } else {
            let stars = self.star_mask() | other.star_mask();
            2 + ((self.bits ^ other.bits) & !stars).count_ones() as usize
        }
    }

    fn parse(s: &str) -> Result<Self> {
        s.parse()
    }

    fn restrict(&self, fixed: &[(usize, bool)]) -> Option<Self> {
        let n = self.len();
        let (positions, values) = fixing_masks(fixed, n)?;
        if positions & self.star_mask() != 0 || self.bits & positions != values {
            return None;
        }
        let k = n - positions.count_ones() as usize;
        let below = (positions & (self.star_mask() - 1)).count_ones() as usize;
        Some(TernaryWord::new(
            k,
            self.star() - below,
            compress(self.bits, n, positions),
        ))
    }
}

impl Ord for TernaryWord {
    /// Lexicographic on the rendering, coordinate 1 first, with `* < 0 < 1`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            let first_star = self.star.min(other.star);
            let low = (1u64 << first_star) - 1;
            match lex_bits(self.bits & low, other.bits & low) {
                Ordering::Equal => self.star.cmp(&other.star).then_with(|| {
                    // same star: plain bit comparison decides
                    lex_bits(self.bits, other.bits)
                }),
                ord => ord,
            }
        })
    }
}

impl PartialOrd for TernaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            write!(f, "{}", self.symbol(i).as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryWord({self})")
    }
}

impl FromStr for TernaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidWord(s.to_string());
        check_len(s.len()).map_err(|_| bad())?;
        let mut bits = 0u64;
        let mut star = None;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                '*' if star.is_none() => star = Some(i + 1),
                _ => return Err(bad()),
            }
        }
        Ok(TernaryWord::new(s.len(), star.ok_or_else(bad)?, bits))
    }
}

// ---------------------------------------------------------------------------

/// A binary or ternary word, for operations that accept either.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnyWord {
    Binary(BinaryWord),
    Ternary(TernaryWord),
}

impl AnyWord {
    pub fn len(&self) -> usize {
        match self {
            AnyWord::Binary(w) => w.len(),
            AnyWord::Ternary(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl From<BinaryWord> for AnyWord {
    fn from(w: BinaryWord) -> Self {
        AnyWord::Binary(w)
    }
}

impl From<TernaryWord> for AnyWord {
    fn from(w: TernaryWord) -> Self {
        AnyWord::Ternary(w)
    }
}

impl fmt::Display for AnyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyWord::Binary(w) => w.fmt(f),
            AnyWord::Ternary(w) => w.fmt(f),
        }
    }
}

impl FromStr for AnyWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains('*') {
            s.parse().map(AnyWord::Ternary)
        } else {
            s.parse().map(AnyWord::Binary)
        }
    }
}

/// Number of positions in which two words differ; `*` differs from both `0`
/// and `1` and equals only another `*`.
pub fn hamming_distance(a: impl Into<AnyWord>, b: impl Into<AnyWord>) -> Result<usize> {
    let (a, b) = (a.into(), b.into());
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(match (a, b) {
        (AnyWord::Binary(x), AnyWord::Binary(y)) => x.distance(&y),
        (AnyWord::Ternary(x), AnyWord::Ternary(y)) => x.distance(&y),
        (AnyWord::Binary(x), AnyWord::Ternary(t)) | (AnyWord::Ternary(t), AnyWord::Binary(x)) => {
            t.distance_to_binary(&x)
        }
    })
}

/// Size of `X^n`, `n * 2^(n-1)`.
pub fn space_size(n: usize) -> u128 {
    n as u128 * (1u128 << (n - 1))
}

/// Every word of `X^n`, star position outermost.
pub fn enumerate_space(n: usize) -> impl Iterator<Item = TernaryWord> {
    assert!((1..=30).contains(&n), "X^{n} is too large to enumerate");
    (1..=n).flat_map(move |star| {
        (0..1u64 << n)
            .filter(move |bits| bits >> (star - 1) & 1 == 0)
            .map(move |bits| TernaryWord::new(n, star, bits))
    })
}

// ---------------------------------------------------------------------------

/// An edge `{x, x'}` of the cube, stored as its endpoint with a 0 in the
/// edge direction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    base: BinaryWord,
    direction: u8,
}

impl Edge {
    /// The edge through `base` in `direction` (1-based); the bit of `base` in
    /// that direction is ignored.
    pub fn new(base: BinaryWord, direction: usize) -> Self {
        assert!(direction >= 1 && direction <= base.len());
        Edge {
            base: BinaryWord {
                n: base.n,
                bits: base.bits & !(1 << (direction - 1)),
            },
            direction: (direction - 1) as u8,
        }
    }

    pub fn from_endpoints(x: BinaryWord, y: BinaryWord) -> Result<Self> {
        if x.n != y.n || x.distance(&y) != 1 {
            return Err(Error::NotAnEdge(x.to_string(), y.to_string()));
        }
        let direction = (x.bits ^ y.bits).trailing_zeros() as usize + 1;
        Ok(Edge::new(x, direction))
    }

    pub fn base(&self) -> BinaryWord {
        self.base
    }

    pub fn direction(&self) -> usize {
        self.direction as usize + 1
    }

    pub fn endpoints(&self) -> (BinaryWord, BinaryWord) {
        (self.base, self.base.flip(self.direction()))
    }

    /// The endpoint of even weight.
    pub fn even_end(&self) -> BinaryWord {
        let (x, y) = self.endpoints();
        if x.weight() % 2 == 0 {
            x
        } else {
            y
        }
    }

    pub fn is_parallel(&self, other: &Edge) -> bool {
        self.direction == other.direction
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.endpoints();
        write!(f, "{{{x}, {y}}}")
    }
}

/// Replace the direction coordinate of the edge by `*`.
pub fn chi(e: &Edge) -> TernaryWord {
    TernaryWord::new(e.base.len(), e.direction(), e.base.bits)
}

pub fn chi_inv(t: &TernaryWord) -> Edge {
    Edge::new(BinaryWord::new(t.len(), t.bits), t.star())
}

/// Distance between edges computed on the cube: the smallest distance between
/// endpoints, plus 2 when the directions differ.
pub fn edge_distance(e1: &Edge, e2: &Edge) -> usize {
    let (x, x1) = e1.endpoints();
    let (y, y1) = e2.endpoints();
    let cross = [x.distance(&y), x.distance(&y1), x1.distance(&y), x1.distance(&y1)]
        .into_iter()
        .min()
        .unwrap();
    if e1.is_parallel(e2) {
        cross
    } else {
        cross + 2
    }
}

/// Visit every subset of `positions` (a mask over `0..n`) with at most `k`
/// elements.
fn for_each_small_subset(positions: u64, k: usize, mut visit: impl FnMut(u64)) {
    fn rec(remaining: u64, k: usize, acc: u64, visit: &mut dyn FnMut(u64)) {
        visit(acc);
        if k == 0 {
            return;
        }
        let mut rest = remaining;
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            rest ^= low;
            rec(rest, k - 1, acc | low, visit);
        }
    }
    rec(positions, k, 0, &mut visit);
}

/// All words of `X^n` within `radius` of `center`, sorted.
pub fn ball(center: impl Into<AnyWord>, radius: usize) -> Vec<TernaryWord> {
    let center = center.into();
    let n = center.len();
    let all = mask(n);
    let mut out = Vec::new();
    match center {
        AnyWord::Binary(z) => {
            if radius >= 1 {
                for s in 0..n {
                    let star = 1u64 << s;
                    for_each_small_subset(all & !star, radius - 1, |flips| {
                        out.push(TernaryWord::new(n, s + 1, (z.bits ^ flips) & !star));
                    });
                }
            }
        }
        AnyWord::Ternary(z) => {
            let t = z.star_mask();
            for s in 0..n {
                let star = 1u64 << s;
                if star == t {
                    for_each_small_subset(all & !t, radius, |flips| {
                        out.push(TernaryWord::new(n, s + 1, z.bits ^ flips));
                    });
                } else if radius >= 2 {
                    // both star positions differ; the old star position takes either bit
                    for fill in [0, t] {
                        for_each_small_subset(all & !t & !star, radius - 2, |flips| {
                            out.push(TernaryWord::new(n, s + 1, (z.bits ^ flips ^ fill) & !star));
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// The diameter-3 anticode `B_z ∪ B_{z0} ∪ B_{z1}` around a ternary word and
/// its two binary neighbours.
pub fn anticode_a(z: &TernaryWord) -> Vec<TernaryWord> {
    let set: BTreeSet<TernaryWord> = ball(*z, 1)
        .into_iter()
        .chain(ball(z.fill(false), 1))
        .chain(ball(z.fill(true), 1))
        .collect();
    set.into_iter().collect()
}

/// The square diameter-2 anticode `{*0.., 0*.., *1.., 1*..}`, zero padded.
pub fn square_anticode(n: usize) -> Vec<TernaryWord> {
    assert!(n >= 2, "square anticode needs n >= 2");
    let mut v = vec![
        TernaryWord::new(n, 1, 0),
        TernaryWord::new(n, 2, 0),
        TernaryWord::new(n, 1, 0b10),
        TernaryWord::new(n, 2, 0b01),
    ];
    v.sort();
    v
}

/// Maximum pairwise distance; 0 for fewer than two words.
pub fn diameter<W: Word>(words: &[W]) -> usize {
    let mut best = 0;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            best = best.max(a.distance(b));
        }
    }
    best
}

// ---------------------------------------------------------------------------

/// A coordinate permutation followed by a translation: `x -> pi(x) + z`, where
/// coordinate `i` of `x` moves to `pi(i)` and the star absorbs the shift.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    /// `perm[i] = pi(i + 1) - 1`.
    perm: Vec<u8>,
    shift: BinaryWord,
}

impl Automorphism {
    /// `perm[i - 1] = pi(i)` with 1-based images.
    pub fn new(perm: &[usize], shift: BinaryWord) -> Result<Self> {
        let n = perm.len();
        if n != shift.len() {
            return Err(Error::LengthMismatch {
                left: n,
                right: shift.len(),
            });
        }
        let mut seen = 0u64;
        for &p in perm {
            if p == 0 || p > n || seen >> (p - 1) & 1 == 1 {
                return Err(Error::InvalidPermutation(format!("{perm:?}")));
            }
            seen |= 1 << (p - 1);
        }
        Ok(Automorphism {
            perm: perm.iter().map(|&p| (p - 1) as u8).collect(),
            shift,
        })
    }

    pub fn identity(n: usize) -> Self {
        Automorphism {
            perm: (0..n as u8).collect(),
            shift: BinaryWord::zero(n),
        }
    }

    pub fn translation(shift: BinaryWord) -> Self {
        Automorphism {
            shift,
            ..Self::identity(shift.len())
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// `pi(i)` for a 1-based coordinate.
    pub fn image(&self, i: usize) -> usize {
        self.perm[i - 1] as usize + 1
    }

    pub fn shift(&self) -> BinaryWord {
        self.shift
    }

    fn permute_bits(&self, bits: u64) -> u64 {
        let mut out = 0u64;
        for (i, &p) in self.perm.iter().enumerate() {
            out |= (bits >> i & 1) << p;
        }
        out
    }

    /// `pi(x)` without the translation.
    pub fn permute(&self, x: &BinaryWord) -> BinaryWord {
        BinaryWord::new(x.len(), self.permute_bits(x.bits))
    }

    pub fn apply_binary(&self, x: &BinaryWord) -> BinaryWord {
        debug_assert_eq!(x.len(), self.len());
        BinaryWord::new(x.len(), self.permute_bits(x.bits) ^ self.shift.bits)
    }

    pub fn apply_ternary(&self, x: &TernaryWord) -> TernaryWord {
        debug_assert_eq!(x.len(), self.len());
        let star = self.perm[x.star as usize] as usize + 1;
        TernaryWord::new(
            x.len(),
            star,
            self.permute_bits(x.bits) ^ self.shift.bits & !(1 << (star - 1)),
        )
    }

    pub fn apply(&self, w: &AnyWord) -> AnyWord {
        match w {
            AnyWord::Binary(x) => AnyWord::Binary(self.apply_binary(x)),
            AnyWord::Ternary(x) => AnyWord::Ternary(self.apply_ternary(x)),
        }
    }

    /// `(pi^-1, pi^-1(z))`.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        let mut t = Automorphism {
            perm: inv,
            shift: BinaryWord::zero(self.len()),
        };
        t.shift = t.permute(&self.shift);
        t
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Automorphism {
            perm: other.perm.iter().map(|&p| self.perm[p as usize]).collect(),
            shift: self.permute(&other.shift).xor(&self.shift),
        }
    }
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<usize> = (1..=self.len()).map(|i| self.image(i)).collect();
        write!(f, "Automorphism(pi={images:?}, z={})", self.shift)
    }
}
