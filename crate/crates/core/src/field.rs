//! Arithmetic in GF(2^m) for 2 <= m <= 16.
//!
//! Elements are stored as m-bit polynomial residues. The canonical enumeration
//! of the field puts `alpha_i` at bit pattern `i - 1`, so `alpha_1 = 0`; every
//! construction and file format in the crate indexes columns this way.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MIN_M: u32 = 2;
pub const MAX_M: u32 = 16;

/// Primitive polynomials used when no modulus is given, indexed by `m - 2`.
/// With each of them the element `x` (bit pattern 2) generates the group.
const DEFAULT_MODULI: [u32; 15] = [
    0x7,     // x^2 + x + 1
    0xb,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11d,   // x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201b,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100b, // x^16 + x^12 + x^3 + x + 1
];

/// An element of GF(2^m), as the coefficient vector of a residue polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// A validated description of GF(2^m): degree, irreducible modulus and a
/// primitive generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    m: u32,
    modulus: u32,
    generator: FieldElement,
}

impl FieldSpec {
    pub fn new(m: u32, modulus: u32, generator: u32) -> Result<Self> {
        if !(MIN_M..=MAX_M).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        if degree(modulus) != Some(m) || !is_irreducible(modulus) {
            return Err(Error::ReducibleModulus { m, modulus });
        }
        let spec = FieldSpec {
            m,
            modulus,
            generator: FieldElement(generator),
        };
        if generator >> m != 0 || !spec.is_primitive(FieldElement(generator)) {
            return Err(Error::NonPrimitiveGenerator { m, generator });
        }
        Ok(spec)
    }

    /// The shipped default field of degree `m`, generated by `x`.
    pub fn default_for(m: u32) -> Result<Self> {
        if !(MIN_M..=MAX_M).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        Self::new(m, DEFAULT_MODULI[(m - MIN_M) as usize], 0b10)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// Number of field elements, `2^m`.
    pub fn size(&self) -> usize {
        1usize << self.m
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value >> self.m != 0 {
            return Err(Error::ElementOutOfRange { m: self.m, value });
        }
        Ok(FieldElement(value))
    }

    /// All elements in canonical order: `alpha_i` has bit pattern `i - 1`.
    pub fn enumerate(&self) -> Vec<FieldElement> {
        (0..self.size() as u32).map(FieldElement).collect()
    }

    /// `alpha_i` for a 1-based index.
    pub fn alpha(&self, i: usize) -> FieldElement {
        debug_assert!(i >= 1 && i <= self.size());
        FieldElement((i - 1) as u32)
    }

    /// The 1-based index `i` with `alpha_i = a`.
    pub fn index_of(&self, a: FieldElement) -> usize {
        a.0 as usize + 1
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a + b
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let mut acc: u32 = 0;
        let mut x = a.0;
        let mut y = b.0;
        let top = 1u32 << self.m;
        while y != 0 {
            if y & 1 == 1 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x & top != 0 {
                x ^= self.modulus;
            }
        }
        FieldElement(acc)
    }

    pub fn pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, with `inv(0) = 0`.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        self.pow(a, (1u64 << self.m) - 2)
    }

    /// Multiplicative order of a nonzero element, by repeated multiplication.
    pub fn order(&self, a: FieldElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut x = a;
        let mut k = 1u64;
        while x != FieldElement::ONE {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    fn is_primitive(&self, g: FieldElement) -> bool {
        if g.is_zero() {
            return false;
        }
        let group = (1u64 << self.m) - 1;
        if self.pow(g, group) != FieldElement::ONE {
            return false;
        }
        prime_factors(group)
            .into_iter()
            .all(|p| self.pow(g, group / p) != FieldElement::ONE)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={},mod={:#x},gen={:#x}",
            self.m, self.modulus, self.generator.0
        )
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Parses `m=<int>,mod=0x<hex>,gen=0x<hex>`; `mod` and `gen` fall back to
    /// the defaults for `m` when omitted.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidWord(format!("field spec {s:?}: {reason}"));
        let mut m = None;
        let mut modulus = None;
        let mut generator = None;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            match key.trim() {
                "m" => m = Some(value.trim().parse::<u32>().map_err(|_| bad("bad m"))?),
                "mod" => modulus = Some(parse_hex(value).ok_or_else(|| bad("bad mod"))?),
                "gen" => generator = Some(parse_hex(value).ok_or_else(|| bad("bad gen"))?),
                _ => return Err(bad("unknown key")),
            }
        }
        let m = m.ok_or_else(|| bad("missing m"))?;
        let default = FieldSpec::default_for(m)?;
        FieldSpec::new(
            m,
            modulus.unwrap_or(default.modulus),
            generator.unwrap_or(default.generator.0),
        )
    }
}

pub(crate) fn parse_hex(s: &str) -> Option<u32> {
    let s = s.trim();
    let digits = s
        .strip_prefix("0x")
        .or_else(|| s.strip_prefix("0X"))
        .unwrap_or(s);
    u32::from_str_radix(digits, 16).ok()
}

fn degree(p: u32) -> Option<u32> {
    (p != 0).then(|| 31 - p.leading_zeros())
}

/// Remainder of `a` modulo `b` in GF(2)[x].
fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = degree(b).expect("nonzero divisor");
    while let Some(da) = degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Trial division by every polynomial of degree 1..=deg/2.
fn is_irreducible(p: u32) -> bool {
    let Some(d) = degree(p) else { return false };
    if d == 0 {
        return false;
    }
    for divisor_degree in 1..=d / 2 {
        for low in 0..(1u32 << divisor_degree) {
            let divisor = (1 << divisor_degree) | low;
            if poly_rem(p, divisor) == 0 {
                return false;
            }
        }
    }
    true
}

fn prime_factors(mut k: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= k {
        if k % p == 0 {
            out.push(p);
            while k % p == 0 {
                k /= p;
            }
        }
        p += 1;
    }
    if k > 1 {
        out.push(k);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> FieldSpec {
        FieldSpec::new(3, 0b1011, 0b010).unwrap()
    }

    #[test]
    fn enumeration_convention() {
        let f = FieldSpec::default_for(2).unwrap();
        let all: Vec<u32> = f.enumerate().into_iter().map(|a| a.0).collect();
        assert_eq!(all, vec![0b00, 0b01, 0b10, 0b11]);
        assert_eq!(f.alpha(1), FieldElement::ZERO);

        let f = gf8();
        let all = f.enumerate();
        assert_eq!(all.len(), 8);
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
        for i in 1..=8 {
            assert_eq!(f.index_of(f.alpha(i)), i);
        }
    }

    #[test]
    fn generator_order_in_gf8() {
        assert_eq!(gf8().order(FieldElement(0b010)), Some(7));
    }

    #[test]
    fn add_examples() {
        let f = gf8();
        for a in f.enumerate() {
            assert_eq!(f.add(a, a), FieldElement::ZERO);
            assert_eq!(f.add(a, FieldElement::ZERO), a);
        }
        assert_eq!(f.add(FieldElement(0b011), FieldElement(0b101)), FieldElement(0b110));
    }

    #[test]
    fn mul_examples() {
        let f = gf8();
        for a in f.enumerate() {
            assert_eq!(f.mul(a, FieldElement::ONE), a);
            assert_eq!(f.mul(a, FieldElement::ZERO), FieldElement::ZERO);
        }
        // x * x = x^2; x^2 * x = x^3 = x + 1
        assert_eq!(f.mul(FieldElement(0b010), FieldElement(0b010)), FieldElement(0b100));
        assert_eq!(f.mul(FieldElement(0b100), FieldElement(0b010)), FieldElement(0b011));
    }

    #[test]
    fn inverse_examples() {
        let f = gf8();
        assert_eq!(f.inv(FieldElement::ZERO), FieldElement::ZERO);
        assert_eq!(f.inv(FieldElement::ONE), FieldElement::ONE);
        for a in f.enumerate().into_iter().skip(1) {
            assert_eq!(f.mul(a, f.inv(a)), FieldElement::ONE);
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for m in 2..=4 {
            let f = FieldSpec::default_for(m).unwrap();
            let all = f.enumerate();
            for &a in &all {
                for &b in &all {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &all {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, b + c), f.mul(a, b) + f.mul(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn defaults_are_valid_and_x_is_primitive() {
        for m in MIN_M..=MAX_M {
            let f = FieldSpec::default_for(m).unwrap();
            assert_eq!(f.generator(), FieldElement(2));
        }
        for m in 2..=5 {
            let f = FieldSpec::default_for(m).unwrap();
            assert_eq!(f.order(FieldElement(2)), Some((1 << m) - 1));
        }
    }

    #[test]
    fn rejects_invalid_specs() {
        // x^2 + 1 = (x + 1)^2
        assert!(matches!(
            FieldSpec::new(2, 0b101, 0b10),
            Err(Error::ReducibleModulus { .. })
        ));
        // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5
        assert!(matches!(
            FieldSpec::new(4, 0b11111, 0b10),
            Err(Error::NonPrimitiveGenerator { .. })
        ));
        assert!(FieldSpec::new(4, 0b11111, 0b11).is_ok());
        assert!(matches!(FieldSpec::default_for(1), Err(Error::FieldDegree(1))));
        assert!(matches!(FieldSpec::default_for(17), Err(Error::FieldDegree(17))));
    }

    #[test]
    fn spec_string_round_trip() {
        let f: FieldSpec = "m=4,mod=0x1f,gen=0x3".parse().unwrap();
        assert_eq!(f.modulus(), 0x1f);
        assert_eq!(f.to_string().parse::<FieldSpec>().unwrap(), f);
        let d: FieldSpec = "m=5".parse().unwrap();
        assert_eq!(d, FieldSpec::default_for(5).unwrap());
        assert!("m=3,mod=0x9".parse::<FieldSpec>().is_err());
    }
}
