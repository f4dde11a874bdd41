//! Extended Hamming codes over a column assignment, their even and odd
//! cosets, and the distance-1 pairing between an even and an odd coset.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::operator::MOperator;
use crate::word::{BinaryWord, Edge, TernaryWord, Word, MAX_LEN};
use crate::word;

/// Parity bit and field syndrome of a binary word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syndrome {
    pub parity: u8,
    pub value: FieldElement,
}

/// The syndrome columns `(phi(alpha_1), ..., phi(alpha_n))`, together with the
/// tables needed to enumerate cosets and pair words.
#[derive(Debug, Clone)]
pub struct ColumnMap {
    field: FieldSpec,
    columns: Vec<FieldElement>,
    /// `position_of[v]` is the 0-based position whose column is `v`.
    position_of: Vec<u8>,
    /// `m + 1` positions whose extended columns `(1, c_i)` form a basis.
    /// All other positions, increasing.
    free: Vec<u8>,
    /// For each extended syndrome, the set of pivot positions summing to it.
    pivot_solution: Vec<u64>,
    label: String,
}

impl ColumnMap {
    /// Columns `alpha_i` themselves.
    pub fn identity(field: FieldSpec) -> Result<Self> {
        Self::from_columns(field, field.enumerate(), "id".into())
    }

    /// Columns `f(alpha_i)`; `f` must be one-to-one.
    pub fn from_operator(op: &MOperator) -> Result<Self> {
        Self::from_columns(*op.field(), op.table().to_vec(), op.literal().to_string())
    }

    pub fn from_columns(field: FieldSpec, columns: Vec<FieldElement>, label: String) -> Result<Self> {
        let n = field.size();
        if n > MAX_LEN {
            return Err(Error::TooLarge {
                what: format!("Hamming code length 2^{}", field.m()),
                size: n as u128,
                cap: MAX_LEN as u128,
            });
        }
        if columns.len() != n {
            return Err(Error::LengthMismatch {
                left: columns.len(),
                right: n,
            });
        }
        let mut position_of = vec![u8::MAX; n];
        for (i, c) in columns.iter().enumerate() {
            let slot = position_of
                .get_mut(c.0 as usize)
                .ok_or(Error::ColumnsNotDistinct)?;
            if *slot != u8::MAX {
                return Err(Error::ColumnsNotDistinct);
            }
            *slot = i as u8;
        }

        let m = field.m();
        let ext = |i: usize| columns[i].0 | 1 << m;
        // greedy basis of F^{m+1}, kept in echelon form keyed by leading bit
        let mut echelon: Vec<u32> = Vec::new();
        let mut pivots = Vec::new();
        for i in 0..n {
            let mut v = ext(i);
            for &row in &echelon {
                if v ^ row < v {
                    v ^= row;
                }
            }
            if v != 0 {
                echelon.push(v);
                echelon.sort_unstable_by(|a, b| b.cmp(a));
                pivots.push(i as u8);
            }
        }
        debug_assert_eq!(pivots.len(), m as usize + 1);
        let free = (0..n as u8).filter(|i| !pivots.contains(i)).collect();

        let dim = m as usize + 1;
        let mut pivot_solution = vec![0u64; 1 << dim];
        for subset in 1u64..1 << dim {
            let mut s = 0u32;
            let mut positions = 0u64;
            for (k, &p) in pivots.iter().enumerate() {
                if subset >> k & 1 == 1 {
                    s ^= ext(p as usize);
                    positions |= 1 << p;
                }
            }
            pivot_solution[s as usize] = positions;
        }

        Ok(ColumnMap {
            field,
            columns,
            position_of,
            free,
            pivot_solution,
            label,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Code length `n = 2^m`.
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn columns(&self) -> &[FieldElement] {
        &self.columns
    }

    /// Column at a 1-based position.
    pub fn column(&self, position: usize) -> FieldElement {
        self.columns[position - 1]
    }

    /// 1-based position carrying column `value`.
    pub fn position_of(&self, value: FieldElement) -> usize {
        self.position_of[value.0 as usize] as usize + 1
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn syndrome(&self, w: &BinaryWord) -> Result<Syndrome> {
        if w.len() != self.len() {
            return Err(Error::LengthMismatch {
                left: w.len(),
                right: self.len(),
            });
        }
        Ok(self.syndrome_unchecked(w.bits()))
    }

    #[inline]
    fn syndrome_unchecked(&self, mut bits: u64) -> Syndrome {
        let parity = (bits.count_ones() & 1) as u8;
        let mut value = 0u32;
        while bits != 0 {
            value ^= self.columns[bits.trailing_zeros() as usize].0;
            bits &= bits - 1;
        }
        Syndrome {
            parity,
            value: FieldElement(value),
        }
    }
}

/// An even (`parity = 0`) or odd (`parity = 1`) coset `H^parity_beta`.
#[derive(Debug, Clone)]
pub struct Coset {
    columns: Arc<ColumnMap>,
    parity: u8,
    syndrome: FieldElement,
}

impl Coset {
    pub fn new(columns: Arc<ColumnMap>, parity: u8, syndrome: FieldElement) -> Result<Self> {
        if parity > 1 {
            return Err(Error::Precondition(format!("parity {parity} is not a bit")));
        }
        columns.field.element(syndrome.0)?;
        Ok(Coset {
            columns,
            parity,
            syndrome,
        })
    }

    pub fn even(columns: Arc<ColumnMap>, syndrome: FieldElement) -> Result<Self> {
        Self::new(columns, 0, syndrome)
    }

    pub fn odd(columns: Arc<ColumnMap>, syndrome: FieldElement) -> Result<Self> {
        Self::new(columns, 1, syndrome)
    }

    pub fn columns(&self) -> &Arc<ColumnMap> {
        &self.columns
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn syndrome(&self) -> FieldElement {
        self.syndrome
    }

    pub fn word_len(&self) -> usize {
        self.columns.len()
    }

    /// `2^n / 2n`.
    pub fn len(&self) -> u64 {
        1u64 << self.columns.free.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, w: &BinaryWord) -> bool {
        w.len() == self.word_len()
            && self.columns.syndrome_unchecked(w.bits())
                == Syndrome {
                    parity: self.parity,
                    value: self.syndrome,
                }
    }

    /// The member whose free coordinates spell `index`; members are ordered by
    /// increasing index.
    pub fn member_at(&self, index: u64) -> BinaryWord {
        let cm = &*self.columns;
        debug_assert!(index < self.len());
        let mut bits = 0u64;
        for (k, &p) in cm.free.iter().enumerate() {
            bits |= (index >> k & 1) << p;
        }
        let s = cm.syndrome_unchecked(bits);
        let target = (self.parity as u32) << cm.field.m() | self.syndrome.0;
        let have = (s.parity as u32) << cm.field.m() | s.value.0;
        bits |= cm.pivot_solution[(target ^ have) as usize];
        BinaryWord::new(cm.len(), bits)
    }

    pub fn members(&self) -> CosetMembers {
        CosetMembers {
            coset: self.clone(),
            next: 0,
        }
    }
}

/// Streaming iterator over a coset, in increasing free-coordinate order.
#[derive(Debug, Clone)]
pub struct CosetMembers {
    coset: Coset,
    next: u64,
}

impl Iterator for CosetMembers {
    type Item = BinaryWord;

    fn next(&mut self) -> Option<BinaryWord> {
        if self.next >= self.coset.len() {
            return None;
        }
        let w = self.coset.member_at(self.next);
        self.next += 1;
        Some(w)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.coset.len() - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for CosetMembers {}

/// The 1-based coordinate in which `p` must be flipped to land in `q`.
fn flip_position(p: &BinaryWord, from: &Coset, to: &Coset) -> Result<usize> {
    if from.parity != 0 || to.parity != 1 {
        return Err(Error::CosetParity);
    }
    if p.len() != from.word_len() || p.len() != to.word_len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: to.word_len(),
        });
    }
    if !from.contains(p) {
        return Err(Error::NotInCoset(p.to_string()));
    }
    let s = to.columns.syndrome_unchecked(p.bits());
    Ok(to.columns.position_of(s.value + to.syndrome))
}

/// The unique word of the odd coset `to` at distance 1 from `p` in the even
/// coset `from`.
pub fn pair_q(p: &BinaryWord, from: &Coset, to: &Coset) -> Result<BinaryWord> {
    Ok(p.flip(flip_position(p, from, to)?))
}

/// `chi({p, q(p)})`: the ternary word with `*` where `p` and `q(p)` differ.
pub fn pair_r(p: &BinaryWord, from: &Coset, to: &Coset) -> Result<TernaryWord> {
    let i = flip_position(p, from, to)?;
    Ok(word::chi(&Edge::new(*p, i)))
}

/// `R(P, Q) = { r(p) : p in P }`, streamed in the member order of `P`.
pub fn pair_r_all<'a>(from: &'a Coset, to: &'a Coset) -> Result<impl Iterator<Item = TernaryWord> + 'a> {
    if from.parity != 0 || to.parity != 1 {
        return Err(Error::CosetParity);
    }
    Ok(from.members().map(move |p| {
        let s = to.columns.syndrome_unchecked(p.bits());
        let i = to.columns.position_of(s.value + to.syndrome);
        TernaryWord::new(p.len(), i, p.bits())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn cm(m: u32) -> Arc<ColumnMap> {
        Arc::new(ColumnMap::identity(FieldSpec::default_for(m).unwrap()).unwrap())
    }

    #[test]
    fn syndrome_examples() {
        for m in 2..=5 {
            let c = cm(m);
            let n = c.len();
            let zero = c.syndrome(&BinaryWord::zero(n)).unwrap();
            assert_eq!(zero, Syndrome { parity: 0, value: FieldElement::ZERO });
            // the elements of GF(2^m) sum to zero
            let all = c.field().enumerate().into_iter().fold(FieldElement::ZERO, |a, b| a + b);
            assert_eq!(all, FieldElement::ZERO);
            assert_eq!(c.syndrome(&BinaryWord::ones(n)).unwrap(), zero);
            for i in 1..=n {
                let s = c.syndrome(&BinaryWord::unit(n, i)).unwrap();
                assert_eq!(s, Syndrome { parity: 1, value: c.field().alpha(i) });
            }
        }
        assert!(cm(2).syndrome(&BinaryWord::zero(5)).is_err());
    }

    /// Every word of F^n whose syndrome matches, found by scanning the cube.
    fn coset_by_scan(c: &Coset) -> Vec<BinaryWord> {
        let n = c.word_len();
        (0..1u64 << n)
            .map(|b| BinaryWord::new(n, b))
            .filter(|w| {
                let s = c.columns().syndrome(w).unwrap();
                s.parity == c.parity() && s.value == c.syndrome()
            })
            .collect()
    }

    #[test]
    fn members_match_scan() {
        for m in 2..=4 {
            let c = cm(m);
            for parity in 0..2 {
                for beta in c.field().enumerate() {
                    let coset = Coset::new(c.clone(), parity, beta).unwrap();
                    let mut got: Vec<_> = coset.members().collect();
                    assert_eq!(got.len() as u64, coset.len());
                    assert_eq!(got.len(), (1 << c.len()) / (2 * c.len()));
                    got.sort();
                    let mut want = coset_by_scan(&coset);
                    want.sort();
                    assert_eq!(got, want);
                }
            }
        }
    }

    #[test]
    fn coset_sizes_and_distance() {
        let c2 = cm(2);
        assert_eq!(Coset::even(c2, FieldElement::ZERO).unwrap().len(), 2);
        let c3 = cm(3);
        for beta in c3.field().enumerate() {
            assert_eq!(Coset::even(c3.clone(), beta).unwrap().len(), 16);
        }
        let h: Vec<_> = Coset::even(c3, FieldElement::ZERO).unwrap().members().collect();
        let min = h
            .iter()
            .enumerate()
            .flat_map(|(i, a)| h[i + 1..].iter().map(move |b| a.distance(b)))
            .min()
            .unwrap();
        assert_eq!(min, 4);
    }

    #[test]
    fn members_are_in_increasing_index_order_and_deterministic() {
        let c = cm(3);
        let coset = Coset::odd(c, FieldElement(5)).unwrap();
        let a: Vec<_> = coset.members().collect();
        let b: Vec<_> = (0..coset.len()).map(|i| coset.member_at(i)).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn pair_q_m2_unit_vector() {
        let c = cm(2);
        let p = Coset::even(c.clone(), FieldElement::ZERO).unwrap();
        for beta in c.field().enumerate() {
            let q = Coset::odd(c.clone(), beta).unwrap();
            let got = pair_q(&BinaryWord::zero(4), &p, &q).unwrap();
            assert_eq!(got, BinaryWord::unit(4, c.field().index_of(beta)));
        }
    }

    #[test]
    fn pair_q_is_at_distance_one_and_unique() {
        for m in 2..=4 {
            let c = cm(m);
            for beta in c.field().enumerate() {
                for gamma in c.field().enumerate() {
                    let p = Coset::even(c.clone(), beta).unwrap();
                    let q = Coset::odd(c.clone(), gamma).unwrap();
                    for x in p.members() {
                        let y = pair_q(&x, &p, &q).unwrap();
                        assert_eq!(x.distance(&y), 1);
                        assert!(q.contains(&y));
                        let neighbours = (1..=c.len()).filter(|&i| q.contains(&x.flip(i))).count();
                        assert_eq!(neighbours, 1);
                        let r = pair_r(&x, &p, &q).unwrap();
                        assert_eq!(r.distance_to_binary(&x), 1);
                        assert_eq!(r.distance_to_binary(&y), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_is_a_matching_and_r_injective() {
        for m in 2..=4 {
            let ident = cm(m);
            let inverse = MOperator::inverse(*ident.field());
            let other = Arc::new(ColumnMap::from_operator(&inverse).unwrap());
            for q_cols in [ident.clone(), other] {
                let p = Coset::even(ident.clone(), FieldElement(1)).unwrap();
                let q = Coset::odd(q_cols, FieldElement::ZERO).unwrap();
                let mut ends = HashSet::new();
                let mut rs = HashSet::new();
                for x in p.members() {
                    ends.insert(x);
                    ends.insert(pair_q(&x, &p, &q).unwrap());
                    rs.insert(pair_r(&x, &p, &q).unwrap());
                }
                assert_eq!(ends.len() as u64, 2 * p.len());
                assert_eq!(rs.len() as u64, p.len());
                let rs: Vec<_> = rs.into_iter().collect();
                let min = rs
                    .iter()
                    .enumerate()
                    .flat_map(|(i, a)| rs[i + 1..].iter().map(move |b| a.distance(b)))
                    .min()
                    .unwrap();
                assert!(min >= 3, "m={m} min={min}");
            }
        }
    }

    #[test]
    fn pair_r_m2_concrete() {
        let c = cm(2);
        let p = Coset::even(c.clone(), FieldElement(0b00)).unwrap();
        let q = Coset::odd(c, FieldElement(0b01)).unwrap();
        let mut r: Vec<String> = pair_r_all(&p, &q).unwrap().map(|w| w.to_string()).collect();
        r.sort();
        // H^0_0 = {0000, 1111}; alpha_2 = 01 so the flip is in coordinate 2
        assert_eq!(r, vec!["0*00", "1*11"]);
    }

    #[test]
    fn pairing_rejects_wrong_parities_and_non_members() {
        let c = cm(3);
        let even = Coset::even(c.clone(), FieldElement::ZERO).unwrap();
        let odd = Coset::odd(c, FieldElement::ZERO).unwrap();
        let x = BinaryWord::zero(8);
        assert!(matches!(pair_q(&x, &odd, &odd), Err(Error::CosetParity)));
        assert!(matches!(pair_q(&x, &even, &even), Err(Error::CosetParity)));
        assert!(matches!(
            pair_q(&BinaryWord::ones(8).flip(1).flip(2), &even, &odd),
            Err(Error::NotInCoset(_))
        ));
    }

    #[test]
    fn column_map_rejects_repeats() {
        let f = FieldSpec::default_for(2).unwrap();
        let cols = vec![FieldElement(0), FieldElement(1), FieldElement(1), FieldElement(3)];
        assert!(matches!(
            ColumnMap::from_columns(f, cols, "x".into()),
            Err(Error::ColumnsNotDistinct)
        ));
        assert!(ColumnMap::identity(FieldSpec::default_for(7).unwrap()).is_err());
    }
}
