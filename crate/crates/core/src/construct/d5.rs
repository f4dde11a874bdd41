use std::sync::Arc;

use rand::Rng;

use super::{check_cap, Code, CodeMeta, Family};
use crate::coset::{pair_r, ColumnMap, Coset};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::operator::MOperator;
use crate::word::{chi_inv, TernaryWord, Word};

/// The distance-5 code `R(P, Q)` where `P = H^0_0` over the columns
/// `alpha_i` and `Q = H^1_beta` over the columns `f(alpha_i)`, for a one-to-one
/// APN operator `f`.
#[derive(Debug, Clone)]
pub struct D5Construction {
    op: MOperator,
    p: Coset,
    q: Coset,
}

impl D5Construction {
    pub fn new(op: MOperator) -> Result<Self> {
        Self::with_syndrome(op, FieldElement::ZERO)
    }

    pub fn with_syndrome(op: MOperator, syndrome: FieldElement) -> Result<Self> {
        let fail = |condition: &str| Error::OperatorCondition {
            operator: op.provenance().to_string(),
            condition: condition.to_string(),
        };
        if !op.is_bijective() {
            return Err(fail("f is one-to-one"));
        }
        if !op.is_apn() {
            return Err(fail("f is APN"));
        }
        let p = Coset::even(Arc::new(ColumnMap::identity(*op.field())?), FieldElement::ZERO)?;
        let q = Coset::odd(Arc::new(ColumnMap::from_operator(&op)?), syndrome)?;
        Ok(D5Construction { op, p, q })
    }

    pub fn field(&self) -> &FieldSpec {
        self.op.field()
    }

    pub fn operator(&self) -> &MOperator {
        &self.op
    }

    pub fn n(&self) -> usize {
        self.p.word_len()
    }

    pub fn p(&self) -> &Coset {
        &self.p
    }

    pub fn q(&self) -> &Coset {
        &self.q
    }

    /// `2^n / 2n`.
    pub fn cardinality(&self) -> u128 {
        self.p.len() as u128
    }

    pub fn words(&self) -> impl Iterator<Item = TernaryWord> + '_ {
        self.p
            .members()
            .map(move |x| pair_r(&x, &self.p, &self.q).expect("member of P"))
    }

    pub fn word_at(&self, index: u64) -> TernaryWord {
        pair_r(&self.p.member_at(index), &self.p, &self.q).expect("member of P")
    }

    /// A uniformly random codeword.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> TernaryWord {
        self.word_at(rng.gen_range(0..self.p.len()))
    }

    pub fn contains(&self, t: &TernaryWord) -> bool {
        if t.len() != self.n() {
            return false;
        }
        let (x, y) = chi_inv(t).endpoints();
        let (even, odd) = if x.weight() % 2 == 0 { (x, y) } else { (y, x) };
        self.p.contains(&even) && self.q.contains(&odd)
    }

    pub fn meta(&self) -> CodeMeta {
        CodeMeta {
            family: Family::D5,
            field: Some(*self.field()),
            operator: Some(self.op.literal().to_string()),
            provenance: Some(self.op.provenance().to_string()),
            syndrome: Some(self.q.syndrome()),
            ..CodeMeta::default()
        }
    }

    pub fn materialize(&self) -> Result<Code<TernaryWord>> {
        check_cap("distance-5 code", self.cardinality())?;
        Code::new(self.n(), self.words().collect(), self.meta(), 5, self.cardinality())
    }
}

/// Materialized `R(P, Q)` with the default syndrome `0`.
pub fn build_d5(op: MOperator) -> Result<Code<TernaryWord>> {
    D5Construction::new(op)?.materialize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::parse_operator;

    fn op(m: u32, lit: &str) -> MOperator {
        parse_operator(lit, FieldSpec::default_for(m).unwrap()).unwrap()
    }

    #[test]
    fn cardinalities() {
        assert_eq!(build_d5(op(3, "pow:3")).unwrap().len(), 16);
        let c = D5Construction::new(op(5, "pow:3")).unwrap();
        assert_eq!(c.cardinality(), 1 << 26);
        assert!(matches!(c.materialize(), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn rejects_non_apn_or_singular() {
        assert!(D5Construction::new(op(3, "gamma")).is_err());
        assert!(D5Construction::new(op(4, "pow:3")).is_err());
    }

    #[test]
    fn membership_agrees_with_enumeration() {
        let c = D5Construction::with_syndrome(op(3, "inv"), FieldElement(5)).unwrap();
        let code = c.materialize().unwrap();
        assert_eq!(code.meta().syndrome, Some(FieldElement(5)));
        for w in crate::word::enumerate_space(8) {
            assert_eq!(c.contains(&w), code.contains(&w), "{w}");
        }
    }

    #[test]
    fn samples_are_codewords() {
        use rand::SeedableRng;
        let c = D5Construction::new(op(5, "pow:3")).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            assert!(c.contains(&c.sample(&mut rng)));
        }
    }
}
