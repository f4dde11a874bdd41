use std::sync::Arc;

use super::{check_cap, Code, CodeMeta, Family};
use crate::coset::{pair_q, ColumnMap, Coset};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::operator::MOperator;
use crate::word::{BinaryWord, MAX_LEN};

/// The binary code `{(a + b + q(b), a + q(b)) : a, b in P}` of length `2n`,
/// where `P = H^0_0` over `alpha_i` and `Q = H^1_0` over `f(alpha_i)`.
#[derive(Debug, Clone)]
pub struct PreparataConstruction {
    op: MOperator,
    p: Coset,
    q: Coset,
}

impl PreparataConstruction {
    /// Requires `f` one-to-one, APN and free of six distinct solutions to the
    /// mixed sum system (checked by a full scan, so `m <= 8`).
    pub fn new(op: MOperator) -> Result<Self> {
        let n = op.field().size();
        if 2 * n > MAX_LEN {
            return Err(Error::WordLength(2 * n));
        }
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
        if !op.satisfies_propf()? {
            return Err(fail("no six distinct solutions of the sum system"));
        }
        let p = Coset::even(Arc::new(ColumnMap::identity(*op.field())?), FieldElement::ZERO)?;
        let q = Coset::odd(Arc::new(ColumnMap::from_operator(&op)?), FieldElement::ZERO)?;
        Ok(PreparataConstruction { op, p, q })
    }

    pub fn field(&self) -> &FieldSpec {
        self.op.field()
    }

    pub fn half_len(&self) -> usize {
        self.p.word_len()
    }

    /// `2^(2n) / 4n^2`.
    pub fn cardinality(&self) -> u128 {
        (self.p.len() as u128).pow(2)
    }

    pub fn p(&self) -> &Coset {
        &self.p
    }

    pub fn q(&self) -> &Coset {
        &self.q
    }

    /// `(a + b + q(b), a + q(b))`.
    pub fn codeword(&self, a: &BinaryWord, b: &BinaryWord) -> Result<BinaryWord> {
        if !self.p.contains(a) {
            return Err(Error::NotInCoset(a.to_string()));
        }
        let qb = pair_q(b, &self.p, &self.q)?;
        Ok(a.xor(b).xor(&qb).concat(&a.xor(&qb)))
    }

    /// `(a + w(b), a + b + w(b))` with `w(b)` the weight-one vector leading
    /// from `b` into `Q`, found by trying every unit vector.
    pub fn codeword_uv(&self, a: &BinaryWord, b: &BinaryWord) -> Result<BinaryWord> {
        if !self.p.contains(a) {
            return Err(Error::NotInCoset(a.to_string()));
        }
        if !self.p.contains(b) {
            return Err(Error::NotInCoset(b.to_string()));
        }
        let n = self.half_len();
        let omega = (1..=n)
            .map(|i| BinaryWord::unit(n, i))
            .find(|e| self.q.contains(&b.xor(e)))
            .ok_or_else(|| Error::NotInCoset(b.to_string()))?;
        Ok(a.xor(&omega).concat(&a.xor(b).xor(&omega)))
    }

    pub fn meta(&self) -> CodeMeta {
        CodeMeta {
            family: Family::Preparata,
            field: Some(*self.field()),
            operator: Some(self.op.literal().to_string()),
            provenance: Some(self.op.provenance().to_string()),
            syndrome: Some(FieldElement::ZERO),
            ..CodeMeta::default()
        }
    }

    fn build(&self, uv: bool) -> Result<Code<BinaryWord>> {
        check_cap("Preparata-like code", self.cardinality())?;
        let members: Vec<BinaryWord> = self.p.members().collect();
        let mut words = Vec::with_capacity(members.len() * members.len());
        for a in &members {
            for b in &members {
                words.push(if uv {
                    self.codeword_uv(a, b)?
                } else {
                    self.codeword(a, b)?
                });
            }
        }
        Code::new(2 * self.half_len(), words, self.meta(), 6, self.cardinality())
    }

    pub fn materialize(&self) -> Result<Code<BinaryWord>> {
        self.build(false)
    }

    /// The same code assembled from the `(u, u + v)`-style form.
    pub fn materialize_uv(&self) -> Result<Code<BinaryWord>> {
        self.build(true)
    }
}

pub fn build_preparata(op: MOperator) -> Result<Code<BinaryWord>> {
    PreparataConstruction::new(op)?.materialize()
}
