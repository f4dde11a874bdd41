use std::sync::Arc;

use rand::Rng;

use super::{check_cap, Code, CodeMeta, Family};
use crate::coset::{pair_r, ColumnMap, Coset};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::operator::MOperator;
use crate::word::{chi, Automorphism, BinaryWord, Edge, TernaryWord, Word};

/// The perfect distance-3 code `C_{H,f}`: the union over `beta` of
/// `R(H^0_beta, H^1_{f(beta)})` for a linear `f` with `f` and `f + Id`
/// one-to-one.
#[derive(Debug, Clone)]
pub struct D3Construction {
    op: MOperator,
    columns: Arc<ColumnMap>,
    f_inverse: Vec<FieldElement>,
}

impl D3Construction {
    pub fn new(op: MOperator) -> Result<Self> {
        let fail = |condition: &str| Error::OperatorCondition {
            operator: op.provenance().to_string(),
            condition: condition.to_string(),
        };
        if !op.is_linear() {
            return Err(fail("f is linear"));
        }
        if !op.is_bijective() {
            return Err(fail("f is one-to-one"));
        }
        if !op.is_f_plus_id_bijective() {
            return Err(fail("f + Id is one-to-one"));
        }
        let columns = Arc::new(ColumnMap::identity(*op.field())?);
        let mut f_inverse = vec![FieldElement::ZERO; op.field().size()];
        for x in op.field().enumerate() {
            f_inverse[op.apply(x).0 as usize] = x;
        }
        Ok(D3Construction {
            op,
            columns,
            f_inverse,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        self.op.field()
    }

    pub fn operator(&self) -> &MOperator {
        &self.op
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    /// `2^(n-1)`.
    pub fn cardinality(&self) -> u128 {
        1u128 << (self.n() - 1)
    }

    /// The cosets `(H^0_beta, H^1_{f(beta)})` of block `beta`.
    pub fn block(&self, beta: FieldElement) -> (Coset, Coset) {
        let p = Coset::even(self.columns.clone(), beta).expect("beta in field");
        let q = Coset::odd(self.columns.clone(), self.op.apply(beta)).expect("f(beta) in field");
        (p, q)
    }

    /// Star position of every word of block `beta`: `alpha_i = beta + f(beta)`.
    pub fn direction(&self, beta: FieldElement) -> usize {
        self.field().index_of(beta + self.op.apply(beta))
    }

    /// All codewords, block by block, in coset member order.
    pub fn words(&self) -> impl Iterator<Item = TernaryWord> + '_ {
        self.field().enumerate().into_iter().flat_map(move |beta| {
            let (p, q) = self.block(beta);
            (0..p.len()).map(move |k| pair_r(&p.member_at(k), &p, &q).expect("member of P"))
        })
    }

    pub fn contains(&self, t: &TernaryWord) -> bool {
        if t.len() != self.n() {
            return false;
        }
        let edge = crate::word::chi_inv(t);
        let p = edge.even_end();
        let beta = self.columns.syndrome(&p).expect("length checked").value;
        let q = p.flip(t.star());
        self.columns.syndrome(&q).expect("length checked").value == self.op.apply(beta)
    }

    /// The codeword whose edge contains `x`.
    pub fn codeword_covering(&self, x: &BinaryWord) -> Result<TernaryWord> {
        let s = self.columns.syndrome(x)?;
        let beta = if s.parity == 0 {
            s.value
        } else {
            self.f_inverse[s.value.0 as usize]
        };
        let direction = self.direction(beta);
        Ok(chi(&Edge::new(*x, direction)))
    }

    /// A uniformly random codeword: every word covers exactly two vertices.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> TernaryWord {
        let n = self.n();
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let x = BinaryWord::new(n, rng.gen::<u64>() & mask);
        self.codeword_covering(&x).expect("length matches")
    }

    /// The automorphism `(pi_z, z)` sending the codeword covering `0^n` to the
    /// codeword covering `z`, where `alpha_{pi_z(i)} = alpha_i + s_z + f(s_z)`
    /// and `s_z` is the syndrome of `z`.
    pub fn tau(&self, z: &BinaryWord) -> Result<Automorphism> {
        if z.weight() % 2 == 1 {
            return Err(Error::OddWeight(z.to_string()));
        }
        let field = self.field();
        let s_z = self.columns.syndrome(z)?.value;
        let delta = s_z + self.op.apply(s_z);
        let perm: Vec<usize> = (1..=self.n())
            .map(|i| field.index_of(field.alpha(i) + delta))
            .collect();
        Automorphism::new(&perm, *z)
    }

    pub fn meta(&self) -> CodeMeta {
        CodeMeta {
            family: Family::D3,
            field: Some(*self.field()),
            operator: Some(self.op.literal().to_string()),
            provenance: Some(self.op.provenance().to_string()),
            syndrome: None,
            directions: self
                .field()
                .enumerate()
                .into_iter()
                .map(|beta| self.direction(beta))
                .collect(),
            note: None,
        }
    }

    pub fn materialize(&self) -> Result<Code<TernaryWord>> {
        check_cap("distance-3 code", self.cardinality())?;
        let words: Vec<_> = self.words().collect();
        debug_assert_eq!(words.len() as u128, self.cardinality());
        Code::new(self.n(), words, self.meta(), 3, self.cardinality())
    }
}

/// Materialized `C_{H,f}` for `n <= 2^20` words.
pub fn build_d3(op: MOperator) -> Result<Code<TernaryWord>> {
    D3Construction::new(op)?.materialize()
}
