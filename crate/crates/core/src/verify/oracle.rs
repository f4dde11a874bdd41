use crate::coset::Coset;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::operator::MOperator;
use crate::word::{BinaryWord, Word};

pub const CF_MAX_M: u32 = 4;

/// Minimum distance of the linear code `{x : sum x_i = 0, sum x_i alpha_i = 0,
/// sum x_i f(alpha_i) = 0}` by enumerating all of `{0,1}^n`. `None` when the
/// code is `{0}`.
pub fn check_cf_distance(spec: &FieldSpec, f: &MOperator) -> Result<Option<usize>> {
    let m = spec.m();
    if m > CF_MAX_M {
        return Err(Error::TooLarge {
            what: format!("exhaustive C_f at m = {m}"),
            size: 1u128 << (1u32 << m),
            cap: 1u128 << (1u32 << CF_MAX_M),
        });
    }
    if f.field() != spec {
        return Err(Error::Precondition("operator over a different field".into()));
    }
    let n = spec.size();
    // constraint column of coordinate i: parity bit, alpha_i, f(alpha_i)
    let cols: Vec<u64> = (1..=n)
        .map(|i| {
            let a = spec.alpha(i);
            1 | (u64::from(a.0) << 1) | (u64::from(f.apply(a).0) << (1 + m))
        })
        .collect();
    // walk the cube in Gray code order, updating the syndrome one column at a time
    let mut syndrome = 0u64;
    let mut best: Option<usize> = None;
    for step in 1..1u64 << n {
        let i = step.trailing_zeros() as usize;
        syndrome ^= cols[i];
        if syndrome == 0 {
            let gray = step ^ (step >> 1);
            let w = gray.count_ones() as usize;
            best = Some(best.map_or(w, |b| b.min(w)));
        }
    }
    Ok(best)
}

/// Membership in a coset read off its column list, without the coset's own
/// syndrome tables.
fn member(w: &BinaryWord, coset: &Coset) -> bool {
    let cols = coset.columns().columns();
    let mut parity = 0u8;
    let mut sum = 0u32;
    for (i, c) in cols.iter().enumerate() {
        if w.bit(i + 1) {
            parity ^= 1;
            sum ^= c.0;
        }
    }
    parity == coset.parity() && sum == coset.syndrome().0
}

/// The neighbours of `p` that lie in `to`, found by trying all `n` flips.
pub fn pair_q_by_ball(p: &BinaryWord, to: &Coset) -> Vec<BinaryWord> {
    (1..=p.len())
        .map(|i| p.flip(i))
        .filter(|q| member(q, to))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::parse_operator;

    #[test]
    fn cube_map_at_m3_gives_repetition_code() {
        let spec = FieldSpec::default_for(3).unwrap();
        let f = parse_operator("pow:3", spec).unwrap();
        assert_eq!(check_cf_distance(&spec, &f).unwrap(), Some(8));
    }

    #[test]
    fn linear_operator_gives_extended_hamming_code() {
        // f linear: the third constraint is implied by the second
        let spec = FieldSpec::default_for(3).unwrap();
        let f = parse_operator("gamma", spec).unwrap();
        assert_eq!(check_cf_distance(&spec, &f).unwrap(), Some(4));
    }

    #[test]
    fn rejects_large_or_mismatched() {
        let s5 = FieldSpec::default_for(5).unwrap();
        let f5 = parse_operator("pow:3", s5).unwrap();
        assert!(check_cf_distance(&s5, &f5).is_err());
        let s3 = FieldSpec::default_for(3).unwrap();
        assert!(check_cf_distance(&s3, &parse_operator("pow:3", FieldSpec::default_for(4).unwrap()).unwrap()).is_err());
    }
}
