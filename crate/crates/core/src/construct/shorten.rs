use super::{Code, CodeMeta, Family};
use crate::error::{Error, Result};
use crate::word::Word;

/// Keep the words whose coordinates match every `(position, value)` pair and
/// delete those coordinates.
pub fn shorten<W: Word>(code: &Code<W>, fixed: &[(usize, bool)]) -> Result<Code<W>> {
    let n = code.n();
    let mut seen = vec![false; n + 1];
    for &(position, _) in fixed {
        if position == 0 || position > n {
            return Err(Error::Coordinate { position, n });
        }
        if std::mem::replace(&mut seen[position], true) {
            return Err(Error::Precondition(format!("position {position} fixed twice")));
        }
    }
    if fixed.len() >= n {
        return Err(Error::Precondition("shortening would leave no coordinates".into()));
    }
    let words: Vec<W> = code.words().iter().filter_map(|w| w.restrict(fixed)).collect();
    let fixings: Vec<String> = fixed
        .iter()
        .map(|&(p, v)| format!("{p}={}", u8::from(v)))
        .collect();
    let meta = CodeMeta {
        family: Family::Shortened,
        note: Some(format!("{} shortened at {}", code.meta().family, fixings.join(","))),
        ..code.meta().clone()
    };
    let len = words.len() as u128;
    Code::new(n - fixed.len(), words, meta, code.claimed_distance(), len)
}
