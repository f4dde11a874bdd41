use super::{Code, CodeMeta, Family};
use crate::error::Result;
use crate::word::TernaryWord;

/// A symmetric conference matrix of order 6.
pub const CONFERENCE_MATRIX: [[i8; 6]; 6] = [
    [0, 1, 1, 1, 1, 1],
    [1, 0, 1, -1, -1, 1],
    [1, 1, 0, 1, -1, -1],
    [1, -1, 1, 0, 1, -1],
    [1, -1, -1, 1, 0, 1],
    [1, 1, -1, -1, 1, 0],
];

fn row_word(row: &[i8; 6], plus: bool) -> TernaryWord {
    let star = row.iter().position(|&v| v == 0).expect("zero diagonal") + 1;
    let bits = row.iter().enumerate().fold(0u64, |acc, (i, &v)| {
        let one = if plus { v == 1 } else { v == -1 };
        acc | (u64::from(one) << i)
    });
    TernaryWord::new(6, star, bits)
}

/// The 12-word diameter perfect distance-4 code in `X^6`: each matrix row
/// read with `0 -> *` and `1 -> 0, -1 -> 1`, and again with the signs swapped.
pub fn build_d4_conference() -> Result<Code<TernaryWord>> {
    let words = CONFERENCE_MATRIX
        .iter()
        .flat_map(|row| [row_word(row, false), row_word(row, true)])
        .collect();
    let meta = CodeMeta {
        family: Family::D4Conference,
        note: Some("conference matrix of order 6".into()),
        ..CodeMeta::default()
    };
    Code::new(6, words, meta, 4, 12)
}
