//! Codes in `X^n`, the words over `{0, 1, *}` with exactly one `*`, read as
//! edges of the binary hypercube: builders for the perfect and diameter
//! perfect families, and checkers that share no code path with them.

pub mod codefile;
pub mod construct;
pub mod coset;
pub mod error;
pub mod field;
pub mod operator;
pub mod report;
pub mod verify;
pub mod word;

pub use construct::{
    build_d3, build_d4_conference, build_d5, build_preparata, shorten, Code, CodeMeta,
    D3Construction, D5Construction, Family, PreparataConstruction,
};
pub use codefile::{read_code, write_code, AnyCode};
pub use coset::{pair_q, pair_r, pair_r_all, ColumnMap, Coset, Syndrome};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use report::{CheckReport, Mode, Verdict};
pub use operator::{parse_operator, BitMatrix, MOperator, OperatorKind};
pub use word::{
    anticode_a, ball, chi, chi_inv, diameter, edge_distance, enumerate_space, hamming_distance,
    space_size, square_anticode, Alphabet, AnyWord, Automorphism, BinaryWord, Edge, Symbol,
    TernaryWord, Word,
};
