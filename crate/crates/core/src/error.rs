use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field degree m={0} is outside the supported range 2..=16")]
    FieldDegree(u32),
    #[error("modulus {modulus:#x} is not an irreducible polynomial of degree {m}")]
    ReducibleModulus { m: u32, modulus: u32 },
    #[error("generator {generator:#x} is not primitive in GF(2^{m})")]
    NonPrimitiveGenerator { m: u32, generator: u32 },
    #[error("value {value:#x} is not an element of GF(2^{m})")]
    ElementOutOfRange { m: u32, value: u32 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("word length {0} is outside the supported range 1..=64")]
    WordLength(usize),
    #[error("coordinate {position} is outside 1..={n}")]
    Coordinate { position: usize, n: usize },
    #[error("invalid word {0:?}")]
    InvalidWord(String),
    #[error("words {0} and {1} are not the two ends of an edge")]
    NotAnEdge(String, String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("column map is not a bijection on the field")]
    ColumnsNotDistinct,
    #[error("pairing needs an even source coset and an odd target coset")]
    CosetParity,
    #[error("word {0} is not a member of the source coset")]
    NotInCoset(String),
    #[error("word {0} has odd weight")]
    OddWeight(String),

    #[error("operator {operator} fails the required condition: {condition}")]
    OperatorCondition { operator: String, condition: String },
    #[error("invalid operator literal {literal:?}: {reason}")]
    OperatorLiteral { literal: String, reason: String },
    #[error("gold exponent l={l} is not coprime to m={m}")]
    GoldNotCoprime { m: u32, l: u32 },

    #[error("{what} has {size} elements, above the cap of {cap}")]
    TooLarge { what: String, size: u128, cap: u128 },
    #[error("code needs at least two words, found {0}")]
    TooFewWords(usize),
    #[error("duplicate word {0}")]
    DuplicateWord(String),
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("code file line {line}: {reason}")]
    CodeFile { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
