use thiserror::Error;

/// Errors produced by any layer of the kit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the supported maximum of 2^20")]
    FieldTooLarge(u128),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("unknown field preset `{0}`")]
    UnknownPreset(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("alpha is undefined in a prime field")]
    AlphaInPrimeField,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid specification: {0}")]
    SpecInvalid(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix must be square")]
    NonSquare,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("division by the zero polynomial")]
    ZeroPolyDivision,
    #[error("gcd of an all-zero collection is undefined")]
    GcdOfZeros,
    #[error("constacyclic generator polynomial must be nonzero")]
    ZeroGenerator,

    #[error("the zero code has no minimum distance")]
    TrivialCode,
    #[error("enumeration needs {needed} steps, exceeding the cap of {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("word {0} is not a codeword of constituent code {1}")]
    NotACodeword(String, usize),

    #[error("generator polynomial matrix row {0} is all zero")]
    ZeroGpmRow(usize),
    #[error("T does not have the constacyclic shift form")]
    NotShiftForm,
    #[error("constituent code {0} carries no constacyclic generator")]
    NoConstacyclicGenerator(usize),
    #[error("polynomial degree r = {r} requires r <= m - 1 = {max}")]
    DegreeTooHigh { r: usize, max: usize },

    #[error("the stacked rows span only the zero code")]
    ZeroSpan,
    #[error("NSC is defined only for M <= N, got {rows}x{cols}")]
    NscShape { rows: usize, cols: usize },
    #[error("subset enumeration supports at most {max} columns, got {cols}")]
    TooManyColumns { cols: usize, max: usize },

    #[error("malformed registry store: {0}")]
    Store(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("invalid spec file: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
