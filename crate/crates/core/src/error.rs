use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid extremal class (m = {m}, r = {r}): {reason}")]
    InvalidClass { m: u32, r: u32, reason: String },

    #[error("unsupported harmonic case (t = {t}, r = {r}); supported (t, r) pairs: {supported}")]
    UnsupportedCase { t: u32, r: u32, supported: String },

    #[error("harmonic case (t = {t}, r = {r}) needs m >= {min_m}, got m = {m}")]
    CaseTooSmall { t: u32, r: u32, m: u32, min_m: u32 },

    #[error("index {index} out of range for the {what}; valid range is {valid}")]
    IndexOutOfRange {
        what: String,
        index: i64,
        valid: String,
    },

    #[error("weight {w} is not a valid design weight for n = {n}: expected w ≡ 0 (mod 4) with {lo} <= w <= {hi}")]
    InvalidWeight { w: u32, n: u32, lo: u32, hi: u32 },

    #[error("invalid assumption: {0}")]
    InvalidAssumption(String),

    #[error("singular elimination at basis index {0}")]
    Degenerate(usize),

    #[error("code dimension {k} exceeds the enumeration bound {max}")]
    TooLarge { k: usize, max: usize },

    #[error("{count} subsets exceed the brute-force bound {max}")]
    TooManySubsets { count: String, max: u64 },

    #[error("invalid generator matrix: {0}")]
    InvalidGenerator(String),

    #[error("no codewords of weight {w}; available nonzero weights: {available:?}")]
    EmptyDesign { w: usize, available: Vec<usize> },

    #[error("unknown built-in code '{0}'; known: golay24, hamming8")]
    UnknownCode(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
