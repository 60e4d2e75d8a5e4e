use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("matrix is not invertible over F2")]
    NotInvertible,

    #[error("polynomial is not symmetric (transposition ({0} {1}) changes it)")]
    NotSymmetric(usize, usize),

    #[error("exponent {exponent} is out of range (minimum allowed is {minimum})")]
    ExponentOutOfRange { exponent: i32, minimum: i32 },

    #[error("degree cap {cap} is below the required degree {needed}")]
    CapTooSmall { cap: i32, needed: i32 },

    #[error("size {n} exceeds the supported maximum {max}")]
    SizeTooLarge { n: usize, max: usize },

    #[error("size {0} is not supported")]
    SizeOutOfRange(usize),

    #[error("group algebra elements have different sizes: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("Steinberg idempotent for n = {0} failed the idempotency check")]
    NotIdempotent(usize),

    #[error("expected a nonzero input")]
    ZeroInput,

    #[error("expected a homogeneous input")]
    NotHomogeneous,

    #[error(transparent)]
    Parse(#[from] crate::expr::ParseError),

    #[error("cannot evaluate expression: {0}")]
    Eval(String),
}
