use thiserror::Error;

/// Errors produced by sequence, extremum, limit-function and summation
/// operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("digit map is not non-decreasing at index {index}")]
    NonMonotoneMap { index: usize },

    #[error("digit map is the identity with f(m) = p; the induced sequence is trivial")]
    TrivialMap,

    #[error("digit map value {value} at index {index} is outside [0, {p}]")]
    RangeError { index: usize, value: i64, p: u32 },

    #[error("map shape invalid: {0}")]
    BadMapShape(String),

    #[error("digit {digit} at position {position} is not a base-{base} digit")]
    DigitOutOfRange {
        digit: u32,
        position: usize,
        base: u32,
    },

    #[error("operation requires a strictly increasing map with f(0) = 0 and f(m) = p")]
    ScopeError,

    #[error("scan of {required} indices exceeds the cap {cap}; raise the cap to force it")]
    ScanTooLarge { required: u64, cap: u64 },

    #[error("no threshold k <= {k_max} verified over the scanned range")]
    NotFound { k_max: u32 },

    #[error("gamma {gamma} lies outside the open interval ({inf}, {sup})")]
    OutOfInterval {
        gamma: String,
        inf: String,
        sup: String,
    },

    #[error("point does not have a finite canonical expansion")]
    NotRational,

    #[error("fewer than {min} usable grid points ({got} after dropping zero differences)")]
    DegenerateGrid { min: usize, got: usize },

    #[error("zeta argument s = 1 is a pole")]
    PoleAtOne,

    #[error("s is within {threshold} of a pole of the Dirichlet series kernel")]
    NearPole { threshold: f64 },

    #[error("argument outside the domain of the operation: {0}")]
    OutOfDomain(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
