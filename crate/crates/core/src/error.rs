use thiserror::Error;

/// Errors produced by the exact enumeration engine.
///
/// Everything here is a contract violation or a mathematically meaningful
/// failure (a singular leading coefficient, say) — never a numerical issue,
/// since all arithmetic is exact.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial variable mismatch: `{0}` vs `{1}`")]
    VarMismatch(char, char),

    #[error("matrix is not square: {rows} rows but row {row} has {cols} columns")]
    NotSquare {
        rows: usize,
        row: usize,
        cols: usize,
    },

    #[error("invalid matrix character {0:?} (expected '0' or '1')")]
    BadMatrixEntry(char),

    #[error("invalid board: {0}")]
    InvalidBoard(String),

    #[error("polynomial degree {degree} exceeds the board side n = {n}")]
    DegreeExceedsN { degree: usize, n: usize },

    #[error(
        "matrix side {side} exceeds the permanent cap {cap}; use the rook-polynomial route instead"
    )]
    PermanentCap { side: usize, cap: usize },

    #[error("displacement window {window} exceeds the cap {cap}")]
    WindowCap { window: u32, cap: u32 },

    #[error("displacement set must be nonempty")]
    EmptySet,

    #[error("closed-form cycle count is defined for n >= 3, got n = {0}")]
    TouchardRange(usize),

    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },

    #[error("leading coefficient vanishes at index {0}; cannot extend past the singular point")]
    SingularLeadingCoefficient(usize),

    #[error("extension step at index {0} is not integral; the recurrence does not fit the sequence there")]
    NonIntegralStep(usize),

    #[error("initial terms cover {got} values but the recurrence needs the first {needed}")]
    MissingPrefix { needed: usize, got: usize },

    #[error("coefficients are not constant; a scalar recurrence is required here")]
    NotScalar,

    #[error("invalid recurrence: {0}")]
    InvalidRecurrence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
