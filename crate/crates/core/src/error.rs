use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element {element} is outside the ground set [1, {n}]")]
    ElementOutOfRange { element: i64, n: usize },

    #[error("element {0} listed more than once")]
    DuplicateElement(usize),

    #[error("ground set size {0} not supported (need 1 <= n <= {max})", max = crate::family::MAX_N)]
    GroundSetSize(usize),

    #[error("set of size {found} does not match family uniformity k = {expected}")]
    UniformityMismatch { expected: usize, found: usize },

    #[error("families over (n, k) = ({}, {}) and ({}, {}) cannot be combined", .left.0, .left.1, .right.0, .right.1)]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("operation requires a nonempty family")]
    EmptyFamily,

    /// A precondition on numeric parameters failed; the message names it.
    #[error("parameter precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("infeasible constraints: {0}")]
    Infeasible(String),

    /// A search produced a witness that failed re-validation. Always a bug.
    #[error("witness failed re-validation: {0}")]
    Unsound(String),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("claim never holds in the scanned window: {0}")]
    NeverHolds(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Shorthand for returning a precondition failure.
macro_rules! ensure_pre {
    ($cond:expr, $($fmt:tt)+) => {
        if !($cond) {
            return Err($crate::error::Error::Precondition(format!($($fmt)+)));
        }
    };
}
pub(crate) use ensure_pre;
