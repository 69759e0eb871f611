use thiserror::Error;

/// Errors raised while building or analysing finite models.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A table has the wrong shape or an out-of-range entry.
    #[error("malformed {table}: {detail}")]
    Structure { table: String, detail: String },

    /// An exhaustive construction or sweep would exceed the configured cap.
    #[error("size cap exceeded: {what} needs {size}, cap is {cap}")]
    SizeCap { what: String, size: u128, cap: u128 },

    /// A construction parameter is outside its domain.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Two pairs of sets over different ground sets were combined.
    #[error("ground-set mismatch: {left} vs {right} points")]
    GroundMismatch { left: usize, right: usize },

    /// The pointed monoid has a product of two non-zero elements equal to zero.
    #[error("zero divisor: {left} . {right} = bot")]
    ZeroDivisor { left: String, right: String },

    /// Monoid structure (identity or multiplication table) is absent or fails its laws.
    #[error("missing or invalid monoid structure: {0}")]
    Monoid(String),

    /// An operation that needs the halting oracle was given a plain C-algebra.
    #[error("the test algebra is a C-algebra without a down operation; an ada is required")]
    NotAda,

    /// The test algebra has a single element, so no maximal proper congruence exists.
    #[error("no maximal proper congruence: the test algebra is trivial")]
    TrivialAlgebra,

    /// A supplied partition is not closed under the operations.
    #[error("not a congruence: {0}")]
    NotCongruence(String),

    /// Derived structure that must exist for a genuine C-monoid does not.
    #[error("model inconsistency: {0}")]
    ModelInconsistency(String),

    /// Term or identity text could not be parsed.
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// A well-formed term has the wrong sort.
    #[error("sort error at {pos}: expected {expected}, found {found}")]
    Sort {
        pos: usize,
        expected: &'static str,
        found: &'static str,
    },

    /// A variable has no value in the assignment.
    #[error("unbound variable `{0}`")]
    Unbound(String),

    /// The term uses an operation the model does not interpret.
    #[error("model does not interpret `{0}`")]
    Uninterpreted(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn structure(table: impl Into<String>, detail: impl Into<String>) -> Error {
    Error::Structure {
        table: table.into(),
        detail: detail.into(),
    }
}
