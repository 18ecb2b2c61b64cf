use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("scenario line {line}: {msg}")]
    Scenario { line: usize, msg: String },

    #[error("zero entry in reduced word")]
    ZeroEntry,

    #[error("empty word")]
    EmptyWord,

    #[error("trivial knot: {0}")]
    TrivialKnot(String),

    #[error("link, not knot (p = {0} is even)")]
    NotKnot(String),

    #[error("multi-component diagram ({0} components)")]
    MultiComponent(usize),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("odd exponent after substitution")]
    OddExponent,

    #[error("not unit-normalizable: {0}")]
    NotNormalizable(String),

    #[error("not expressible as a polynomial in z")]
    NotConwayForm,

    #[error("odd entry {0} in even-form word")]
    OddEntry(i64),

    #[error("word not in normal form: {0}")]
    NotNormalForm(String),

    #[error("convention mismatch: expected {expected}, found {found}")]
    ConventionMismatch { expected: String, found: String },

    #[error("expansion did not terminate within {0} steps")]
    NonTerminating(String),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("zero vector has no divisibility")]
    ZeroVector,

    #[error("log-transform parameters {0:?} are not coprime")]
    NotCoprime((i64, i64, i64)),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("no consistent convention:\n{0}")]
    NoConsistentConvention(String),

    #[error("ambiguous convention:\n{0}")]
    AmbiguousConvention(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
