use thiserror::Error;

/// Errors produced by parsing, lattice geometry and the zeta formulas.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("negative exponent at position {position}")]
    NegativeExponent { position: usize },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("not a germ vanishing at 0: nonzero constant term {0}")]
    ConstantTerm(String),
    #[error("empty germ after collection")]
    EmptyGerm,
    #[error("need the deformation variable and at least one more variable, got {0} variable(s)")]
    TooFewVariables(usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid JSON germ: {0}")]
    Json(String),
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },
    #[error("invalid index set: {0}")]
    IndexSet(String),
    #[error("the zero vector has no primitive multiple")]
    ZeroVector,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("covector must be strictly positive in every component")]
    NonPositiveCovector,
    #[error("the polynomial depends on the deformation variable")]
    DependsOnDeformation,
    #[error("identity inapplicable: {0}")]
    Inapplicable(String),
    #[error("invalid zeta factor: {0}")]
    InvalidFactor(String),
    #[error("integer overflow: {0}")]
    Overflow(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
