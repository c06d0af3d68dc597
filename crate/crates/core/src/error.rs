use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomials belong to different parameter sets: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },

    #[error("no value assigned to parameter `{0}`")]
    MissingParam(String),

    #[error("unknown parameter `{0}`")]
    UnknownParam(String),

    #[error("duplicate parameter `{0}`")]
    DuplicateParam(String),

    #[error("cannot parse scalar `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("operands live in different Lie algebras ({left} vs {right})")]
    AlgebraMismatch { left: String, right: String },

    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: usize, got: usize },

    #[error("algebra `{0}` carries no invariant form")]
    NoForm(String),

    #[error("invariant form of `{0}` is degenerate")]
    DegenerateForm(String),

    #[error("matrix is singular")]
    Singular,

    #[error("entries depend on parameters {params:?}; substitute values first")]
    NotSpecialized { params: Vec<String> },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("no invariant weight: R + R* is not scalar on the derived subalgebra")]
    NoInvariantWeight,

    #[error("algebra `{0}` has no designated central element E")]
    NoCentralE(String),

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("inner part not rational")]
    InnerNotRational,

    #[error("theta must be nonzero")]
    ZeroTheta,

    #[error("{0}")]
    Constraint(String),

    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),

    #[error("unknown catalog family `{0}`")]
    UnknownFamily(String),

    #[error("invalid input: {0}")]
    Format(String),
}
