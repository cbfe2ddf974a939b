use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),

    #[error("image sequence is not a bijection")]
    NotABijection,

    #[error("cannot parse cycle notation: {0}")]
    Parse(String),

    #[error("enumeration cap exceeded: {what} needs {needed} elements, cap is {cap}")]
    CapExceeded { what: &'static str, needed: u64, cap: u64 },

    #[error("coset enumeration exceeded {0} cosets")]
    CosetLimit(usize),

    #[error("invalid Coxeter matrix: {0}")]
    InvalidCoxeterMatrix(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown group name {0:?}")]
    UnknownGroup(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("generators do not generate the expected group: {0}")]
    GenerationMismatch(String),

    #[error("CPR graph label {label} is not a matching at vertex {vertex}")]
    NotAMatching { label: usize, vertex: usize },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
