use thiserror::Error;

/// Errors reported by the library. Usage errors (bad input, violated
/// preconditions) and internal invariant violations share this type; the
/// CLI maps them to exit code 2 and 1 respectively.
#[derive(Debug, Error)]
pub enum Error {
    #[error("sign vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid sign character {0:?} (expected '-', '0', or '+')")]
    InvalidSignChar(char),

    #[error("covector set is empty")]
    EmptyCovectorSet,

    #[error("malformed rational {0:?}")]
    InvalidRational(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("hyperplane {index} has zero normal vector")]
    ZeroNormal { index: usize },

    #[error("K must be nonempty")]
    EmptyRegion,

    #[error("region constraint {index} is unsatisfiable: zero normal with constant {constant}")]
    UnsatisfiableConstraint { index: usize, constant: String },

    #[error("K must be open: region constraint {index} is an equality")]
    NonOpenRegion { index: usize },

    #[error("component undefined: tope entry is 0 at coordinate {index} where the covector vanishes")]
    UndefinedComponent { index: usize },

    #[error("{0} is not a covector of this arrangement")]
    NotACovector(String),

    #[error("covector axioms fail: {0}")]
    AxiomsFail(String),

    #[error("map is not a bijection between the two posets")]
    NotABijection,

    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),

    #[error("complex is empty")]
    EmptyComplex,

    #[error("z-points have different base points")]
    DifferentBasePoints,

    #[error("point does not realize the stated covector")]
    WitnessMismatch,

    #[error("the oracle requires K = V (no region constraints)")]
    OracleNeedsFullSpace,

    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
