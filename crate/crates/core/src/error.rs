use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("NotFiniteType: {0}")]
    NotFiniteType(String),
    #[error("reducible Cartan matrix: components {0} and {1} are disconnected")]
    Reducible(usize, usize),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("empty subset of affine simple roots")]
    EmptySubset,
    #[error("point lies outside the closed fundamental alcove ({0} < 0)")]
    OutsideAlcove(String),
    #[error("rotation coefficient must be positive, got {0}")]
    NonPositiveRotation(String),
    #[error("curve coefficients must be non-negative, got {0}")]
    NotDominant(i64),
    #[error("curve datum is not standard (coefficient {0} not in {{0,1}})")]
    NotStandard(i64),
    #[error("invalid affine Weyl word: letter {letter} exceeds rank {rank}")]
    InvalidWord { letter: usize, rank: usize },
    #[error("cover datum does not match the coweight: {0}")]
    CoverMismatch(String),
    #[error("non-integral invariant exponent for root {0}")]
    NonIntegralExponent(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("reflection closure did not terminate within {0} steps")]
    StepBound(usize),
}
