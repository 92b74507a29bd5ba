use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("polynomial must be monic with integer coefficients")]
    NotMonicInteger,
    #[error("polynomial is reducible: nontrivial factor {0}")]
    Reducible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("field degree {0} exceeds configured bound {1}")]
    DegreeTooLarge(usize, usize),
    #[error("lattice rank {0} exceeds configured bound {1}")]
    RankTooLarge(usize, usize),
    #[error("{0} is not squarefree")]
    NotSquarefree(String),
    #[error("radius must be a rational strictly above one")]
    RadiusNotAboveOne,
    #[error("required polynomial degree {required} exceeds cap {cap}")]
    DegreeExplosion { required: String, cap: usize },
    #[error("square-norm is not above four")]
    QNotAboveFour,
    #[error("polynomial has non-integral roots")]
    NotIntegral,
    #[error("polynomial is not irreducible over the base field")]
    NotIrreducible,
    #[error("radius too large: volume exponent is nonpositive")]
    RadiusTooLarge,
    #[error("radius out of range: need q(alpha/2) < r^2 < sqrt(e)/2")]
    RadiusOutOfRange,
    #[error("square-norm is not below 2*sqrt(e)")]
    QTooLarge,
    #[error("coefficient box is empty for this degree")]
    EmptyFamily,
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
