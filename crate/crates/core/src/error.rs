use thiserror::Error;

/// Errors raised by the algebraic kernels and the constructions built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not an invertible monomial")]
    NonInvertible,
    #[error("degree exponent overflow")]
    DegreeOverflow,
    #[error("root index {0} is not one of -2, 0, 2")]
    BadRootIndex(i32),
    #[error("element is not a simultaneous eigenvector of the MAD")]
    NotAnEigenvector,
    #[error("no section of m with support in the degree box of radius {0}")]
    BoxExhausted(i32),
    #[error("matrix fails the sl2 trace criterion: {0}")]
    NotInSl2(String),
    #[error("(ad S)(ad S - 2)(ad S + 2) does not annihilate {0}")]
    CubicFailed(String),
    #[error("the 0-eigencomponent of [S, d_theta] is nonzero: {0}")]
    Y0NonZero(String),
    #[error("[S, d'] is nonzero: {0}")]
    DPrimeBracketNonZero(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
