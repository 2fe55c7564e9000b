use thiserror::Error;

/// Errors raised by the measure, root-finding and search routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("root iteration did not converge after {iterations} iterations (worst residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("quadrature node hit an exact zero of the polynomial, even after rotating the grid")]
    SingularNode,

    #[error("argument {value} is outside the domain of {function}")]
    DomainError { function: &'static str, value: f64 },

    #[error("degree {degree} exceeds the nominal degree {nominal}")]
    DegreeMismatch { degree: usize, nominal: usize },

    #[error("enumeration of {size} polynomials exceeds the budget of {cap}")]
    BudgetExceeded { size: u128, cap: u128 },

    #[error("polynomial has a multiple root (discriminant is zero)")]
    MultipleRoot,

    #[error("coefficient stream has no tail certificate for exponent {exponent}")]
    TailNotCertified { exponent: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
