use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("coupling g = {g} is below the lower bound {bound}")]
    CouplingOutOfRange { g: f64, bound: f64 },

    #[error("negative beta root requested with g = {g}; only g = 0 admits it")]
    SectorInvalid { g: f64 },

    #[error("relative imaginary residue {residue:e} exceeds tolerance {tol:e}")]
    NumericResidue { residue: f64, tol: f64 },

    #[error("quadrature did not converge: error estimate {error:e} above 10x tolerance {tol:e}")]
    NoConvergence { error: f64, tol: f64 },

    #[error("singular point at {0}")]
    SingularPoint(f64),

    #[error("method {method} does not support {reason}")]
    UnsupportedMethod { method: &'static str, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
