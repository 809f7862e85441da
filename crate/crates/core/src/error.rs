use thiserror::Error;

/// Errors raised across the workbench.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("non-finite potential value {value} at r = {r}")]
    NonFinitePotential { r: f64, value: f64 },

    #[error("requested {requested} eigenvalues from a {size}x{size} matrix")]
    TooManyEigenvalues { requested: usize, size: usize },

    #[error("inverse iteration did not converge near lambda = {0}")]
    NoConvergence(f64),

    #[error("adaptive quadrature exceeded depth {depth} on [{a}, {b}]")]
    QuadratureDepth { a: f64, b: f64, depth: usize },

    #[error("exact identity violated: {0}")]
    IdentityViolated(String),

    #[error("wave representation: {0}")]
    Representation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
