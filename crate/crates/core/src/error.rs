use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operator shape mismatch: {0}")]
    Shape(String),
    #[error("pseudo-symmetric flag set but sup[{index}] != conj(sub[{index}])")]
    NotPseudoSymmetric { index: usize },
    #[error("non-regular operator: sup[{index}] vanishes")]
    NonRegular { index: usize },
    #[error("index {index} out of range (len {len})")]
    OutOfRange { index: usize, len: usize },
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("hypergeometric lower parameter {param} hits -{k} before termination")]
    LowerParameterPole { param: usize, k: usize },
    #[error("zero-energy node: P_{index}(0) vanishes, factorization at E = 0 does not exist")]
    ZeroEnergyNode { index: usize },
    #[error("degenerate factorization: {0}")]
    DegenerateFactorization(String),
    #[error("eigensolver did not converge after {iterations} iterations ({found} of {n} eigenvalues deflated)")]
    NoConvergence {
        iterations: usize,
        found: usize,
        n: usize,
        /// Eigenvalues deflated before the iteration cap was hit.
        partial: Vec<(f64, f64)>,
    },
    #[error("eigenpair {index} residual {residual:e} exceeds the solver tolerance")]
    ResidualTooLarge { index: usize, residual: f64 },
    #[error("non-finite value at quadrature node {index} (x = {x})")]
    NonFinite { index: usize, x: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("formula regression: {0}")]
    FormulaRegression(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
