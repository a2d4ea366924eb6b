//! PT-symmetric Hamiltonians as complex tridiagonal operators.
//!
//! The core types are generic over the real scalar (`f32` or `f64`); the
//! aliases below fix `f64`, which is what the command-line front end uses.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod error;
pub mod models;
pub mod quadrature;
pub mod scalar;
pub mod specfun;
pub mod susy;
pub mod tridiag;

pub use error::{Error, Result};
pub use scalar::{Cplx, Real};

/// Double-precision complex number.
pub type Complex64 = Cplx<f64>;
pub type Operator = tridiag::TridiagonalOperator<f64>;
pub type OperatorF32 = tridiag::TridiagonalOperator<f32>;
pub type CMatrix = tridiag::Matrix<Complex64>;
pub type Table = tridiag::PolynomialTable<f64>;
pub type Spectrum = tridiag::SpectrumReport<f64>;
pub type Factorization = susy::FactorizationPair<f64>;
pub type Coefficients = susy::PartnerCoefficients<f64>;
pub type Morse = models::MorseParams<f64>;
pub type Coulomb = models::CoulombImaginaryCharge<f64>;
pub type RosenMorse = models::RosenMorseII<f64>;
pub type Basis = quadrature::HermiteBasis<f64>;
pub type Rule = quadrature::QuadratureRule<f64>;
