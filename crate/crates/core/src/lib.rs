pub mod algebra;
pub mod asymptotics;
pub mod combinatorics;
pub mod decomposer;
pub mod error;
pub mod hopf;
pub mod numeric;
pub mod report;
pub mod sl2_tilting;
pub mod specht;
pub mod verify;

pub use error::{Error, Result};

/// Characters: Laurent polynomials with arbitrary-precision coefficients.
pub type Character = algebra::LaurentPolynomial<num_bigint::BigInt>;

/// Elements of `ℚ(√d)`.
pub type QuadraticRational = hopf::QuadraticRational;
