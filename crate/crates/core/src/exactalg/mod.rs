//! Exact arithmetic substrate: prime fields, dense matrices over them,
//! subspace enumeration, Gaussian binomials, integer and Laurent
//! polynomials.
//!
//! Nothing in this crate uses floating point.

mod field;
mod laurent;
mod matrix;
mod poly;
mod qbinom;
mod subspace;

pub use field::{small_primes, PrimeField, MAX_PRIME};
pub use laurent::LaurentInt;
pub use matrix::MatrixFp;
pub use poly::{interpolate, IntPoly};
pub use qbinom::{gaussian_binomial, gl_order};
pub use subspace::{enumerate_subspaces, Subspaces};
