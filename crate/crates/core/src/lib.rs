//! Exact Ringel–Hall algebras of type-A quivers over prime fields, and their
//! continuum limit for continuous quivers of type A.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: prime-field linear algebra, subspace enumeration,
//!   Gaussian binomials, integer and Laurent polynomials.
//! * [`finquiver`]: finite type-A quivers of any orientation, points of the
//!   representation variety, interval decomposition and orbit sizes.
//! * [`hallfq`]: Hall numbers, the Hall product and Hall polynomials.
//! * [`contquiver`]: continuous quivers, partitions of the line, the finite
//!   quiver of a partition and the stretch/contract transfer maps.
//! * [`limits`]: the direct-limit Hall algebra, Θ evaluations and the
//!   canonical-basis module of the inverse limit.
//! * [`json`]: the JSON document formats used by the command-line tool.
//! * [`verify`]: seeded randomized property suites.

pub mod contquiver;
pub mod error;
pub mod exactalg;
pub mod finquiver;
pub mod hallfq;
pub mod json;
pub mod limits;
pub mod verify;

pub use error::{Error, Result};
