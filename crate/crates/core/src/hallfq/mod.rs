//! The Ringel–Hall algebra of a finite type-A quiver over F_q.
//!
//! Functions on E_V invariant under G_V are stored by their values on
//! orbits, i.e. as rational combinations of characteristic functions
//! `1_O` of isomorphism classes ([`HallFn`]). The product is the
//! pull-push along the induction correspondence; on characteristic
//! functions it reduces to Hall numbers, the counts of stable graded
//! subspaces with prescribed sub and quotient types.
//!
//! Factor order: in `1_A ∗ 1_B` the first factor `A` is the *quotient* and
//! the second `B` the *subobject*.

mod algebra;
mod element;
mod polynomial;

pub use algebra::{hall_number, hall_product, Census, HallAlgebra, DEFAULT_HALL_BUDGET};
pub use element::HallFn;
pub use polynomial::{hall_polynomial, hall_polynomial_with_budget, polynomial_degree_bound};
