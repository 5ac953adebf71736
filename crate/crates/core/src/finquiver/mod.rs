//! Finite quivers of type A with arbitrary orientation and their
//! representations over prime fields.
//!
//! Isomorphism classes are multisets of interval modules `[lo..hi]`
//! ([`IsoClass`]); concrete points of the representation variety are
//! [`RepPoint`]s. [`decompose`] maps a point to its class by counting
//! homomorphisms from interval modules.

mod decompose;
mod interval;
mod orbit;
mod point;
mod quiver;

pub use decompose::{decompose, hom_dim, Decomposer};
pub use interval::{iso_classes, DiscreteInterval, IsoClass};
pub use orbit::{orbit_size, orbit_size_with_budget, DEFAULT_ORBIT_BUDGET};
pub use point::{canonical_point, hom_dim_points, hom_space, RepPoint};
pub use quiver::{DimVector, Direction, QuiverA};
