//! Continuous type-A quivers, partitions of the real line, and the finite
//! quivers they induce.
//!
//! Everything on the continuous side is done on isomorphism-class labels:
//! a finitely generated representation is a multiset of real intervals
//! ([`FGRep`]), and an adapted one corresponds to an [`IsoClass`] of the
//! finite quiver of the partition via [`sigma`].
//!
//! [`IsoClass`]: crate::finquiver::IsoClass

mod partition;
mod quiver;
mod real;
mod transfer;

pub use partition::{build_quiver, common_refinement, is_refinement, Ownership, Partition, PartitionQuiver};
pub use quiver::{ContinuousQuiverA, PieceOrder};
pub use real::{Bound, FGRep, RealInterval};
pub use transfer::{block_map, contract, is_adapted, phi_f, psi_f, sigma, sigma_inv, stretch};
