//! The Hall algebra of a continuous quiver as a direct limit of the finite
//! Hall algebras of its partitions, the evaluations `Θ_I` back to a finite
//! level, and the span of canonical-basis labels in the inverse limit `K̄`
//! with its projections `Ψ_I`.

mod element;
mod kbar;
mod product;

pub use element::ContHallFn;
pub use kbar::{contract_kq, kbar_equal, psi_eval, v_act, CanonicalLabel, KQElement, KbarElement};
pub use product::{adapted_partition, cont_product, cont_product_at, lift, theta_eval, theta_eval_via};
