use num_bigint::BigUint;

use super::{canonical_point, hom_space, IsoClass, QuiverA};
use crate::error::{Error, Result};
use crate::exactalg::{gl_order, MatrixFp, PrimeField};

/// Default cap on the number of endomorphisms enumerated by [`orbit_size`].
pub const DEFAULT_ORBIT_BUDGET: u64 = 1 << 22;

/// `|G_V| / |Aut(V)|` for the class `cls`.
pub fn orbit_size(cls: &IsoClass, quiver: &QuiverA, field: PrimeField) -> Result<BigUint> {
    orbit_size_with_budget(cls, quiver, field, DEFAULT_ORBIT_BUDGET)
}

/// As [`orbit_size`]. `|Aut(V)|` is counted by enumerating every element of
/// End(V) (all `p^dim End` linear combinations of an intertwiner basis) and
/// keeping those invertible at each vertex; fails with a resource error when
/// `p^dim End` exceeds `budget`.
pub fn orbit_size_with_budget(cls: &IsoClass, quiver: &QuiverA, field: PrimeField, budget: u64) -> Result<BigUint> {
    let point = canonical_point(cls, quiver, field)?;
    let basis = hom_space(&point, &point)?;
    let p = field.p() as u64;
    let total = (0..basis.len()).try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&v| v <= budget));
    let Some(total) = total else {
        return Err(Error::Resource(format!(
            "End({cls}) has {}^{} elements, over the budget of {budget}",
            p,
            basis.len()
        )));
    };

    let n = quiver.n();
    let dims = point.dims().clone();
    let mut coeffs = vec![0u32; basis.len()];
    let mut aut = 0u64;
    for _ in 0..total {
        let invertible = (0..n).all(|x| {
            let mut m = MatrixFp::zeros(field, dims[x], dims[x]);
            for (b, &c) in basis.iter().zip(&coeffs) {
                if c == 0 {
                    continue;
                }
                for r in 0..dims[x] {
                    for col in 0..dims[x] {
                        let v = field.add(m.get(r, col), field.mul(c, b[x].get(r, col)));
                        m.set(r, col, v);
                    }
                }
            }
            m.is_invertible()
        });
        if invertible {
            aut += 1;
        }
        for slot in coeffs.iter_mut() {
            *slot += 1;
            if *slot < field.p() {
                break;
            }
            *slot = 0;
        }
    }
    let group: BigUint = dims.entries().iter().map(|&d| gl_order(d, p)).product();
    Ok(group / BigUint::from(aut))
}
