use std::collections::BTreeMap;

use num_rational::BigRational;

use super::ContHallFn;
use crate::contquiver::{build_quiver, common_refinement, is_refinement, psi_f, sigma, sigma_inv, FGRep, Partition};
use crate::error::{Error, Result};
use crate::hallfq::{hall_product, HallFn};

/// The coarsest partition, refining `base` if given, to which every label
/// is adapted.
///
/// A closed right end or open left end at `x` asks for a cut at `x` owned
/// on the left; the other two cases ask for one owned on the right. When
/// both are asked for, the cut is doubled and `[x, x]` becomes a block.
pub fn adapted_partition<'a>(labels: impl IntoIterator<Item = &'a FGRep>, base: Option<&Partition>) -> Result<Partition> {
    let mut flags: BTreeMap<BigRational, (bool, bool)> = BTreeMap::new();
    for rep in labels {
        for iv in rep.intervals() {
            if let Some(x) = iv.lo().finite() {
                let e = flags.entry(x.clone()).or_default();
                if iv.lo_closed() {
                    e.1 = true;
                } else {
                    e.0 = true;
                }
            }
            if let Some(y) = iv.hi().finite() {
                let e = flags.entry(y.clone()).or_default();
                if iv.hi_closed() {
                    e.0 = true;
                } else {
                    e.1 = true;
                }
            }
        }
    }
    let own = Partition::from_flags(&flags);
    match base {
        None => Ok(own),
        Some(b) => common_refinement(b, &own),
    }
}

/// Pushes `f` to the Hall algebra of `Q_part` through `σ`.
pub fn lift(f: &ContHallFn, part: &Partition) -> Result<HallFn> {
    let quiver = build_quiver(f.quiver(), part).quiver;
    let terms = f.terms().map(|(r, c)| Ok((sigma(r, part)?, c.clone()))).collect::<Result<Vec<_>>>()?;
    HallFn::from_terms(quiver, f.field(), terms)
}

fn descend(h: &HallFn, f: &ContHallFn, part: &Partition) -> Result<ContHallFn> {
    let terms = h.terms().map(|(c, v)| Ok((sigma_inv(c, part)?, v.clone()))).collect::<Result<Vec<_>>>()?;
    Ok(ContHallFn::from_terms(f.quiver().clone(), f.field(), terms))
}

/// The product of the direct-limit Hall algebra, computed at the coarsest
/// partition adapted to both supports.
pub fn cont_product(f: &ContHallFn, g: &ContHallFn) -> Result<ContHallFn> {
    f.check_compatible(g)?;
    let supp: Vec<FGRep> = f.support().into_iter().chain(g.support()).collect();
    let part = adapted_partition(&supp, None)?;
    cont_product_at(f, g, &part)
}

/// The product computed at a given partition adapted to both supports.
pub fn cont_product_at(f: &ContHallFn, g: &ContHallFn, part: &Partition) -> Result<ContHallFn> {
    f.check_compatible(g)?;
    let h = hall_product(&lift(f, part)?, &lift(g, part)?)?;
    descend(&h, f, part)
}

/// `Θ_I(f)`: lift `f` to the coarsest adapted refinement of `part` and
/// contract back down.
pub fn theta_eval(f: &ContHallFn, part: &Partition) -> Result<HallFn> {
    let fine = adapted_partition(&f.support(), Some(part))?;
    theta_eval_via(f, part, &fine)
}

/// `Θ_I(f)` computed through a chosen adapted refinement `fine` of `part`.
pub fn theta_eval_via(f: &ContHallFn, part: &Partition, fine: &Partition) -> Result<HallFn> {
    if !is_refinement(part, fine) {
        return Err(Error::Precondition(format!("{fine} does not refine {part}")));
    }
    psi_f(&lift(f, fine)?, f.quiver(), part, fine)
}
