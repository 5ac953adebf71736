use super::{build_quiver, is_refinement, ContinuousQuiverA, FGRep, Partition, RealInterval};
use crate::error::{Error, Result};
use crate::finquiver::{DiscreteInterval, IsoClass};
use crate::hallfq::HallFn;

/// Whether every interval of `v` is a union of consecutive blocks.
pub fn is_adapted(v: &FGRep, part: &Partition) -> bool {
    v.intervals().iter().all(|iv| part.locate(iv).is_some())
}

/// `σ_I`: an adapted representation as a representation of `Q_I`.
pub fn sigma(v: &FGRep, part: &Partition) -> Result<IsoClass> {
    let intervals = v
        .intervals()
        .iter()
        .map(|iv| {
            let (p, q) = part
                .locate(iv)
                .ok_or_else(|| Error::Adaptedness(format!("{iv} is not a union of blocks of {part}")))?;
            DiscreteInterval::new(p + 1, q + 1)
        })
        .collect::<Result<_>>()?;
    Ok(IsoClass::new(intervals))
}

/// The inverse of [`sigma`].
pub fn sigma_inv(cls: &IsoClass, part: &Partition) -> Result<FGRep> {
    let n = part.n();
    let intervals = cls
        .intervals()
        .iter()
        .map(|iv| {
            if iv.hi() > n {
                return Err(Error::Typing(format!("{iv} is not an interval of a quiver with {n} vertices")));
            }
            let (first, last) = (part.block(iv.lo() - 1), part.block(iv.hi() - 1));
            RealInterval::new(first.lo().clone(), first.lo_closed(), last.hi().clone(), last.hi_closed())
        })
        .collect::<Result<_>>()?;
    Ok(FGRep::new(intervals))
}

fn require_refinement(coarse: &Partition, fine: &Partition) -> Result<()> {
    if is_refinement(coarse, fine) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{fine} does not refine {coarse}")))
    }
}

/// For each block of `fine`, the index of the block of `coarse` containing it.
pub fn block_map(coarse: &Partition, fine: &Partition) -> Result<Vec<usize>> {
    require_refinement(coarse, fine)?;
    let big = coarse.blocks();
    Ok(fine
        .blocks()
        .iter()
        .map(|b| big.iter().position(|c| c.contains(b)).expect("refinement"))
        .collect())
}

/// Orbit-level `Φ`: replaces each coarse interval by the fine interval
/// covering the same blocks.
pub fn stretch(cls: &IsoClass, coarse: &Partition, fine: &Partition) -> Result<IsoClass> {
    require_refinement(coarse, fine)?;
    sigma(&sigma_inv(cls, coarse)?, fine)
}

/// Orbit-level `Ψ`: `Some` when every fine interval is a union of whole
/// coarse blocks, `None` otherwise.
pub fn contract(cls: &IsoClass, coarse: &Partition, fine: &Partition) -> Result<Option<IsoClass>> {
    require_refinement(coarse, fine)?;
    let v = sigma_inv(cls, fine)?;
    if is_adapted(&v, coarse) {
        sigma(&v, coarse).map(Some)
    } else {
        Ok(None)
    }
}

fn check_level(f: &HallFn, ar: &ContinuousQuiverA, part: &Partition) -> Result<()> {
    let q = build_quiver(ar, part).quiver;
    if f.quiver() != &q {
        return Err(Error::Typing(format!("function over {} where {q} was expected", f.quiver())));
    }
    Ok(())
}

/// `Φ^F`: the linear extension of [`stretch`] from `Q_coarse` to `Q_fine`.
pub fn phi_f(f: &HallFn, ar: &ContinuousQuiverA, coarse: &Partition, fine: &Partition) -> Result<HallFn> {
    require_refinement(coarse, fine)?;
    check_level(f, ar, coarse)?;
    let terms = f
        .terms()
        .map(|(c, v)| Ok((stretch(c, coarse, fine)?, v.clone())))
        .collect::<Result<Vec<_>>>()?;
    HallFn::from_terms(build_quiver(ar, fine).quiver, f.field(), terms)
}

/// `Ψ^F`: the linear extension of [`contract`] from `Q_fine` to `Q_coarse`,
/// dropping the classes that do not contract.
pub fn psi_f(f: &HallFn, ar: &ContinuousQuiverA, coarse: &Partition, fine: &Partition) -> Result<HallFn> {
    require_refinement(coarse, fine)?;
    check_level(f, ar, fine)?;
    let mut terms = Vec::new();
    for (c, v) in f.terms() {
        if let Some(d) = contract(c, coarse, fine)? {
            terms.push((d, v.clone()));
        }
    }
    HallFn::from_terms(build_quiver(ar, coarse).quiver, f.field(), terms)
}
