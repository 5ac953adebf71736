//! Random instance generators shared by the suites.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::contquiver::{ContinuousQuiverA, FGRep, Partition, PieceOrder, RealInterval};
use crate::error::Result;
use crate::exactalg::PrimeField;
use crate::finquiver::{iso_classes, DimVector, Direction, IsoClass, QuiverA};
use crate::hallfq::HallFn;
use crate::limits::{ContHallFn, KbarElement};
use crate::exactalg::LaurentInt;

pub fn prime<R: Rng>(rng: &mut R, choices: &[u32]) -> PrimeField {
    PrimeField::new(*choices.choose(rng).expect("nonempty")).expect("listed primes")
}

pub fn orientation<R: Rng>(rng: &mut R, n: usize) -> QuiverA {
    QuiverA::new(
        (1..n)
            .map(|_| if rng.gen() { Direction::Forward } else { Direction::Backward })
            .collect(),
    )
}

/// A uniformly chosen class among those of dimension `dims`.
pub fn class_of_dims<R: Rng>(rng: &mut R, quiver: &QuiverA, dims: &DimVector) -> Result<IsoClass> {
    let all = iso_classes(quiver, dims)?;
    Ok(all.choose(rng).expect("every dimension vector has a class").clone())
}

/// `k` dimension vectors on `n` vertices whose entries sum to at most `total`
/// altogether, with each vertex's combined entry at most `per_vertex`.
/// When the budget allows, every vector is nonzero.
pub fn split_dims<R: Rng>(rng: &mut R, n: usize, k: usize, total: usize, per_vertex: usize) -> Vec<DimVector> {
    let mut dims = vec![vec![0; n]; k];
    let units = rng.gen_range(total.min(k)..=total);
    for u in 0..units {
        let x = rng.gen_range(0..n);
        if dims.iter().map(|d| d[x]).sum::<usize>() >= per_vertex {
            continue;
        }
        let target = if u < k { u } else { rng.gen_range(0..k) };
        dims[target][x] += 1;
    }
    dims.into_iter().map(DimVector).collect()
}

pub fn small_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num: i64 = rng.gen_range(-4..=4);
    let den: i64 = rng.gen_range(1..=3);
    let r = BigRational::new(num.into(), den.into());
    if r == BigRational::from_integer(0.into()) {
        BigRational::from_integer(1.into())
    } else {
        r
    }
}

/// A combination of up to `terms` characteristic functions with dimension
/// vectors bounded entrywise by `max_dims`.
pub fn hall_fn<R: Rng>(rng: &mut R, quiver: &QuiverA, field: PrimeField, terms: usize, max_dims: &DimVector) -> Result<HallFn> {
    let k = rng.gen_range(1..=terms);
    let mut out = Vec::new();
    for _ in 0..k {
        let d = DimVector(max_dims.entries().iter().map(|&m| rng.gen_range(0..=m)).collect());
        out.push((class_of_dims(rng, quiver, &d)?, small_rational(rng)));
    }
    HallFn::from_terms(quiver.clone(), field, out)
}

/// Grid of cut values: multiples of 1/2 in [-2, 2].
fn grid<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(rng.gen_range(-4i64..=4).into(), 2.into())
}

pub fn continuous_quiver<R: Rng>(rng: &mut R) -> ContinuousQuiverA {
    let mut s: Vec<BigRational> = (0..rng.gen_range(0..=2)).map(|_| grid(rng)).collect();
    s.sort();
    s.dedup();
    let orders = (0..=s.len()).map(|_| if rng.gen() { PieceOrder::Lt } else { PieceOrder::Gt }).collect();
    ContinuousQuiverA::new(s, orders).expect("sorted distinct turning points")
}

fn add_random_cuts<R: Rng>(rng: &mut R, flags: &mut BTreeMap<BigRational, (bool, bool)>, k: usize) {
    for _ in 0..k {
        let e = flags.entry(grid(rng)).or_default();
        if rng.gen() {
            e.0 = true;
        } else {
            e.1 = true;
        }
    }
}

/// A partition with at most `max_cuts` distinct cut values on the grid.
pub fn partition<R: Rng>(rng: &mut R, max_cuts: usize) -> Partition {
    let mut flags = BTreeMap::new();
    let k = rng.gen_range(0..=max_cuts);
    add_random_cuts(rng, &mut flags, k);
    Partition::from_flags(&flags)
}

/// A refinement of `part` adding up to `extra` cuts.
pub fn refinement<R: Rng>(rng: &mut R, part: &Partition, extra: usize) -> Partition {
    let mut flags = part.flags();
    let k = rng.gen_range(0..=extra);
    add_random_cuts(rng, &mut flags, k);
    Partition::from_flags(&flags)
}

/// A strict refinement of `part` adding one to `extra` cuts.
pub fn strict_refinement<R: Rng>(rng: &mut R, part: &Partition, extra: usize) -> Partition {
    loop {
        let mut flags = part.flags();
        let k = rng.gen_range(1..=extra.max(1));
        add_random_cuts(rng, &mut flags, k);
        let fine = Partition::from_flags(&flags);
        if fine.n() > part.n() {
            return fine;
        }
    }
}

/// A representation built from `k` unions of consecutive blocks of `part`.
pub fn adapted_rep<R: Rng>(rng: &mut R, part: &Partition, k: usize) -> FGRep {
    let n = part.n();
    let intervals = (0..k)
        .map(|_| {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(a..n);
            let (first, last) = (part.block(a), part.block(b));
            RealInterval::new(first.lo().clone(), first.lo_closed(), last.hi().clone(), last.hi_closed()).expect("union of blocks")
        })
        .collect();
    FGRep::new(intervals)
}

/// A random interval with grid endpoints, occasionally unbounded.
pub fn real_interval<R: Rng>(rng: &mut R) -> RealInterval {
    use crate::contquiver::Bound;
    loop {
        let lo = if rng.gen_ratio(1, 8) { Bound::NegInf } else { Bound::Finite(grid(rng)) };
        let hi = if rng.gen_ratio(1, 8) { Bound::PosInf } else { Bound::Finite(grid(rng)) };
        let lo_closed = lo != Bound::NegInf && rng.gen();
        let hi_closed = hi != Bound::PosInf && rng.gen();
        if let Ok(iv) = RealInterval::new(lo, lo_closed, hi, hi_closed) {
            return iv;
        }
    }
}

pub fn fg_rep<R: Rng>(rng: &mut R, max_intervals: usize) -> FGRep {
    let k = rng.gen_range(0..=max_intervals);
    FGRep::new((0..k).map(|_| real_interval(rng)).collect())
}

pub fn cont_hall_fn<R: Rng>(rng: &mut R, ar: &ContinuousQuiverA, field: PrimeField, terms: usize, max_intervals: usize) -> ContHallFn {
    let k = rng.gen_range(1..=terms);
    ContHallFn::from_terms(ar.clone(), field, (0..k).map(|_| (fg_rep(rng, max_intervals), small_rational(rng))))
}

pub fn kbar<R: Rng>(rng: &mut R, ar: &ContinuousQuiverA, terms: usize, max_intervals: usize) -> KbarElement {
    let k = rng.gen_range(1..=terms);
    KbarElement::from_terms(
        ar.clone(),
        (0..k).map(|_| {
            let mut c = LaurentInt::zero();
            for _ in 0..rng.gen_range(1..=2) {
                c.add_term(rng.gen_range(-2..=2), rng.gen_range(-3i64..=3).into());
            }
            (fg_rep(rng, max_intervals), c)
        }),
    )
}
