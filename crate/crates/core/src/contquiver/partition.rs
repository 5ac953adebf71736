use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::{Bound, ContinuousQuiverA, PieceOrder, RealInterval};
use crate::error::{Error, Result};
use crate::finquiver::{Direction, QuiverA};

/// Which side of a cut owns the cut point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ownership {
    /// `…, a] (a, …`
    Left,
    /// `…, a) [a, …`
    Right,
}

/// A partition of ℝ into consecutive nonempty intervals `I₁, …, I_n`,
/// given by `n − 1` cuts and their ownership.
///
/// Equal consecutive cuts are allowed only as `a` owned `Right` then `a`
/// owned `Left`, which produces the singleton block `[a, a]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    cuts: Vec<BigRational>,
    ownership: Vec<Ownership>,
}

impl Partition {
    pub fn new(cuts: Vec<BigRational>, ownership: Vec<Ownership>) -> Result<Self> {
        if cuts.len() != ownership.len() {
            return Err(Error::Schema(format!("{} cuts with {} ownership flags", cuts.len(), ownership.len())));
        }
        for i in 1..cuts.len() {
            if cuts[i - 1] > cuts[i] {
                return Err(Error::Schema("cuts must be non-decreasing".into()));
            }
            if cuts[i - 1] == cuts[i] {
                let singleton = ownership[i - 1] == Ownership::Right && ownership[i] == Ownership::Left;
                let triple = i >= 2 && cuts[i - 2] == cuts[i];
                if !singleton || triple {
                    return Err(Error::Schema(format!("repeated cut at {} leaves an empty interval", cuts[i])));
                }
            }
        }
        Ok(Self { cuts, ownership })
    }

    /// The partition with a single block, ℝ itself.
    pub fn whole_line() -> Self {
        Self { cuts: Vec::new(), ownership: Vec::new() }
    }

    /// Integer cuts all carrying the same ownership.
    pub fn uniform(cuts: &[i64], owner: Ownership) -> Result<Self> {
        Self::new(cuts.iter().map(|&c| BigRational::from_integer(c.into())).collect(), vec![owner; cuts.len()])
    }

    /// Builds a partition from per-value flag sets `(left, right)`.
    pub(crate) fn from_flags(flags: &BTreeMap<BigRational, (bool, bool)>) -> Self {
        let mut cuts = Vec::new();
        let mut ownership = Vec::new();
        for (a, &(left, right)) in flags {
            if right {
                cuts.push(a.clone());
                ownership.push(Ownership::Right);
            }
            if left {
                cuts.push(a.clone());
                ownership.push(Ownership::Left);
            }
        }
        Self { cuts, ownership }
    }

    /// For each cut value, whether it is cut `Left` and whether `Right`.
    pub(crate) fn flags(&self) -> BTreeMap<BigRational, (bool, bool)> {
        let mut m: BTreeMap<BigRational, (bool, bool)> = BTreeMap::new();
        for (a, o) in self.cuts.iter().zip(&self.ownership) {
            let e = m.entry(a.clone()).or_default();
            match o {
                Ownership::Left => e.0 = true,
                Ownership::Right => e.1 = true,
            }
        }
        m
    }

    pub fn cuts(&self) -> &[BigRational] {
        &self.cuts
    }

    pub fn ownership(&self) -> &[Ownership] {
        &self.ownership
    }

    /// Number of blocks.
    pub fn n(&self) -> usize {
        self.cuts.len() + 1
    }

    /// Block `i` (0-based).
    pub fn block(&self, i: usize) -> RealInterval {
        let (lo, lo_closed) = if i == 0 {
            (Bound::NegInf, false)
        } else {
            (Bound::Finite(self.cuts[i - 1].clone()), self.ownership[i - 1] == Ownership::Right)
        };
        let (hi, hi_closed) = if i == self.cuts.len() {
            (Bound::PosInf, false)
        } else {
            (Bound::Finite(self.cuts[i].clone()), self.ownership[i] == Ownership::Left)
        };
        RealInterval::new(lo, lo_closed, hi, hi_closed).expect("partition blocks are nonempty")
    }

    pub fn blocks(&self) -> Vec<RealInterval> {
        (0..self.n()).map(|i| self.block(i)).collect()
    }

    /// The 0-based block range `(p, q)` with `iv = I_p ∪ … ∪ I_q`, if any.
    pub fn locate(&self, iv: &RealInterval) -> Option<(usize, usize)> {
        let blocks = self.blocks();
        let p = blocks.iter().position(|b| b.left_end() == iv.left_end())?;
        let q = blocks.iter().position(|b| b.right_end() == iv.right_end())?;
        (p <= q).then_some((p, q))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.blocks().iter().map(|b| b.to_string()).collect();
        write!(f, "{}", blocks.join(" "))
    }
}

/// Whether `fine` refines `coarse`: every block of `fine` lies in a block
/// of `coarse`.
pub fn is_refinement(coarse: &Partition, fine: &Partition) -> bool {
    let big = coarse.blocks();
    fine.blocks().iter().all(|b| big.iter().any(|c| c.contains(b)))
}

/// The coarsest partition refining both, obtained by merging cut sets.
///
/// A value cut `Left` in one and only `Right` in the other is a conflict.
pub fn common_refinement(a: &Partition, b: &Partition) -> Result<Partition> {
    let mut flags = a.flags();
    for (x, fb) in b.flags() {
        match flags.get_mut(&x) {
            None => {
                flags.insert(x, fb);
            }
            Some(fa) => {
                let single_a = fa.0 != fa.1;
                let single_b = fb.0 != fb.1;
                if single_a && single_b && *fa != fb {
                    return Err(Error::RefinementConflict(format!(
                        "cut at {x} is owned on opposite sides in the two partitions"
                    )));
                }
                fa.0 |= fb.0;
                fa.1 |= fb.1;
            }
        }
    }
    Ok(Partition::from_flags(&flags))
}

/// The finite quiver `Q_I` of a partition together with its basepoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionQuiver {
    pub quiver: QuiverA,
    pub basepoints: Vec<BigRational>,
}

/// One vertex per block; the arrow across each cut follows `≺` on the
/// side of the cut that does not own it.
pub fn build_quiver(ar: &ContinuousQuiverA, part: &Partition) -> PartitionQuiver {
    let directions = part
        .cuts
        .iter()
        .zip(&part.ownership)
        .map(|(a, o)| {
            let order = match o {
                Ownership::Left => ar.order_right_of(a),
                Ownership::Right => ar.order_left_of(a),
            };
            match order {
                PieceOrder::Lt => Direction::Forward,
                PieceOrder::Gt => Direction::Backward,
            }
        })
        .collect();
    let c = &part.cuts;
    let k = c.len();
    let one = BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    let basepoints = if k == 0 {
        vec![BigRational::from_integer(0.into())]
    } else {
        (0..=k)
            .map(|i| match i {
                0 => &c[0] - &one,
                i if i == k => &c[k - 1] + &one,
                i => (&c[i - 1] + &c[i]) / &two,
            })
            .collect()
    };
    PartitionQuiver { quiver: QuiverA::new(directions), basepoints }
}
