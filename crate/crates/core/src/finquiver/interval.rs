use std::fmt;

use serde::{Deserialize, Serialize};

use super::{DimVector, QuiverA};
use crate::error::{Error, Result};

/// The interval `[lo..hi]` of vertices (1-based, inclusive), labelling the
/// indecomposable module that is one-dimensional on the interval with
/// identity maps inside and zero outside.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct DiscreteInterval {
    lo: usize,
    hi: usize,
}

impl DiscreteInterval {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(Error::Schema(format!("[{lo}..{hi}] is not an interval of vertices")));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    /// Whether the 1-based vertex `x` lies in the interval.
    pub fn contains(self, x: usize) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Every interval of A_n.
    pub fn all(n: usize) -> Vec<Self> {
        (1..=n).flat_map(|lo| (lo..=n).map(move |hi| Self { lo, hi })).collect()
    }
}

impl TryFrom<(usize, usize)> for DiscreteInterval {
    type Error = Error;

    fn try_from((lo, hi): (usize, usize)) -> Result<Self> {
        Self::new(lo, hi)
    }
}

impl From<DiscreteInterval> for (usize, usize) {
    fn from(i: DiscreteInterval) -> Self {
        (i.lo, i.hi)
    }
}

impl fmt::Display for DiscreteInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.lo, self.hi)
    }
}

/// An isomorphism class of finite-dimensional representations of a type-A
/// quiver: a multiset of intervals, kept sorted by `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "RawIsoClass", into = "RawIsoClass")]
pub struct IsoClass {
    intervals: Vec<DiscreteInterval>,
}

#[derive(Serialize, Deserialize)]
struct RawIsoClass {
    intervals: Vec<DiscreteInterval>,
}

impl From<RawIsoClass> for IsoClass {
    fn from(raw: RawIsoClass) -> Self {
        IsoClass::new(raw.intervals)
    }
}

impl From<IsoClass> for RawIsoClass {
    fn from(c: IsoClass) -> Self {
        RawIsoClass { intervals: c.intervals }
    }
}

impl IsoClass {
    pub fn new(mut intervals: Vec<DiscreteInterval>) -> Self {
        intervals.sort();
        Self { intervals }
    }

    /// The zero representation.
    pub fn zero() -> Self {
        Self::default()
    }

    /// Convenience constructor from `(lo, hi)` pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Ok(Self::new(
            pairs.iter().map(|&(lo, hi)| DiscreteInterval::new(lo, hi)).collect::<Result<_>>()?,
        ))
    }

    pub fn intervals(&self) -> &[DiscreteInterval] {
        &self.intervals
    }

    pub fn is_zero(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Errors unless every interval fits inside A_n for this quiver.
    pub fn check(&self, quiver: &QuiverA) -> Result<()> {
        match self.intervals.iter().find(|i| i.hi > quiver.n()) {
            Some(bad) => Err(Error::Schema(format!(
                "interval {bad} does not fit a quiver with {} vertices",
                quiver.n()
            ))),
            None => Ok(()),
        }
    }

    pub fn dims(&self, n: usize) -> DimVector {
        let mut d = vec![0; n];
        for iv in &self.intervals {
            for x in iv.lo..=iv.hi {
                d[x - 1] += 1;
            }
        }
        DimVector(d)
    }

    pub fn direct_sum(&self, other: &IsoClass) -> IsoClass {
        let mut all = self.intervals.clone();
        all.extend_from_slice(&other.intervals);
        IsoClass::new(all)
    }

    pub fn multiplicity(&self, iv: DiscreteInterval) -> usize {
        self.intervals.iter().filter(|&&x| x == iv).count()
    }
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "0");
        }
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, "⊕")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

/// Every isomorphism class with the given dimension vector, each once, in
/// ascending order.
pub fn iso_classes(quiver: &QuiverA, dims: &DimVector) -> Result<Vec<IsoClass>> {
    if dims.len() != quiver.n() {
        return Err(Error::Typing(format!(
            "dimension vector {dims} does not match a quiver with {} vertices",
            quiver.n()
        )));
    }
    let mut out = Vec::new();
    let mut remaining = dims.0.clone();
    let mut chosen = Vec::new();
    fill(&mut remaining, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

// Intervals are chosen in nondecreasing (lo, hi) order; the next one must
// start at the leftmost vertex that still needs dimension.
fn fill(remaining: &mut [usize], chosen: &mut Vec<DiscreteInterval>, out: &mut Vec<IsoClass>) {
    let Some(start) = remaining.iter().position(|&d| d > 0) else {
        out.push(IsoClass::new(chosen.clone()));
        return;
    };
    let lo = start + 1;
    let mut hi = lo;
    while hi <= remaining.len() && remaining[hi - 1] > 0 {
        let iv = DiscreteInterval { lo, hi };
        if chosen.last().is_none_or(|&last| last <= iv) {
            for x in lo..=hi {
                remaining[x - 1] -= 1;
            }
            chosen.push(iv);
            fill(remaining, chosen, out);
            chosen.pop();
            for x in lo..=hi {
                remaining[x - 1] += 1;
            }
        }
        hi += 1;
    }
}
