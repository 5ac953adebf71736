use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};

/// An interval endpoint: a rational or one of the infinities.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Bound {
    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            Bound::Finite(r) => Some(r),
            _ => None,
        }
    }
}

impl From<BigRational> for Bound {
    fn from(r: BigRational) -> Self {
        Bound::Finite(r)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => write!(f, "-inf"),
            Bound::Finite(r) => write!(f, "{r}"),
            Bound::PosInf => write!(f, "+inf"),
        }
    }
}

/// A nonempty interval of the real line with rational or infinite ends.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealInterval {
    lo: Bound,
    lo_closed: bool,
    hi: Bound,
    hi_closed: bool,
}

impl RealInterval {
    pub fn new(lo: Bound, lo_closed: bool, hi: Bound, hi_closed: bool) -> Result<Self> {
        if lo == Bound::PosInf || hi == Bound::NegInf {
            return Err(Error::Schema(format!("interval from {lo} to {hi}")));
        }
        if (lo == Bound::NegInf && lo_closed) || (hi == Bound::PosInf && hi_closed) {
            return Err(Error::Schema("infinite interval ends must be open".into()));
        }
        let ok = lo < hi || (lo == hi && lo_closed && hi_closed);
        if !ok {
            return Err(Error::Schema(format!(
                "empty interval {}{lo},{hi}{}",
                if lo_closed { '[' } else { '(' },
                if hi_closed { ']' } else { ')' }
            )));
        }
        Ok(Self { lo, lo_closed, hi, hi_closed })
    }

    /// `(a, b]` with finite rational ends given as integers.
    pub fn open_closed(a: i64, b: i64) -> Result<Self> {
        Self::new(rat(a), false, rat(b), true)
    }

    /// `[a, b)` with finite rational ends given as integers.
    pub fn closed_open(a: i64, b: i64) -> Result<Self> {
        Self::new(rat(a), true, rat(b), false)
    }

    pub fn lo(&self) -> &Bound {
        &self.lo
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi(&self) -> &Bound {
        &self.hi
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn left_end(&self) -> (&Bound, bool) {
        (&self.lo, self.lo_closed)
    }

    pub fn right_end(&self) -> (&Bound, bool) {
        (&self.hi, self.hi_closed)
    }

    pub fn contains_point(&self, x: &BigRational) -> bool {
        let x = Bound::Finite(x.clone());
        let above = self.lo < x || (self.lo == x && self.lo_closed);
        let below = x < self.hi || (x == self.hi && self.hi_closed);
        above && below
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &RealInterval) -> bool {
        let left = self.lo < other.lo || (self.lo == other.lo && (self.lo_closed || !other.lo_closed));
        let right = other.hi < self.hi || (self.hi == other.hi && (self.hi_closed || !other.hi_closed));
        left && right
    }
}

fn rat(a: i64) -> Bound {
    Bound::Finite(BigRational::from_integer(a.into()))
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// The isomorphism class of a finitely generated representation of a
/// continuous quiver: a sorted multiset of intervals.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FGRep {
    intervals: Vec<RealInterval>,
}

impl FGRep {
    pub fn new(mut intervals: Vec<RealInterval>) -> Self {
        intervals.sort();
        Self { intervals }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn intervals(&self) -> &[RealInterval] {
        &self.intervals
    }

    pub fn is_zero(&self) -> bool {
        self.intervals.is_empty()
    }

    /// The dimension function `x ↦ #{intervals containing x}`.
    pub fn dim_at(&self, x: &BigRational) -> usize {
        self.intervals.iter().filter(|iv| iv.contains_point(x)).count()
    }

    pub fn direct_sum(&self, other: &FGRep) -> FGRep {
        FGRep::new(self.intervals.iter().chain(&other.intervals).cloned().collect())
    }
}

impl fmt::Display for FGRep {
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

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> Bound {
        Bound::Finite(BigRational::new(1.into(), 2.into()))
    }

    #[test]
    fn validation() {
        assert!(RealInterval::open_closed(1, 1).is_err());
        assert!(RealInterval::new(rat(1), true, rat(1), true).is_ok());
        assert!(RealInterval::new(Bound::NegInf, true, rat(0), true).is_err());
        assert!(RealInterval::new(rat(2), false, rat(1), false).is_err());
        assert!(RealInterval::new(Bound::NegInf, false, Bound::PosInf, false).is_ok());
    }

    #[test]
    fn containment() {
        let a = RealInterval::open_closed(0, 1).unwrap();
        let b = RealInterval::new(rat(0), false, half(), true).unwrap();
        let c = RealInterval::new(rat(0), true, rat(1), true).unwrap();
        assert!(a.contains(&b));
        assert!(!b.contains(&a));
        assert!(c.contains(&a));
        assert!(!a.contains(&c));
        assert!(a.contains(&a));
    }

    #[test]
    fn dimension_function() {
        let v = FGRep::new(vec![RealInterval::open_closed(0, 2).unwrap(), RealInterval::closed_open(1, 3).unwrap()]);
        let at = |k: i64| v.dim_at(&BigRational::from_integer(k.into()));
        assert_eq!((at(0), at(1), at(2), at(3)), (0, 2, 2, 0));
        assert_eq!(v.to_string(), "(0,2]⊕[1,3)");
    }
}
