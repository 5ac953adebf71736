use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::contquiver::{ContinuousQuiverA, FGRep};
use crate::error::{Error, Result};
use crate::exactalg::PrimeField;

/// An element of the Hall algebra of a continuous quiver at a fixed prime:
/// a finite rational combination of characteristic functions of
/// finitely generated representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContHallFn {
    ar: ContinuousQuiverA,
    field: PrimeField,
    coeffs: BTreeMap<FGRep, BigRational>,
}

impl ContHallFn {
    pub fn zero(ar: ContinuousQuiverA, field: PrimeField) -> Self {
        Self { ar, field, coeffs: BTreeMap::new() }
    }

    pub fn characteristic(ar: ContinuousQuiverA, field: PrimeField, rep: FGRep) -> Self {
        Self::from_terms(ar, field, [(rep, BigRational::one())])
    }

    pub fn unit(ar: ContinuousQuiverA, field: PrimeField) -> Self {
        Self::characteristic(ar, field, FGRep::zero())
    }

    pub fn from_terms(
        ar: ContinuousQuiverA,
        field: PrimeField,
        terms: impl IntoIterator<Item = (FGRep, BigRational)>,
    ) -> Self {
        let mut f = Self::zero(ar, field);
        for (rep, c) in terms {
            f.add_term(rep, c);
        }
        f
    }

    pub fn quiver(&self) -> &ContinuousQuiverA {
        &self.ar
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FGRep, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<FGRep> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn coeff(&self, rep: &FGRep) -> BigRational {
        self.coeffs.get(rep).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub(crate) fn add_term(&mut self, rep: FGRep, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(rep.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&rep);
        }
    }

    pub fn check_compatible(&self, other: &ContHallFn) -> Result<()> {
        if self.ar != other.ar || self.field != other.field {
            return Err(Error::Typing("continuous Hall functions over different quivers or fields".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ContHallFn) -> Result<ContHallFn> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (r, c) in &other.coeffs {
            out.add_term(r.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &BigRational) -> ContHallFn {
        Self::from_terms(self.ar.clone(), self.field, self.coeffs.iter().map(|(r, c)| (r.clone(), c * s)))
    }
}

impl fmt::Display for ContHallFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (rep, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "1_{{{rep}}}")?;
            } else {
                write!(f, "({c})·1_{{{rep}}}")?;
            }
        }
        Ok(())
    }
}
