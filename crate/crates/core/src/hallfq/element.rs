use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::PrimeField;
use crate::finquiver::{DimVector, IsoClass, QuiverA};

/// An element of the Hall algebra F_Q at a fixed prime: a finite rational
/// combination of orbit characteristic functions. No zero coefficients are
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallFn {
    quiver: QuiverA,
    field: PrimeField,
    coeffs: BTreeMap<IsoClass, BigRational>,
}

impl HallFn {
    pub fn zero(quiver: QuiverA, field: PrimeField) -> Self {
        Self { quiver, field, coeffs: BTreeMap::new() }
    }

    /// The characteristic function `1_{O_cls}`.
    pub fn characteristic(quiver: QuiverA, field: PrimeField, cls: IsoClass) -> Result<Self> {
        Self::from_terms(quiver, field, [(cls, BigRational::one())])
    }

    /// The unit `1_{O_0}` (characteristic function of the zero module).
    pub fn unit(quiver: QuiverA, field: PrimeField) -> Self {
        let mut f = Self::zero(quiver, field);
        f.coeffs.insert(IsoClass::zero(), BigRational::one());
        f
    }

    pub fn from_terms(
        quiver: QuiverA,
        field: PrimeField,
        terms: impl IntoIterator<Item = (IsoClass, BigRational)>,
    ) -> Result<Self> {
        let mut f = Self::zero(quiver, field);
        for (cls, c) in terms {
            cls.check(&f.quiver)?;
            f.add_term(cls, c);
        }
        Ok(f)
    }

    pub fn quiver(&self) -> &QuiverA {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IsoClass, &BigRational)> {
        self.coeffs.iter()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, cls: &IsoClass) -> BigRational {
        self.coeffs.get(cls).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The dimension vectors carrying a nonzero component.
    pub fn support_dims(&self) -> Vec<DimVector> {
        let mut d: Vec<DimVector> = self.coeffs.keys().map(|c| c.dims(self.quiver.n())).collect();
        d.sort();
        d.dedup();
        d
    }

    /// The homogeneous component of dimension `dims`.
    pub fn component(&self, dims: &DimVector) -> HallFn {
        let n = self.quiver.n();
        HallFn {
            quiver: self.quiver.clone(),
            field: self.field,
            coeffs: self.coeffs.iter().filter(|(c, _)| &c.dims(n) == dims).map(|(c, v)| (c.clone(), v.clone())).collect(),
        }
    }

    pub(crate) fn add_term(&mut self, cls: IsoClass, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(cls.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&cls);
        }
    }

    pub fn check_compatible(&self, other: &HallFn) -> Result<()> {
        if self.quiver != other.quiver || self.field != other.field {
            return Err(Error::Typing(format!(
                "Hall functions over {} / {} and {} / {}",
                self.quiver, self.field, other.quiver, other.field
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &HallFn) -> Result<HallFn> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (c, v) in &other.coeffs {
            out.add_term(c.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &BigRational) -> HallFn {
        let mut out = HallFn::zero(self.quiver.clone(), self.field);
        for (c, v) in &self.coeffs {
            out.add_term(c.clone(), v * s);
        }
        out
    }
}

impl fmt::Display for HallFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (cls, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "1_{{{cls}}}")?;
            } else {
                write!(f, "({c})·1_{{{cls}}}")?;
            }
        }
        Ok(())
    }
}
