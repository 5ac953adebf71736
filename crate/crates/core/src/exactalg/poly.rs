use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in one variable `q` with integer coefficients, stored in
/// ascending degree with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (deg, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{deg}")?,
                (_, false) => write!(f, "{a}q^{deg}")?,
            }
        }
        Ok(())
    }
}

/// Fits the unique integer polynomial of degree at most `degree_bound`
/// through the given points.
///
/// The first `degree_bound + 1` points determine the candidate; any further
/// points must lie on it. Fails when the candidate has a non-integer
/// coefficient or misses a surplus point.
pub fn interpolate<T>(points: &[(u64, T)], degree_bound: usize) -> Result<IntPoly>
where
    T: Into<BigInt> + Clone,
{
    let pts: Vec<(BigInt, BigInt)> =
        points.iter().map(|(x, y)| (BigInt::from(*x), y.clone().into())).collect();
    if pts.len() < degree_bound + 1 {
        return Err(Error::Precondition(format!(
            "{} points cannot determine a polynomial of degree {degree_bound}",
            pts.len()
        )));
    }
    for (i, a) in pts.iter().enumerate() {
        if pts[..i].iter().any(|b| b.0 == a.0) {
            return Err(Error::Precondition(format!("repeated abscissa {}", a.0)));
        }
    }
    let (fit, surplus) = pts.split_at(degree_bound + 1);

    // Newton divided differences over Q.
    let xs: Vec<BigRational> = fit.iter().map(|(x, _)| BigRational::from(x.clone())).collect();
    let mut dd: Vec<BigRational> = fit.iter().map(|(_, y)| BigRational::from(y.clone())).collect();
    for level in 1..dd.len() {
        for i in (level..dd.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner expansion of the Newton form into monomial coefficients.
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); dd.len()];
    for i in (0..dd.len()).rev() {
        // coeffs <- coeffs * (q - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); dd.len()];
        for (d, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d + 1 < next.len() {
                next[d + 1] += c;
            }
            next[d] -= c * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    if let Some(bad) = coeffs.iter().find(|c| !c.is_integer()) {
        return Err(Error::Interpolation(format!(
            "coefficient {bad} is not an integer; the data is not an integer polynomial of degree <= {degree_bound}"
        )));
    }
    let poly = IntPoly::from_coeffs(coeffs.into_iter().map(|c| c.to_integer()).collect());
    for (x, y) in surplus {
        let got = poly.eval(x);
        if &got != y {
            return Err(Error::Interpolation(format!(
                "fitted polynomial {poly} gives {got} at {x}, expected {y}"
            )));
        }
    }
    Ok(poly)
}
