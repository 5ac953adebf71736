use num_bigint::BigInt;

use super::HallAlgebra;
use crate::error::{Error, Result};
use crate::exactalg::{small_primes, interpolate, IntPoly, PrimeField};
use crate::finquiver::{IsoClass, QuiverA};

/// Primes held out of the fit and used only to validate it.
const HELD_OUT: usize = 2;

/// `D = Σ_x sub_x·(total_x − sub_x)`, the degree of the product of Gaussian
/// binomials bounding the Hall number.
pub fn polynomial_degree_bound(total: &IsoClass, sub: &IsoClass, n: usize) -> usize {
    let (t, s) = (total.dims(n), sub.dims(n));
    (0..n).map(|x| s[x] * t[x].saturating_sub(s[x])).sum()
}

/// The integer polynomial `P` with `P(q) = F^total_{quot, sub}(q)`,
/// interpolated at the first `D+1` primes and checked at two more.
pub fn hall_polynomial(total: &IsoClass, quot: &IsoClass, sub: &IsoClass, quiver: &QuiverA) -> Result<IntPoly> {
    hall_polynomial_with_budget(total, quot, sub, quiver, super::DEFAULT_HALL_BUDGET)
}

pub fn hall_polynomial_with_budget(
    total: &IsoClass,
    quot: &IsoClass,
    sub: &IsoClass,
    quiver: &QuiverA,
    budget: u64,
) -> Result<IntPoly> {
    let n = quiver.n();
    for c in [total, quot, sub] {
        c.check(quiver)?;
    }
    if &quot.dims(n) + &sub.dims(n) != total.dims(n) {
        return Err(Error::Precondition(format!(
            "dimensions {} + {} do not add up to {}",
            quot.dims(n),
            sub.dims(n),
            total.dims(n)
        )));
    }
    let d = polynomial_degree_bound(total, sub, n);
    let primes: Vec<u32> = small_primes().take(d + 1 + HELD_OUT).collect();
    if primes.len() < d + 1 + HELD_OUT {
        return Err(Error::Resource(format!(
            "degree bound {d} needs {} primes, only {} are available",
            d + 1 + HELD_OUT,
            primes.len()
        )));
    }
    let mut samples = Vec::with_capacity(primes.len());
    for &p in &primes {
        let alg = HallAlgebra::with_budget(quiver, PrimeField::new(p)?, budget)?;
        samples.push((p as u64, alg.hall_number(total, quot, sub)?));
    }
    let (fit_pts, held) = samples.split_at(d + 1);
    let poly = interpolate(fit_pts, d).map_err(|e| match e {
        Error::Interpolation(m) => Error::Polynomiality(m),
        other => other,
    })?;
    for &(q, v) in held {
        let got = poly.eval(&BigInt::from(q));
        if got != BigInt::from(v) {
            return Err(Error::Polynomiality(format!(
                "fit {poly} predicts {got} at q = {q}, observed {v}"
            )));
        }
    }
    Ok(poly)
}
