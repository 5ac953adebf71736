use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// The Gaussian binomial coefficient `[n choose k]_q`, i.e. the number of
/// `k`-dimensional subspaces of an `n`-dimensional space over a field with
/// `q` elements.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
    }
    if q < 2 {
        return Err(Error::Precondition(format!("q = {q} must be at least 2")));
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    Ok(num / den)
}

/// `|GL_n(F_q)| = Π_{i<n} (q^n − q^i)`.
pub fn gl_order(n: usize, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let qn = q.pow(n as u32);
    (0..n).fold(BigUint::one(), |acc, i| acc * (&qn - q.pow(i as u32)))
}
