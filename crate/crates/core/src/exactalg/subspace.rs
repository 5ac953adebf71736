use super::{MatrixFp, PrimeField};
use crate::error::{Error, Result};

/// Iterator over the `k`-dimensional subspaces of F_p^n, each given by its
/// unique reduced-row-echelon basis (a `k × n` matrix).
///
/// Order: pivot-column sets lexicographically, and within one pivot set the
/// free entries lexicographically in row-major position order.
#[derive(Debug, Clone)]
pub struct Subspaces {
    field: PrimeField,
    n: usize,
    k: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    counter: Vec<u32>,
    done: bool,
}

/// Enumerates every `sub_dim`-dimensional subspace of F_p^`ambient_dim`
/// exactly once.
pub fn enumerate_subspaces(ambient_dim: usize, sub_dim: usize, field: PrimeField) -> Result<Subspaces> {
    if sub_dim > ambient_dim {
        return Err(Error::Precondition(format!(
            "subspace dimension {sub_dim} exceeds ambient dimension {ambient_dim}"
        )));
    }
    let pivots: Vec<usize> = (0..sub_dim).collect();
    let free = free_positions(&pivots, ambient_dim);
    Ok(Subspaces {
        field,
        n: ambient_dim,
        k: sub_dim,
        counter: vec![0; free.len()],
        pivots,
        free,
        done: false,
    })
}

fn free_positions(pivots: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (row, &pc) in pivots.iter().enumerate() {
        for col in pc + 1..n {
            if !pivots.contains(&col) {
                out.push((row, col));
            }
        }
    }
    out
}

impl Subspaces {
    fn current(&self) -> MatrixFp {
        let mut m = MatrixFp::zeros(self.field, self.k, self.n);
        for (row, &pc) in self.pivots.iter().enumerate() {
            m.set(row, pc, 1);
        }
        for (&(row, col), &v) in self.free.iter().zip(&self.counter) {
            m.set(row, col, v);
        }
        m
    }

    fn advance(&mut self) {
        let p = self.field.p();
        for slot in self.counter.iter_mut().rev() {
            *slot += 1;
            if *slot < p {
                return;
            }
            *slot = 0;
        }
        if !self.next_pivots() {
            self.done = true;
            return;
        }
        self.free = free_positions(&self.pivots, self.n);
        self.counter = vec![0; self.free.len()];
    }

    /// Next k-combination of 0..n in lexicographic order.
    fn next_pivots(&mut self) -> bool {
        let (n, k) = (self.n, self.k);
        let Some(i) = (0..k).rev().find(|&i| self.pivots[i] < n - k + i) else {
            return false;
        };
        self.pivots[i] += 1;
        for j in i + 1..k {
            self.pivots[j] = self.pivots[j - 1] + 1;
        }
        true
    }
}

impl Iterator for Subspaces {
    type Item = MatrixFp;

    fn next(&mut self) -> Option<MatrixFp> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::gaussian_binomial;
    use num_traits::ToPrimitive;

    fn fp(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_subspaces(2, 1, fp(2)).unwrap().count(), 3);
        assert_eq!(enumerate_subspaces(3, 1, fp(2)).unwrap().count(), 7);
        for n in 0..4 {
            let only: Vec<_> = enumerate_subspaces(n, 0, fp(5)).unwrap().collect();
            assert_eq!(only.len(), 1);
            assert_eq!((only[0].rows(), only[0].cols()), (0, n));
        }
    }

    #[test]
    fn rejects_oversized_subspace() {
        assert!(enumerate_subspaces(2, 3, fp(2)).is_err());
    }

    #[test]
    fn counts_match_gaussian_binomials() {
        for p in [2, 3, 5, 7] {
            for n in 0..=4 {
                for k in 0..=n {
                    let count = enumerate_subspaces(n, k, fp(p)).unwrap().count();
                    let expected = gaussian_binomial(n, k, p as u64).unwrap().to_usize().unwrap();
                    assert_eq!(count, expected, "n={n} k={k} p={p}");
                }
            }
        }
    }

    #[test]
    fn outputs_are_distinct_rref_bases() {
        let all: Vec<_> = enumerate_subspaces(4, 2, fp(3)).unwrap().collect();
        for m in &all {
            let (r, _) = m.rref();
            assert_eq!(&r, m);
        }
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn order_is_pivot_major() {
        let pivots: Vec<Vec<usize>> = enumerate_subspaces(3, 2, fp(2))
            .unwrap()
            .map(|m| m.rref().1)
            .collect();
        let mut sorted = pivots.clone();
        sorted.sort();
        assert_eq!(pivots, sorted);
        assert_eq!(pivots.first().unwrap(), &vec![0, 1]);
        assert_eq!(pivots.last().unwrap(), &vec![1, 2]);
    }
}
