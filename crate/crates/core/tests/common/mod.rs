//! Brute-force reference computations, written without the library's
//! linear algebra so they can check it.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Vector = Vec<u32>;
pub type Mat = Vec<Vec<u32>>;
pub type Span = BTreeSet<Vector>;

pub fn all_vectors(d: usize, p: u32) -> Vec<Vector> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v: Vector| {
                (0..p).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every vector of the subspace spanned by `gens`.
pub fn span(gens: &[Vector], d: usize, p: u32) -> Span {
    let mut set: Span = [vec![0; d]].into_iter().collect();
    for g in gens {
        let mut next = Span::new();
        for s in &set {
            for c in 0..p {
                next.insert(s.iter().zip(g).map(|(a, b)| (a + c * b) % p).collect());
            }
        }
        set = next;
    }
    set
}

pub fn dim_of(size: usize, p: u32) -> usize {
    let mut k = 0;
    let mut s = 1;
    while s < size {
        s *= p as usize;
        k += 1;
    }
    assert_eq!(s, size, "not a subspace size");
    k
}

/// All `k`-dimensional subspaces of F_p^d, as vector sets.
pub fn subspaces(d: usize, k: usize, p: u32) -> Vec<Span> {
    let vecs = all_vectors(d, p);
    let mut found = BTreeSet::new();
    let mut tuple = vec![0usize; k];
    loop {
        let gens: Vec<Vector> = tuple.iter().map(|&i| vecs[i].clone()).collect();
        let s = span(&gens, d, p);
        if s.len() == (p as usize).pow(k as u32) {
            found.insert(s);
        }
        let mut i = 0;
        loop {
            if i == k {
                return found.into_iter().collect();
            }
            tuple[i] += 1;
            if tuple[i] < vecs.len() {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

pub fn apply(m: &Mat, v: &[u32], p: u32) -> Vector {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % p).collect()
}

/// A representation of a type-A quiver with explicit matrices.
#[derive(Clone, Debug)]
pub struct Rep {
    pub dims: Vec<usize>,
    /// `(source, target)` per arrow, 0-based.
    pub arrows: Vec<(usize, usize)>,
    pub maps: Vec<Mat>,
}

pub fn arrows(fwd: &[bool]) -> Vec<(usize, usize)> {
    fwd.iter().enumerate().map(|(h, &f)| if f { (h, h + 1) } else { (h + 1, h) }).collect()
}

/// Direct sum of interval modules with identity maps inside each interval.
pub fn canonical(fwd: &[bool], intervals: &[(usize, usize)]) -> Rep {
    let n = fwd.len() + 1;
    let at = |x: usize| -> Vec<usize> {
        (0..intervals.len()).filter(|&i| intervals[i].0 <= x + 1 && x < intervals[i].1).collect()
    };
    let dims = (0..n).map(|x| at(x).len()).collect();
    let arrows = arrows(fwd);
    let maps = arrows
        .iter()
        .map(|&(s, t)| {
            let (bs, bt) = (at(s), at(t));
            bt.iter().map(|i| bs.iter().map(|j| (i == j) as u32).collect()).collect()
        })
        .collect();
    Rep { dims, arrows, maps }
}

/// `|Hom(a, b)|` by trying every tuple of matrices.
pub fn hom_count(a: &Rep, b: &Rep, p: u32) -> u64 {
    let n = a.dims.len();
    let sizes: Vec<usize> = (0..n).map(|x| a.dims[x] * b.dims[x]).collect();
    let total: usize = sizes.iter().sum();
    let mut count = 0;
    for flat in all_vectors(total, p) {
        let mut off = 0;
        let f: Vec<Mat> = (0..n)
            .map(|x| {
                let m = (0..b.dims[x]).map(|r| flat[off + r * a.dims[x]..off + (r + 1) * a.dims[x]].to_vec()).collect();
                off += sizes[x];
                m
            })
            .collect();
        let ok = a.arrows.iter().enumerate().all(|(h, &(s, t))| {
            (0..a.dims[s]).all(|c| {
                let e: Vector = (0..a.dims[s]).map(|i| (i == c) as u32).collect();
                apply(&f[t], &apply(&a.maps[h], &e, p), p) == apply(&b.maps[h], &apply(&f[s], &e, p), p)
            })
        });
        count += ok as u64;
    }
    count
}

pub fn hom_dim(a: &Rep, b: &Rep, p: u32) -> usize {
    dim_of(hom_count(a, b, p) as usize, p)
}

pub fn all_intervals(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|lo| (lo..=n).map(move |hi| (lo, hi))).collect()
}

/// `dim Hom(T_J, m)` for every interval `J`; equal vectors mean isomorphic
/// representations.
pub fn h_vector(fwd: &[bool], m: &Rep, p: u32) -> Vec<usize> {
    all_intervals(fwd.len() + 1).into_iter().map(|j| hom_dim(&canonical(fwd, &[j]), m, p)).collect()
}

/// Interval multiplicities of a linearly oriented representation from the
/// ranks `r(i, j)` of the composite maps from vertex `i` to vertex `j`.
pub fn multiplicities(n: usize, r: impl Fn(usize, usize) -> usize) -> Vec<(usize, usize)> {
    let rr = |i: usize, j: usize| -> i64 { if i == 0 || j > n { 0 } else { r(i, j) as i64 } };
    let mut out = Vec::new();
    for (i, j) in all_intervals(n) {
        let m = rr(i, j) - rr(i - 1, j) - rr(i, j + 1) + rr(i - 1, j + 1);
        assert!(m >= 0);
        out.extend(std::iter::repeat_n((i, j), m as usize));
    }
    out
}

fn image(m: &Mat, s: &Span, p: u32) -> Span {
    s.iter().map(|v| apply(m, v, p)).collect()
}

/// Images of `s` at vertex `i` carried to vertex `j ≥ i` along a linear quiver.
fn carry(rep: &Rep, s: &Span, i: usize, j: usize, p: u32) -> Span {
    (i..j).fold(s.clone(), |acc, h| image(&rep.maps[h], &acc, p))
}

/// `(quotient, sub)` interval lists of the stable graded subspace `w` of a
/// linearly oriented `rep`, or `None` when `w` is not stable.
pub fn linear_types(rep: &Rep, w: &[Span], p: u32) -> Option<(Vec<(usize, usize)>, Vec<(usize, usize)>)> {
    let n = rep.dims.len();
    for h in 0..n - 1 {
        if !image(&rep.maps[h], &w[h], p).is_subset(&w[h + 1]) {
            return None;
        }
    }
    let whole: Vec<Span> = (0..n).map(|x| all_vectors(rep.dims[x], p).into_iter().collect()).collect();
    let sub = multiplicities(n, |i, j| dim_of(carry(rep, &w[i - 1], i - 1, j - 1, p).len(), p));
    let quot = multiplicities(n, |i, j| {
        let img: Vec<Vector> = carry(rep, &whole[i - 1], i - 1, j - 1, p).into_iter().chain(w[j - 1].iter().cloned()).collect();
        dim_of(span(&img, rep.dims[j - 1], p).len(), p) - dim_of(w[j - 1].len(), p)
    });
    Some((quot, sub))
}

pub fn sorted(mut v: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    v.sort();
    v
}

fn graded_subspaces(dims: &[usize], sub: &[usize], p: u32) -> Vec<Vec<Span>> {
    let mut out: Vec<Vec<Span>> = vec![vec![]];
    for x in 0..dims.len() {
        let choices = subspaces(dims[x], sub[x], p);
        out = out
            .into_iter()
            .flat_map(|pre| {
                choices.iter().map(move |c| {
                    let mut v = pre.clone();
                    v.push(c.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Hall number on the linearly oriented `A_n`.
pub fn linear_hall_number(n: usize, total: &[(usize, usize)], quot: &[(usize, usize)], sub: &[(usize, usize)], p: u32) -> u64 {
    let rep = canonical(&vec![true; n - 1], total);
    let sub_dims: Vec<usize> = (1..=n).map(|x| sub.iter().filter(|iv| iv.0 <= x && x <= iv.1).count()).collect();
    let (q, s) = (sorted(quot.to_vec()), sorted(sub.to_vec()));
    graded_subspaces(&rep.dims, &sub_dims, p)
        .iter()
        .filter(|w| linear_types(&rep, w, p).is_some_and(|(a, b)| a == q && b == s))
        .count() as u64
}

/// All points of `E_V`.
pub fn all_points(fwd: &[bool], dims: &[usize], p: u32) -> Vec<Rep> {
    let arrows = arrows(fwd);
    let sizes: Vec<usize> = arrows.iter().map(|&(s, t)| dims[s] * dims[t]).collect();
    all_vectors(sizes.iter().sum(), p)
        .into_iter()
        .map(|flat| {
            let mut off = 0;
            let maps = arrows
                .iter()
                .map(|&(s, t)| {
                    let m = (0..dims[t]).map(|r| flat[off + r * dims[s]..off + (r + 1) * dims[s]].to_vec()).collect();
                    off += dims[s] * dims[t];
                    m
                })
                .collect();
            Rep { dims: dims.to_vec(), arrows: arrows.clone(), maps }
        })
        .collect()
}

/// For each `(quotient, sub)` type, the number of pairs (point, stable
/// graded subspace of dimension `sub_dims`) on the linearly oriented quiver.
pub fn linear_pair_census(n: usize, dims: &[usize], sub_dims: &[usize], p: u32) -> BTreeMap<(Vec<(usize, usize)>, Vec<(usize, usize)>), u64> {
    let fwd = vec![true; n - 1];
    let ws = graded_subspaces(dims, sub_dims, p);
    let mut out = BTreeMap::new();
    for rep in all_points(&fwd, dims, p) {
        for w in &ws {
            if let Some(t) = linear_types(&rep, w, p) {
                *out.entry(t).or_insert(0) += 1;
            }
        }
    }
    out
}

pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}
