use rand::Rng;

use super::{DimVector, IsoClass, QuiverA};
use crate::error::{Error, Result};
use crate::exactalg::{MatrixFp, PrimeField};

/// A point of the representation variety E_V: one matrix per arrow, of
/// shape `dims[t(h)] × dims[s(h)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepPoint {
    quiver: QuiverA,
    dims: DimVector,
    field: PrimeField,
    maps: Vec<MatrixFp>,
}

impl RepPoint {
    pub fn new(quiver: QuiverA, dims: DimVector, field: PrimeField, maps: Vec<MatrixFp>) -> Result<Self> {
        if dims.len() != quiver.n() {
            return Err(Error::Schema(format!(
                "dimension vector {dims} does not match a quiver with {} vertices",
                quiver.n()
            )));
        }
        if maps.len() != quiver.arrow_count() {
            return Err(Error::Schema(format!(
                "{} arrow maps given for {} arrows",
                maps.len(),
                quiver.arrow_count()
            )));
        }
        for (h, m) in maps.iter().enumerate() {
            let want = (dims[quiver.target(h)], dims[quiver.source(h)]);
            if (m.rows(), m.cols()) != want {
                return Err(Error::Schema(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    h + 1,
                    want.0,
                    want.1,
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(Error::Schema(format!("arrow {} is over {}, expected {field}", h + 1, m.field())));
            }
        }
        Ok(Self { quiver, dims, field, maps })
    }

    /// The point with all arrow maps zero.
    pub fn zero(quiver: QuiverA, dims: DimVector, field: PrimeField) -> Result<Self> {
        let maps = (0..quiver.arrow_count())
            .map(|h| MatrixFp::zeros(field, dims.0.get(quiver.target(h)).copied().unwrap_or(0), dims.0.get(quiver.source(h)).copied().unwrap_or(0)))
            .collect();
        Self::new(quiver, dims, field, maps)
    }

    pub fn random<R: Rng + ?Sized>(quiver: QuiverA, dims: DimVector, field: PrimeField, rng: &mut R) -> Result<Self> {
        let maps = (0..quiver.arrow_count())
            .map(|h| MatrixFp::random(field, dims.0.get(quiver.target(h)).copied().unwrap_or(0), dims.0.get(quiver.source(h)).copied().unwrap_or(0), rng))
            .collect();
        Self::new(quiver, dims, field, maps)
    }

    pub fn quiver(&self) -> &QuiverA {
        &self.quiver
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn maps(&self) -> &[MatrixFp] {
        &self.maps
    }

    /// The action `g·φ = g φ g⁻¹` of `g ∈ G_V = Π_x GL(V_x)`.
    pub fn conjugate(&self, g: &[MatrixFp]) -> Result<RepPoint> {
        if g.len() != self.quiver.n() {
            return Err(Error::Typing(format!("{} group components for {} vertices", g.len(), self.quiver.n())));
        }
        let mut maps = Vec::with_capacity(self.maps.len());
        for (h, m) in self.maps.iter().enumerate() {
            let s = self.quiver.source(h);
            let t = self.quiver.target(h);
            let ginv = g[s]
                .inverse()
                .ok_or_else(|| Error::Precondition(format!("group component at vertex {} is not invertible", s + 1)))?;
            maps.push(g[t].mul(m).mul(&ginv));
        }
        RepPoint::new(self.quiver.clone(), self.dims.clone(), self.field, maps)
    }

    /// A uniformly random element of G_V.
    pub fn random_group_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<MatrixFp> {
        self.dims.0.iter().map(|&d| MatrixFp::random_invertible(self.field, d, rng)).collect()
    }
}

/// A block-diagonal representative of `cls`: the basis of `V_x` is the list
/// of intervals containing `x` in storage order, and each arrow sends an
/// interval's basis vector to the same interval's basis vector when both
/// endpoints lie in it.
pub fn canonical_point(cls: &IsoClass, quiver: &QuiverA, field: PrimeField) -> Result<RepPoint> {
    cls.check(quiver)?;
    let n = quiver.n();
    // index of each interval within the basis at each vertex
    let mut slot = vec![vec![None; cls.intervals().len()]; n];
    let mut dims = vec![0; n];
    for (k, iv) in cls.intervals().iter().enumerate() {
        for x in iv.lo()..=iv.hi() {
            slot[x - 1][k] = Some(dims[x - 1]);
            dims[x - 1] += 1;
        }
    }
    let mut maps = Vec::with_capacity(quiver.arrow_count());
    for h in 0..quiver.arrow_count() {
        let (s, t) = (quiver.source(h), quiver.target(h));
        let mut m = MatrixFp::zeros(field, dims[t], dims[s]);
        for (&src, &tgt) in slot[s].iter().zip(&slot[t]) {
            if let (Some(c), Some(r)) = (src, tgt) {
                m.set(r, c, 1);
            }
        }
        maps.push(m);
    }
    RepPoint::new(quiver.clone(), DimVector(dims), field, maps)
}

/// Linear system whose kernel is Hom(a, b): unknowns are the entries of the
/// matrices `F_x : a_x → b_x`, equations `F_t a_h = b_h F_s`.
fn intertwiner_system(a: &RepPoint, b: &RepPoint) -> Result<(MatrixFp, Vec<usize>)> {
    if a.quiver != b.quiver || a.field != b.field {
        return Err(Error::Typing("homomorphisms between representations of different quivers or fields".into()));
    }
    let q = &a.quiver;
    let f = a.field;
    let n = q.n();
    let mut offset = vec![0; n + 1];
    for x in 0..n {
        offset[x + 1] = offset[x] + b.dims[x] * a.dims[x];
    }
    let unknowns = offset[n];
    let var = |x: usize, r: usize, c: usize| offset[x] + r * a.dims[x] + c;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for h in 0..q.arrow_count() {
        let (s, t) = (q.source(h), q.target(h));
        let (ah, bh) = (&a.maps[h], &b.maps[h]);
        for r in 0..b.dims[t] {
            for c in 0..a.dims[s] {
                let mut row = vec![0u32; unknowns];
                for k in 0..a.dims[t] {
                    let v = ah.get(k, c);
                    if v != 0 {
                        let i = var(t, r, k);
                        row[i] = f.add(row[i], v);
                    }
                }
                for k in 0..b.dims[s] {
                    let v = bh.get(r, k);
                    if v != 0 {
                        let i = var(s, k, c);
                        row[i] = f.sub(row[i], v);
                    }
                }
                rows.push(row);
            }
        }
    }
    let flat: Vec<i64> = rows.iter().flatten().map(|&x| x as i64).collect();
    Ok((MatrixFp::new(f, rows.len(), unknowns, &flat)?, offset))
}

/// `dim Hom(a, b)` over the common prime field.
pub fn hom_dim_points(a: &RepPoint, b: &RepPoint) -> Result<usize> {
    let (sys, offset) = intertwiner_system(a, b)?;
    Ok(offset[a.quiver.n()] - sys.rank())
}

/// A basis of Hom(a, b); each element lists one matrix `a_x → b_x` per
/// vertex.
pub fn hom_space(a: &RepPoint, b: &RepPoint) -> Result<Vec<Vec<MatrixFp>>> {
    let (sys, offset) = intertwiner_system(a, b)?;
    let n = a.quiver.n();
    Ok(sys
        .nullspace()
        .into_iter()
        .map(|v| {
            (0..n)
                .map(|x| {
                    let entries: Vec<i64> = v[offset[x]..offset[x + 1]].iter().map(|&e| e as i64).collect();
                    MatrixFp::new(a.field, b.dims[x], a.dims[x], &entries).expect("shape computed from offsets")
                })
                .collect()
        })
        .collect())
}
