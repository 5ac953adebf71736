use super::{canonical_point, hom_dim_points, DiscreteInterval, IsoClass, QuiverA, RepPoint};
use crate::error::{Error, Result};
use crate::exactalg::PrimeField;

/// `dim Hom(T_src, T_dst)` between interval modules, by solving the
/// intertwiner system over `field`. Always 0 or 1 in type A.
pub fn hom_dim(src: DiscreteInterval, dst: DiscreteInterval, quiver: &QuiverA, field: PrimeField) -> Result<usize> {
    let a = canonical_point(&IsoClass::new(vec![src]), quiver, field)?;
    let b = canonical_point(&IsoClass::new(vec![dst]), quiver, field)?;
    hom_dim_points(&a, &b)
}

/// Precomputed data for decomposing points of one quiver over one field.
///
/// Holds the interval modules in an order where every nonzero
/// `Hom(T_J, T_J')` with `J ≠ J'` has `J` before `J'`, so the Hom matrix is
/// upper unitriangular. Such an order exists because type-A quivers are
/// representation-directed; it depends on the orientation.
#[derive(Debug, Clone)]
pub struct Decomposer {
    quiver: QuiverA,
    field: PrimeField,
    order: Vec<DiscreteInterval>,
    modules: Vec<RepPoint>,
    hom: Vec<Vec<usize>>,
}

impl Decomposer {
    pub fn new(quiver: &QuiverA, field: PrimeField) -> Result<Self> {
        let all = DiscreteInterval::all(quiver.n());
        let modules: Vec<RepPoint> = all
            .iter()
            .map(|&iv| canonical_point(&IsoClass::new(vec![iv]), quiver, field))
            .collect::<Result<_>>()?;
        let k = all.len();
        let mut hom = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                hom[i][j] = hom_dim_points(&modules[i], &modules[j])?;
            }
        }
        for (i, row) in hom.iter().enumerate() {
            if row[i] != 1 {
                return Err(Error::Precondition(format!("interval module {} is not a brick", all[i])));
            }
        }

        // Kahn's algorithm on J → J' whenever Hom(T_J, T_J') ≠ 0; ties broken
        // by (lo asc, hi desc) for determinism.
        let key = |iv: &DiscreteInterval| (iv.lo(), std::cmp::Reverse(iv.hi()));
        let mut indeg: Vec<usize> =
            (0..k).map(|j| (0..k).filter(|&i| i != j && hom[i][j] != 0).count()).collect();
        let mut placed = vec![false; k];
        let mut perm = Vec::with_capacity(k);
        while perm.len() < k {
            let next = (0..k)
                .filter(|&j| !placed[j] && indeg[j] == 0)
                .min_by_key(|&j| key(&all[j]))
                .ok_or_else(|| Error::Precondition(format!("Hom relation on intervals of {quiver} has a cycle")))?;
            placed[next] = true;
            perm.push(next);
            for j in 0..k {
                if j != next && hom[next][j] != 0 {
                    indeg[j] -= 1;
                }
            }
        }
        let order = perm.iter().map(|&i| all[i]).collect();
        let hom = perm.iter().map(|&i| perm.iter().map(|&j| hom[i][j]).collect()).collect();
        let modules = perm.iter().map(|&i| modules[i].clone()).collect();
        Ok(Self { quiver: quiver.clone(), field, order, modules, hom })
    }

    pub fn quiver(&self) -> &QuiverA {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// The intervals in unitriangular order.
    pub fn order(&self) -> &[DiscreteInterval] {
        &self.order
    }

    /// `hom_matrix()[i][j] = dim Hom(T_order[i], T_order[j])`.
    pub fn hom_matrix(&self) -> &[Vec<usize>] {
        &self.hom
    }

    /// `(dim Hom(T_J, M), dim Hom(M, T_J))` for every interval `J` in
    /// [`order`](Self::order), where `M` has class `cls`.
    pub fn hom_profile(&self, cls: &IsoClass) -> Result<(Vec<usize>, Vec<usize>)> {
        cls.check(&self.quiver)?;
        let k = self.order.len();
        let (mut into, mut out) = (vec![0; k], vec![0; k]);
        for iv in cls.intervals() {
            let j = self.order.iter().position(|x| x == iv).expect("checked class");
            for i in 0..k {
                into[i] += self.hom[i][j];
                out[i] += self.hom[j][i];
            }
        }
        Ok((into, out))
    }

    /// The isomorphism class of `point`.
    ///
    /// With `h(J) = dim Hom(T_J, point)` and multiplicities `m`, we have
    /// `h = H m`; `H` is unitriangular so back substitution recovers `m`.
    pub fn decompose(&self, point: &RepPoint) -> Result<IsoClass> {
        if point.quiver() != &self.quiver || point.field() != self.field {
            return Err(Error::Typing(format!(
                "decomposer for {} over {} given a point of {} over {}",
                self.quiver,
                self.field,
                point.quiver(),
                point.field()
            )));
        }
        let k = self.order.len();
        let h: Vec<i64> = self
            .modules
            .iter()
            .map(|t| hom_dim_points(t, point).map(|d| d as i64))
            .collect::<Result<_>>()?;
        let mut m = vec![0i64; k];
        for i in (0..k).rev() {
            let tail: i64 = (i + 1..k).map(|j| self.hom[i][j] as i64 * m[j]).sum();
            m[i] = h[i] - tail;
            if m[i] < 0 {
                return Err(Error::Precondition(format!(
                    "negative multiplicity for {} while decomposing",
                    self.order[i]
                )));
            }
        }
        let mut intervals = Vec::new();
        for (iv, &mult) in self.order.iter().zip(&m) {
            intervals.extend(std::iter::repeat_n(*iv, mult as usize));
        }
        let cls = IsoClass::new(intervals);
        debug_assert_eq!(&cls.dims(self.quiver.n()), point.dims());
        Ok(cls)
    }
}

/// One-shot decomposition; build a [`Decomposer`] to decompose many points.
pub fn decompose(point: &RepPoint) -> Result<IsoClass> {
    Decomposer::new(point.quiver(), point.field())?.decompose(point)
}
