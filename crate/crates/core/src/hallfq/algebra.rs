use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigUint;
use num_rational::BigRational;

use super::HallFn;
use crate::error::{Error, Result};
use crate::exactalg::{enumerate_subspaces, gaussian_binomial, MatrixFp, PrimeField};
use crate::finquiver::{canonical_point, iso_classes, Decomposer, DimVector, IsoClass, QuiverA, RepPoint};

/// Default cap on the number of subspace candidates tried per count.
pub const DEFAULT_HALL_BUDGET: u64 = 1 << 20;

/// Counts of stable graded subspaces of one point, keyed by
/// `(quotient class, sub class)`.
pub type Census = BTreeMap<(IsoClass, IsoClass), u64>;

struct Sub {
    basis: MatrixFp,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl Sub {
    fn new(basis: MatrixFp, pivots: Vec<usize>) -> Self {
        let free = (0..basis.cols()).filter(|c| !pivots.contains(c)).collect();
        Self { basis, pivots, free }
    }

    fn from_rref(basis: MatrixFp) -> Self {
        let pivots = (0..basis.rows())
            .map(|r| basis.row(r).iter().position(|&x| x != 0).expect("RREF rows are nonzero"))
            .collect();
        Self::new(basis, pivots)
    }

    /// Coordinates of `v` along the basis, and the remainder `v − Σ c_j B_j`
    /// (zero exactly when `v` lies in the subspace).
    fn split(&self, v: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let f = self.basis.field();
        let mut rest = v.to_vec();
        let coords: Vec<u32> = self.pivots.iter().map(|&c| v[c]).collect();
        for (j, &c) in coords.iter().enumerate() {
            if c != 0 {
                for (x, &b) in rest.iter_mut().zip(self.basis.row(j)) {
                    *x = f.sub(*x, f.mul(c, b));
                }
            }
        }
        (coords, rest)
    }
}

/// Hall numbers and products for one quiver over one field.
///
/// Counts are memoised per `(total, sub dimension)`, so repeated products
/// over the same classes are cheap.
pub struct HallAlgebra {
    quiver: QuiverA,
    field: PrimeField,
    budget: u64,
    decomposer: Decomposer,
    cache: RefCell<HashMap<(IsoClass, DimVector), Rc<Census>>>,
}

impl HallAlgebra {
    pub fn new(quiver: &QuiverA, field: PrimeField) -> Result<Self> {
        Self::with_budget(quiver, field, DEFAULT_HALL_BUDGET)
    }

    pub fn with_budget(quiver: &QuiverA, field: PrimeField, budget: u64) -> Result<Self> {
        Ok(Self {
            quiver: quiver.clone(),
            field,
            budget,
            decomposer: Decomposer::new(quiver, field)?,
            cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn quiver(&self) -> &QuiverA {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn decomposer(&self) -> &Decomposer {
        &self.decomposer
    }

    /// Number of stable graded subspaces `W` of the canonical point of
    /// `total` with `W ≅ sub` and `V/W ≅ quot`.
    pub fn hall_number(&self, total: &IsoClass, quot: &IsoClass, sub: &IsoClass) -> Result<u64> {
        let n = self.quiver.n();
        for c in [total, quot, sub] {
            c.check(&self.quiver)?;
        }
        let (dt, dq, ds) = (total.dims(n), quot.dims(n), sub.dims(n));
        if &dq + &ds != dt {
            return Err(Error::Precondition(format!(
                "dimensions {dq} + {ds} do not add up to {dt}"
            )));
        }
        let census = self.census_of_class(total, &ds)?;
        Ok(census.get(&(quot.clone(), sub.clone())).copied().unwrap_or(0))
    }

    /// All Hall numbers `F^total_{quot, sub}` for the given sub dimension.
    pub fn census_of_class(&self, total: &IsoClass, sub_dims: &DimVector) -> Result<Rc<Census>> {
        let key = (total.clone(), sub_dims.clone());
        if let Some(c) = self.cache.borrow().get(&key) {
            return Ok(Rc::clone(c));
        }
        let point = canonical_point(total, &self.quiver, self.field)?;
        let census = Rc::new(self.census(&point, sub_dims)?);
        self.cache.borrow_mut().insert(key, Rc::clone(&census));
        Ok(census)
    }

    /// Classifies every stable graded subspace of `point` of dimension
    /// `sub_dims` by the classes of its quotient and of itself.
    pub fn census(&self, point: &RepPoint, sub_dims: &DimVector) -> Result<Census> {
        if point.quiver() != &self.quiver || point.field() != self.field {
            return Err(Error::Typing(format!(
                "Hall algebra of {} over {} given a point of {} over {}",
                self.quiver,
                self.field,
                point.quiver(),
                point.field()
            )));
        }
        let dims = point.dims();
        if sub_dims.len() != dims.len() || !sub_dims.fits_in(dims) {
            return Err(Error::Precondition(format!("subspace dimension {sub_dims} does not fit in {dims}")));
        }
        let q = self.field.p() as u64;
        for x in 0..dims.len() {
            let size = gaussian_binomial(dims[x], sub_dims[x], q)?;
            if size > BigUint::from(self.budget) {
                return Err(Error::Resource(format!(
                    "{size} subspaces at vertex {} exceed the budget of {}",
                    x + 1,
                    self.budget
                )));
            }
        }
        let subs: Vec<Vec<Sub>> = (0..dims.len())
            .map(|x| Ok(enumerate_subspaces(dims[x], sub_dims[x], self.field)?.map(Sub::from_rref).collect()))
            .collect::<Result<_>>()?;

        let mut census = Census::new();
        let mut choice = Vec::with_capacity(dims.len());
        let mut tried = 0;
        self.search(point, sub_dims, &subs, &mut choice, &mut tried, &mut census)?;
        Ok(census)
    }

    fn search<'a>(
        &self,
        point: &RepPoint,
        sub_dims: &DimVector,
        subs: &'a [Vec<Sub>],
        choice: &mut Vec<&'a Sub>,
        tried: &mut u64,
        census: &mut Census,
    ) -> Result<()> {
        let x = choice.len();
        if x == subs.len() {
            let (q, s) = self.split_point(point, sub_dims, choice)?;
            *census
                .entry((self.decomposer.decompose(&q)?, self.decomposer.decompose(&s)?))
                .or_insert(0) += 1;
            return Ok(());
        }
        for w in &subs[x] {
            *tried += 1;
            if *tried > self.budget {
                return Err(Error::Resource(format!(
                    "stable subspace search of {} tried more than {} candidates",
                    point.dims(),
                    self.budget
                )));
            }
            choice.push(w);
            // Arrow x-1 joins vertices x-1 and x; check it once both are fixed.
            if x == 0 || self.arrow_stable(point, x - 1, choice) {
                self.search(point, sub_dims, subs, choice, tried, census)?;
            }
            choice.pop();
        }
        Ok(())
    }

    fn arrow_stable(&self, point: &RepPoint, h: usize, choice: &[&Sub]) -> bool {
        let (s, t) = (self.quiver.source(h), self.quiver.target(h));
        let phi = &point.maps()[h];
        (0..choice[s].basis.rows()).all(|r| {
            let (_, rest) = choice[t].split(&phi.apply(choice[s].basis.row(r)));
            rest.iter().all(|&v| v == 0)
        })
    }

    fn split_point(&self, point: &RepPoint, sub_dims: &DimVector, choice: &[&Sub]) -> Result<(RepPoint, RepPoint)> {
        let f = self.field;
        let dims = point.dims();
        let quot_dims = DimVector((0..dims.len()).map(|x| dims[x] - sub_dims[x]).collect());
        let mut sub_maps = Vec::with_capacity(self.quiver.arrow_count());
        let mut quot_maps = Vec::with_capacity(self.quiver.arrow_count());
        for (h, phi) in point.maps().iter().enumerate() {
            let (ws, wt) = (choice[self.quiver.source(h)], choice[self.quiver.target(h)]);
            let mut a = MatrixFp::zeros(f, wt.pivots.len(), ws.pivots.len());
            for c in 0..ws.basis.rows() {
                let (coords, _) = wt.split(&phi.apply(ws.basis.row(c)));
                for (r, v) in coords.into_iter().enumerate() {
                    a.set(r, c, v);
                }
            }
            let mut b = MatrixFp::zeros(f, wt.free.len(), ws.free.len());
            for (c, &col) in ws.free.iter().enumerate() {
                let image: Vec<u32> = (0..phi.rows()).map(|r| phi.get(r, col)).collect();
                let (_, rest) = wt.split(&image);
                for (r, &row) in wt.free.iter().enumerate() {
                    b.set(r, c, rest[row]);
                }
            }
            sub_maps.push(a);
            quot_maps.push(b);
        }
        Ok((
            RepPoint::new(self.quiver.clone(), quot_dims, f, quot_maps)?,
            RepPoint::new(self.quiver.clone(), sub_dims.clone(), f, sub_maps)?,
        ))
    }

    /// The Hall product `f ∗ g`; `f` is evaluated on quotients, `g` on subs.
    pub fn product(&self, f: &HallFn, g: &HallFn) -> Result<HallFn> {
        f.check_compatible(g)?;
        if f.quiver() != &self.quiver || f.field() != self.field {
            return Err(Error::Typing(format!(
                "Hall algebra of {} over {} given functions over {} / {}",
                self.quiver,
                self.field,
                f.quiver(),
                f.field()
            )));
        }
        let n = self.quiver.n();
        let mut out = HallFn::zero(self.quiver.clone(), self.field);
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                let (da, db) = (a.dims(n), b.dims(n));
                let c = ca * cb;
                let (pa, pb) = (self.decomposer.hom_profile(a)?, self.decomposer.hom_profile(b)?);
                for total in iso_classes(&self.quiver, &(&da + &db))? {
                    // Hom is left exact in each variable, so an extension of
                    // `a` by `b` has at most their Hom dimensions combined.
                    let pt = self.decomposer.hom_profile(&total)?;
                    let fits = |t: &[usize], x: &[usize], y: &[usize]| t.iter().zip(x).zip(y).all(|((t, x), y)| *t <= x + y);
                    if !fits(&pt.0, &pa.0, &pb.0) || !fits(&pt.1, &pa.1, &pb.1) {
                        continue;
                    }
                    let census = self.census_of_class(&total, &db)?;
                    if let Some(&k) = census.get(&(a.clone(), b.clone())) {
                        out.add_term(total, &c * BigRational::from_integer(k.into()));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// One-shot Hall number over `quiver`; see [`HallAlgebra::hall_number`].
pub fn hall_number(
    total: &IsoClass,
    quot: &IsoClass,
    sub: &IsoClass,
    quiver: &QuiverA,
    field: PrimeField,
) -> Result<u64> {
    HallAlgebra::new(quiver, field)?.hall_number(total, quot, sub)
}

/// One-shot Hall product; see [`HallAlgebra::product`].
pub fn hall_product(f: &HallFn, g: &HallFn) -> Result<HallFn> {
    f.check_compatible(g)?;
    HallAlgebra::new(f.quiver(), f.field())?.product(f, g)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::finquiver::Direction;
    use num_traits::One;

    fn a2() -> QuiverA {
        QuiverA::linear(2).unwrap()
    }

    fn cls(pairs: &[(usize, usize)]) -> IsoClass {
        IsoClass::from_pairs(pairs).unwrap()
    }

    fn rat(k: i64) -> BigRational {
        BigRational::from_integer(k.into())
    }

    #[test]
    fn a2_examples() {
        for p in [2, 3] {
            let f = PrimeField::new(p).unwrap();
            assert_eq!(hall_number(&cls(&[(1, 2)]), &cls(&[(1, 1)]), &cls(&[(2, 2)]), &a2(), f).unwrap(), 1);
            assert_eq!(hall_number(&cls(&[(1, 2)]), &cls(&[(2, 2)]), &cls(&[(1, 1)]), &a2(), f).unwrap(), 0);
        }
    }

    #[test]
    fn a1_lines() {
        let q = QuiverA::linear(1).unwrap();
        for p in [2u32, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            let s = cls(&[(1, 1)]);
            let ss = cls(&[(1, 1), (1, 1)]);
            assert_eq!(hall_number(&ss, &s, &s, &q, f).unwrap(), p as u64 + 1);
        }
    }

    #[test]
    fn dimension_mismatch() {
        let f = PrimeField::new(2).unwrap();
        let r = hall_number(&cls(&[(1, 2)]), &cls(&[(1, 1)]), &cls(&[(1, 1)]), &a2(), f);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn budget_guard() {
        let q = QuiverA::linear(1).unwrap();
        let f = PrimeField::new(3).unwrap();
        let alg = HallAlgebra::with_budget(&q, f, 3).unwrap();
        let s = cls(&[(1, 1)]);
        let ss = cls(&[(1, 1), (1, 1)]);
        assert!(matches!(alg.hall_number(&ss, &s, &s), Err(Error::Resource(_))));
    }

    #[test]
    fn product_examples() {
        let f = PrimeField::new(3).unwrap();
        let s1 = HallFn::characteristic(a2(), f, cls(&[(1, 1)])).unwrap();
        let s2 = HallFn::characteristic(a2(), f, cls(&[(2, 2)])).unwrap();
        let want = HallFn::from_terms(a2(), f, [(cls(&[(1, 1), (2, 2)]), rat(1)), (cls(&[(1, 2)]), rat(1))]).unwrap();
        assert_eq!(hall_product(&s1, &s2).unwrap(), want);
        let rev = HallFn::characteristic(a2(), f, cls(&[(1, 1), (2, 2)])).unwrap();
        assert_eq!(hall_product(&s2, &s1).unwrap(), rev);

        let u = HallFn::unit(a2(), f);
        let g = s1.add(&s2.scale(&rat(7))).unwrap();
        assert_eq!(hall_product(&u, &g).unwrap(), g);
        assert_eq!(hall_product(&g, &u).unwrap(), g);
    }

    #[test]
    fn a1_square() {
        let q = QuiverA::linear(1).unwrap();
        for p in [2u32, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            let s = HallFn::characteristic(q.clone(), f, cls(&[(1, 1)])).unwrap();
            let want = HallFn::from_terms(q.clone(), f, [(cls(&[(1, 1), (1, 1)]), rat(p as i64 + 1))]).unwrap();
            assert_eq!(hall_product(&s, &s).unwrap(), want);
        }
    }

    #[test]
    fn mismatched_fields() {
        let s2 = HallFn::unit(a2(), PrimeField::new(2).unwrap());
        let s3 = HallFn::unit(a2(), PrimeField::new(3).unwrap());
        assert!(matches!(hall_product(&s2, &s3), Err(Error::Typing(_))));
    }

    #[test]
    fn grading() {
        let quiver = QuiverA::new(vec![Direction::Backward, Direction::Forward]);
        let f = PrimeField::new(2).unwrap();
        let alg = HallAlgebra::new(&quiver, f).unwrap();
        let a = HallFn::characteristic(quiver.clone(), f, cls(&[(1, 2), (3, 3)])).unwrap();
        let b = HallFn::from_terms(quiver.clone(), f, [(cls(&[(2, 3)]), rat(2)), (cls(&[(1, 1)]), BigRational::one())]).unwrap();
        let prod = alg.product(&a, &b).unwrap();
        assert!(!prod.is_zero());
        let allowed: Vec<DimVector> = vec![&a.support_dims()[0] + &DimVector(vec![0, 1, 1]), &a.support_dims()[0] + &DimVector(vec![1, 0, 0])];
        for d in prod.support_dims() {
            assert!(allowed.contains(&d), "{d}");
        }
    }

    #[test]
    fn census_total_counts_all_stable_subspaces() {
        // Semisimple point: every graded subspace is stable.
        let f = PrimeField::new(2).unwrap();
        let alg = HallAlgebra::new(&a2(), f).unwrap();
        let total = cls(&[(1, 1), (1, 1), (2, 2)]);
        let census = alg.census_of_class(&total, &DimVector(vec![1, 1])).unwrap();
        assert_eq!(census.values().sum::<u64>(), 3);
    }
}
