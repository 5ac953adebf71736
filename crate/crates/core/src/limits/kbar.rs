use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::adapted_partition;
use crate::contquiver::{contract, is_adapted, sigma, ContinuousQuiverA, FGRep, Partition};
use crate::error::{Error, Result};
use crate::exactalg::LaurentInt;
use crate::finquiver::IsoClass;

/// The label `[IC_{O_V}[n](n/2)]`, i.e. `v^n · [IC_{O_V}]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLabel {
    pub rep: FGRep,
    pub shift: i64,
}

/// A finite `Z[v, v⁻¹]`-combination of canonical-basis labels of `K̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KbarElement {
    ar: ContinuousQuiverA,
    terms: BTreeMap<FGRep, LaurentInt>,
}

impl KbarElement {
    pub fn zero(ar: ContinuousQuiverA) -> Self {
        Self { ar, terms: BTreeMap::new() }
    }

    /// The basis element `[IC_{O_rep}]`.
    pub fn basis(ar: ContinuousQuiverA, rep: FGRep) -> Self {
        Self::from_terms(ar, [(rep, LaurentInt::one())])
    }

    pub fn from_terms(ar: ContinuousQuiverA, terms: impl IntoIterator<Item = (FGRep, LaurentInt)>) -> Self {
        let mut x = Self::zero(ar);
        for (rep, c) in terms {
            x.add_term(rep, c);
        }
        x
    }

    /// Integer combination of shifted labels.
    pub fn from_labels(ar: ContinuousQuiverA, labels: impl IntoIterator<Item = (CanonicalLabel, BigInt)>) -> Self {
        Self::from_terms(ar, labels.into_iter().map(|(l, c)| (l.rep, LaurentInt::monomial(c, l.shift))))
    }

    fn add_term(&mut self, rep: FGRep, c: LaurentInt) {
        let slot = self.terms.entry(rep.clone()).or_insert_with(LaurentInt::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&rep);
        }
    }

    pub fn quiver(&self) -> &ContinuousQuiverA {
        &self.ar
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FGRep, &LaurentInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<FGRep> {
        self.terms.keys().cloned().collect()
    }

    /// The element as integer multiples of shifted labels.
    pub fn labels(&self) -> Vec<(CanonicalLabel, BigInt)> {
        self.terms
            .iter()
            .flat_map(|(rep, c)| c.terms().map(move |(n, k)| (CanonicalLabel { rep: rep.clone(), shift: n }, k.clone())))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &KbarElement) -> Result<KbarElement> {
        if self.ar != other.ar {
            return Err(Error::Typing("elements over different continuous quivers".into()));
        }
        let mut out = self.clone();
        for (r, c) in &other.terms {
            out.add_term(r.clone(), c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for KbarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter())
    }
}

fn fmt_terms<K: fmt::Display>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (K, impl fmt::Display)>) -> fmt::Result {
    let mut any = false;
    for (i, (label, c)) in terms.enumerate() {
        any = true;
        if i > 0 {
            write!(f, " + ")?;
        }
        write!(f, "({c})·[{label}]")?;
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

/// An element of `K_{Q_I}` in the basis of IC labels, with Laurent
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KQElement {
    partition: Partition,
    terms: BTreeMap<IsoClass, LaurentInt>,
}

impl KQElement {
    pub fn zero(partition: Partition) -> Self {
        Self { partition, terms: BTreeMap::new() }
    }

    pub fn from_terms(partition: Partition, terms: impl IntoIterator<Item = (IsoClass, LaurentInt)>) -> Result<Self> {
        let mut x = Self::zero(partition);
        let n = x.partition.n();
        for (cls, c) in terms {
            if cls.intervals().iter().any(|iv| iv.hi() > n) {
                return Err(Error::Typing(format!("{cls} is not a class of a quiver with {n} vertices")));
            }
            x.add_term(cls, c);
        }
        Ok(x)
    }

    fn add_term(&mut self, cls: IsoClass, c: LaurentInt) {
        let slot = self.terms.entry(cls.clone()).or_insert_with(LaurentInt::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&cls);
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IsoClass, &LaurentInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, cls: &IsoClass) -> LaurentInt {
        self.terms.get(cls).cloned().unwrap_or_else(LaurentInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for KQElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter())
    }
}

/// `Ψ_I`: adapted labels map to their `σ_I`-images, the rest to zero.
pub fn psi_eval(x: &KbarElement, part: &Partition) -> Result<KQElement> {
    adapted_partition(x.terms.keys(), Some(part))?;
    let mut out = KQElement::zero(part.clone());
    for (rep, c) in &x.terms {
        if is_adapted(rep, part) {
            out.add_term(sigma(rep, part)?, c.clone());
        }
    }
    Ok(out)
}

/// Label-level contraction of `y` from its partition to the coarser `coarse`.
pub fn contract_kq(y: &KQElement, coarse: &Partition) -> Result<KQElement> {
    let mut out = KQElement::zero(coarse.clone());
    for (cls, c) in &y.terms {
        if let Some(d) = contract(cls, coarse, &y.partition)? {
            out.add_term(d, c.clone());
        }
    }
    Ok(out)
}

/// Multiplies every coefficient by `v^k`.
pub fn v_act(x: &KbarElement, k: i64) -> KbarElement {
    KbarElement { ar: x.ar.clone(), terms: x.terms.iter().map(|(r, c)| (r.clone(), c.shift(k))).collect() }
}

/// Coefficientwise equality in the label basis.
pub fn kbar_equal(x: &KbarElement, y: &KbarElement) -> Result<bool> {
    if x.ar != y.ar {
        return Err(Error::Typing("elements over different continuous quivers".into()));
    }
    Ok(x.terms == y.terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contquiver::{Bound, Ownership, RealInterval};
    use num_rational::BigRational;

    fn rep(iv: RealInterval) -> FGRep {
        FGRep::new(vec![iv])
    }

    fn oc(a: i64, b: i64) -> RealInterval {
        RealInterval::open_closed(a, b).unwrap()
    }

    fn half_open() -> RealInterval {
        RealInterval::new(
            Bound::Finite(BigRational::from_integer(0.into())),
            false,
            Bound::Finite(BigRational::new(1.into(), 2.into())),
            true,
        )
        .unwrap()
    }

    #[test]
    fn psi_examples() {
        let ar = ContinuousQuiverA::line();
        let part = Partition::uniform(&[0, 1], Ownership::Left).unwrap();
        let s2 = IsoClass::from_pairs(&[(2, 2)]).unwrap();
        let x = KbarElement::basis(ar.clone(), rep(oc(0, 1)));
        let want = KQElement::from_terms(part.clone(), [(s2.clone(), LaurentInt::one())]).unwrap();
        assert_eq!(psi_eval(&x, &part).unwrap(), want);
        let y = KbarElement::basis(ar.clone(), rep(half_open()));
        assert!(psi_eval(&y, &part).unwrap().is_zero());
        let vx = v_act(&x, 1);
        assert_eq!(psi_eval(&vx, &part).unwrap().coeff(&s2), LaurentInt::monomial(1, 1));
    }

    #[test]
    fn conflicting_partition() {
        let ar = ContinuousQuiverA::line();
        let part = Partition::uniform(&[0, 1], Ownership::Right).unwrap();
        let x = KbarElement::basis(ar, rep(oc(0, 1)));
        assert!(matches!(psi_eval(&x, &part), Err(Error::RefinementConflict(_))));
    }

    #[test]
    fn v_action_and_equality() {
        let ar = ContinuousQuiverA::line();
        let x = KbarElement::basis(ar.clone(), rep(oc(0, 1))).add(&v_act(&KbarElement::basis(ar.clone(), rep(oc(1, 2))), -3)).unwrap();
        assert!(kbar_equal(&v_act(&v_act(&x, 1), -1), &x).unwrap());
        assert!(kbar_equal(&v_act(&x, 0), &x).unwrap());
        assert!(v_act(&KbarElement::zero(ar.clone()), 4).is_zero());
        let two = v_act(&KbarElement::basis(ar.clone(), rep(oc(0, 1))), 2);
        assert_eq!(two.labels(), vec![(CanonicalLabel { rep: rep(oc(0, 1)), shift: 2 }, BigInt::from(1))]);
        let open = RealInterval::new(Bound::Finite(BigRational::from_integer(0.into())), false, Bound::Finite(BigRational::from_integer(1.into())), false).unwrap();
        assert!(!kbar_equal(&KbarElement::basis(ar.clone(), rep(oc(0, 1))), &KbarElement::basis(ar.clone(), rep(open))).unwrap());
        let other = ContinuousQuiverA::new(vec![], vec![crate::contquiver::PieceOrder::Gt]).unwrap();
        assert!(kbar_equal(&x, &KbarElement::zero(other)).is_err());
    }

    #[test]
    fn coherence_example() {
        let ar = ContinuousQuiverA::line();
        let x = KbarElement::basis(ar.clone(), rep(oc(0, 1))).add(&KbarElement::basis(ar, rep(half_open()))).unwrap();
        let coarse = Partition::uniform(&[0, 1], Ownership::Left).unwrap();
        let fine = adapted_partition(x.terms.keys(), Some(&coarse)).unwrap();
        let down = contract_kq(&psi_eval(&x, &fine).unwrap(), &coarse).unwrap();
        assert_eq!(down, psi_eval(&x, &coarse).unwrap());
        assert_eq!(psi_eval(&x, &fine).unwrap().terms().count(), 2);
    }
}
