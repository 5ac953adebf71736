//! JSON documents for every exchanged type.
//!
//! Integers are written as JSON numbers when they fit in an `i64` and as
//! decimal strings otherwise; rationals are numbers when integral and
//! `"a/b"` strings otherwise. Both forms are accepted on input.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::contquiver::{Bound, ContinuousQuiverA, FGRep, Ownership, Partition, PartitionQuiver, PieceOrder, RealInterval};
use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, LaurentInt, MatrixFp, PrimeField};
use crate::finquiver::{DimVector, Direction, IsoClass, QuiverA, RepPoint};
use crate::hallfq::HallFn;
use crate::limits::{ContHallFn, KQElement, KbarElement};

/// Conversion to and from a JSON document.
pub trait JsonDoc: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;

    fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("JSON values serialize")
    }

    fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))?;
        Self::from_json(&v)
    }
}

fn parse<T: DeserializeOwned>(v: &Value) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Schema(e.to_string()))
}

fn emit<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("documents serialize")
}

fn field(p: u32) -> Result<PrimeField> {
    PrimeField::new(p).map_err(|e| Error::Schema(e.to_string()))
}

/// An integer that may be a JSON number or a decimal string.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntDoc {
    Num(i64),
    Str(String),
}

impl From<&BigInt> for IntDoc {
    fn from(b: &BigInt) -> Self {
        match b.to_i64() {
            Some(k) => IntDoc::Num(k),
            None => IntDoc::Str(b.to_string()),
        }
    }
}

impl TryFrom<&IntDoc> for BigInt {
    type Error = Error;
    fn try_from(d: &IntDoc) -> Result<BigInt> {
        match d {
            IntDoc::Num(k) => Ok(BigInt::from(*k)),
            IntDoc::Str(s) => BigInt::from_str(s.trim()).map_err(|_| Error::Schema(format!("not an integer: {s:?}"))),
        }
    }
}

/// A rational as a JSON number or an `"a/b"` string.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatDoc {
    Num(i64),
    Str(String),
}

impl From<&BigRational> for RatDoc {
    fn from(r: &BigRational) -> Self {
        match (r.is_integer(), r.numer().to_i64()) {
            (true, Some(k)) => RatDoc::Num(k),
            _ => RatDoc::Str(r.to_string()),
        }
    }
}

impl TryFrom<&RatDoc> for BigRational {
    type Error = Error;
    fn try_from(d: &RatDoc) -> Result<BigRational> {
        match d {
            RatDoc::Num(k) => Ok(BigRational::from_integer((*k).into())),
            RatDoc::Str(s) => BigRational::from_str(s.trim()).map_err(|_| Error::Schema(format!("not a rational: {s:?}"))),
        }
    }
}

fn rats(ds: &[RatDoc]) -> Result<Vec<BigRational>> {
    ds.iter().map(BigRational::try_from).collect()
}

#[derive(Serialize, Deserialize)]
struct QuiverWire {
    n: usize,
    directions: Vec<Direction>,
}

impl From<&QuiverA> for QuiverWire {
    fn from(q: &QuiverA) -> Self {
        QuiverWire { n: q.n(), directions: q.directions().to_vec() }
    }
}

impl QuiverWire {
    fn build(self) -> Result<QuiverA> {
        QuiverA::with_vertices(self.n, self.directions)
    }
}

impl JsonDoc for QuiverA {
    fn to_json(&self) -> Value {
        emit(&QuiverWire::from(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        parse::<QuiverWire>(v)?.build()
    }
}

impl JsonDoc for IsoClass {
    fn to_json(&self) -> Value {
        emit(self)
    }

    fn from_json(v: &Value) -> Result<Self> {
        parse(v)
    }
}

#[derive(Serialize, Deserialize)]
struct RepPointWire {
    n: usize,
    directions: Vec<Direction>,
    dims: Vec<usize>,
    p: u32,
    maps: Vec<Vec<Vec<i64>>>,
}

impl JsonDoc for RepPoint {
    fn to_json(&self) -> Value {
        let q = self.quiver();
        emit(&RepPointWire {
            n: q.n(),
            directions: q.directions().to_vec(),
            dims: self.dims().0.clone(),
            p: self.field().p(),
            maps: self
                .maps()
                .iter()
                .map(|m| m.to_rows().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect())
                .collect(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let w: RepPointWire = parse(v)?;
        let quiver = QuiverA::with_vertices(w.n, w.directions)?;
        let f = field(w.p)?;
        if w.dims.len() != quiver.n() {
            return Err(Error::Schema(format!("{} dimensions for {} vertices", w.dims.len(), quiver.n())));
        }
        if w.maps.len() != quiver.arrow_count() {
            return Err(Error::Schema(format!("{} maps for {} arrows", w.maps.len(), quiver.arrow_count())));
        }
        let maps = w
            .maps
            .iter()
            .enumerate()
            .map(|(h, rows)| {
                let cols = w.dims[quiver.source(h)];
                MatrixFp::from_rows(f, cols, rows)
            })
            .collect::<Result<Vec<_>>>()?;
        RepPoint::new(quiver, DimVector(w.dims), f, maps)
    }
}

#[derive(Serialize, Deserialize)]
struct HallTermWire {
    class: IsoClass,
    num: IntDoc,
    den: IntDoc,
}

#[derive(Serialize, Deserialize)]
struct HallFnWire {
    quiver: QuiverWire,
    p: u32,
    terms: Vec<HallTermWire>,
}

impl JsonDoc for HallFn {
    fn to_json(&self) -> Value {
        emit(&HallFnWire {
            quiver: self.quiver().into(),
            p: self.field().p(),
            terms: self
                .terms()
                .map(|(c, r)| HallTermWire { class: c.clone(), num: r.numer().into(), den: r.denom().into() })
                .collect(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let w: HallFnWire = parse(v)?;
        let quiver = w.quiver.build()?;
        let terms = w
            .terms
            .iter()
            .map(|t| {
                let (num, den) = (BigInt::try_from(&t.num)?, BigInt::try_from(&t.den)?);
                if den == BigInt::from(0) {
                    return Err(Error::Schema("zero denominator".into()));
                }
                Ok((t.class.clone(), BigRational::new(num, den)))
            })
            .collect::<Result<Vec<_>>>()?;
        HallFn::from_terms(quiver, field(w.p)?, terms).map_err(|e| Error::Schema(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    coeffs: Vec<IntDoc>,
    #[serde(default, skip_deserializing)]
    text: String,
}

impl JsonDoc for IntPoly {
    fn to_json(&self) -> Value {
        emit(&PolyWire { coeffs: self.coeffs().iter().map(IntDoc::from).collect(), text: self.to_string() })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let w: PolyWire = parse(v)?;
        Ok(IntPoly::from_coeffs(w.coeffs.iter().map(BigInt::try_from).collect::<Result<_>>()?))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum OrderWire {
    Lt,
    Gt,
}

#[derive(Serialize, Deserialize)]
struct ArWire {
    #[serde(rename = "S")]
    s: Vec<RatDoc>,
    orders: Vec<OrderWire>,
}

impl From<&ContinuousQuiverA> for ArWire {
    fn from(q: &ContinuousQuiverA) -> Self {
        ArWire {
            s: q.turning_points().iter().map(RatDoc::from).collect(),
            orders: q
                .orders()
                .iter()
                .map(|o| match o {
                    PieceOrder::Lt => OrderWire::Lt,
                    PieceOrder::Gt => OrderWire::Gt,
                })
                .collect(),
        }
    }
}

impl ArWire {
    fn build(&self) -> Result<ContinuousQuiverA> {
        let orders = self
            .orders
            .iter()
            .map(|o| match o {
                OrderWire::Lt => PieceOrder::Lt,
                OrderWire::Gt => PieceOrder::Gt,
            })
            .collect();
        ContinuousQuiverA::new(rats(&self.s)?, orders)
    }
}

impl JsonDoc for ContinuousQuiverA {
    fn to_json(&self) -> Value {
        emit(&ArWire::from(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        parse::<ArWire>(v)?.build()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum OwnerWire {
    Left,
    Right,
}

#[derive(Serialize, Deserialize)]
struct PartitionWire {
    cuts: Vec<RatDoc>,
    ownership: Vec<OwnerWire>,
}

impl From<&Partition> for PartitionWire {
    fn from(p: &Partition) -> Self {
        PartitionWire {
            cuts: p.cuts().iter().map(RatDoc::from).collect(),
            ownership: p
                .ownership()
                .iter()
                .map(|o| match o {
                    Ownership::Left => OwnerWire::Left,
                    Ownership::Right => OwnerWire::Right,
                })
                .collect(),
        }
    }
}

impl PartitionWire {
    fn build(&self) -> Result<Partition> {
        let own = self
            .ownership
            .iter()
            .map(|o| match o {
                OwnerWire::Left => Ownership::Left,
                OwnerWire::Right => Ownership::Right,
            })
            .collect();
        Partition::new(rats(&self.cuts)?, own)
    }
}

impl JsonDoc for Partition {
    fn to_json(&self) -> Value {
        emit(&PartitionWire::from(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        parse::<PartitionWire>(v)?.build()
    }
}

#[derive(Serialize, Deserialize)]
struct IntervalWire {
    lo: RatDoc,
    lo_closed: bool,
    hi: RatDoc,
    hi_closed: bool,
}

fn bound_doc(b: &Bound) -> RatDoc {
    match b {
        Bound::NegInf => RatDoc::Str("-inf".into()),
        Bound::PosInf => RatDoc::Str("+inf".into()),
        Bound::Finite(r) => RatDoc::from(r),
    }
}

fn bound_of(d: &RatDoc) -> Result<Bound> {
    if let RatDoc::Str(s) = d {
        match s.trim() {
            "-inf" => return Ok(Bound::NegInf),
            "+inf" | "inf" => return Ok(Bound::PosInf),
            _ => {}
        }
    }
    BigRational::try_from(d).map(Bound::Finite)
}

impl From<&RealInterval> for IntervalWire {
    fn from(iv: &RealInterval) -> Self {
        IntervalWire { lo: bound_doc(iv.lo()), lo_closed: iv.lo_closed(), hi: bound_doc(iv.hi()), hi_closed: iv.hi_closed() }
    }
}

impl IntervalWire {
    fn build(&self) -> Result<RealInterval> {
        RealInterval::new(bound_of(&self.lo)?, self.lo_closed, bound_of(&self.hi)?, self.hi_closed)
    }
}

impl JsonDoc for RealInterval {
    fn to_json(&self) -> Value {
        emit(&IntervalWire::from(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        parse::<IntervalWire>(v)?.build()
    }
}

#[derive(Serialize, Deserialize)]
struct FGRepWire {
    intervals: Vec<IntervalWire>,
}

impl From<&FGRep> for FGRepWire {
    fn from(r: &FGRep) -> Self {
        FGRepWire { intervals: r.intervals().iter().map(IntervalWire::from).collect() }
    }
}

impl FGRepWire {
    fn build(&self) -> Result<FGRep> {
        Ok(FGRep::new(self.intervals.iter().map(IntervalWire::build).collect::<Result<_>>()?))
    }
}

impl JsonDoc for FGRep {
    fn to_json(&self) -> Value {
        emit(&FGRepWire::from(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        parse::<FGRepWire>(v)?.build()
    }
}

#[derive(Serialize, Deserialize)]
struct ContTermWire {
    rep: FGRepWire,
    coeff: RatDoc,
}

#[derive(Serialize, Deserialize)]
struct ContHallFnWire {
    quiver: ArWire,
    p: u32,
    terms: Vec<ContTermWire>,
}

impl JsonDoc for ContHallFn {
    fn to_json(&self) -> Value {
        emit(&ContHallFnWire {
            quiver: self.quiver().into(),
            p: self.field().p(),
            terms: self.terms().map(|(r, c)| ContTermWire { rep: r.into(), coeff: c.into() }).collect(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let w: ContHallFnWire = parse(v)?;
        let terms = w
            .terms
            .iter()
            .map(|t| Ok((t.rep.build()?, BigRational::try_from(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ContHallFn::from_terms(w.quiver.build()?, field(w.p)?, terms))
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialWire {
    exp: i64,
    coef: IntDoc,
}

fn laurent_doc(l: &LaurentInt) -> Vec<MonomialWire> {
    l.terms().map(|(exp, c)| MonomialWire { exp, coef: c.into() }).collect()
}

fn laurent_of(ms: &[MonomialWire]) -> Result<LaurentInt> {
    let mut out = LaurentInt::zero();
    for m in ms {
        out.add_term(m.exp, BigInt::try_from(&m.coef)?);
    }
    Ok(out)
}

impl JsonDoc for LaurentInt {
    fn to_json(&self) -> Value {
        emit(&laurent_doc(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        laurent_of(&parse::<Vec<MonomialWire>>(v)?)
    }
}

#[derive(Serialize, Deserialize)]
struct KbarTermWire {
    rep: FGRepWire,
    coeff: Vec<MonomialWire>,
}

#[derive(Serialize, Deserialize)]
struct KbarWire {
    quiver: ArWire,
    terms: Vec<KbarTermWire>,
}

impl JsonDoc for KbarElement {
    fn to_json(&self) -> Value {
        emit(&KbarWire {
            quiver: self.quiver().into(),
            terms: self.terms().map(|(r, c)| KbarTermWire { rep: r.into(), coeff: laurent_doc(c) }).collect(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let w: KbarWire = parse(v)?;
        let terms = w.terms.iter().map(|t| Ok((t.rep.build()?, laurent_of(&t.coeff)?))).collect::<Result<Vec<_>>>()?;
        Ok(KbarElement::from_terms(w.quiver.build()?, terms))
    }
}

#[derive(Serialize, Deserialize)]
struct KQTermWire {
    class: IsoClass,
    coeff: Vec<MonomialWire>,
}

#[derive(Serialize, Deserialize)]
struct KQWire {
    partition: PartitionWire,
    terms: Vec<KQTermWire>,
}

impl JsonDoc for KQElement {
    fn to_json(&self) -> Value {
        emit(&KQWire {
            partition: self.partition().into(),
            terms: self.terms().map(|(c, l)| KQTermWire { class: c.clone(), coeff: laurent_doc(l) }).collect(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let w: KQWire = parse(v)?;
        let terms = w.terms.iter().map(|t| Ok((t.class.clone(), laurent_of(&t.coeff)?))).collect::<Result<Vec<_>>>()?;
        KQElement::from_terms(w.partition.build()?, terms).map_err(|e| Error::Schema(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct PartitionQuiverWire {
    quiver: QuiverWire,
    basepoints: Vec<RatDoc>,
}

impl JsonDoc for PartitionQuiver {
    fn to_json(&self) -> Value {
        emit(&PartitionQuiverWire {
            quiver: (&self.quiver).into(),
            basepoints: self.basepoints.iter().map(RatDoc::from).collect(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let w: PartitionQuiverWire = parse(v)?;
        Ok(PartitionQuiver { quiver: w.quiver.build()?, basepoints: rats(&w.basepoints)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn roundtrip<T: JsonDoc + PartialEq + std::fmt::Debug>(x: &T) {
        let s = x.to_json_string();
        assert_eq!(&T::from_json_str(&s).unwrap(), x, "{s}");
    }

    #[test]
    fn rep_point_document() {
        let v = json!({"n":2,"directions":["fwd"],"dims":[1,1],"p":3,"maps":[[[2]]]});
        let p = RepPoint::from_json(&v).unwrap();
        assert_eq!(p.to_json(), v);
        let bad = json!({"n":2,"directions":["fwd"],"dims":[1,1],"p":3,"maps":[[[2,1]]]});
        assert!(matches!(RepPoint::from_json(&bad), Err(Error::Schema(_))));
        let bad_p = json!({"n":2,"directions":["fwd"],"dims":[1,1],"p":4,"maps":[[[2]]]});
        assert!(matches!(RepPoint::from_json(&bad_p), Err(Error::Schema(_))));
    }

    #[test]
    fn hall_fn_document() {
        let v = json!({"quiver":{"n":2,"directions":["fwd"]},"p":2,"terms":[
            {"class":{"intervals":[[1,1],[2,2]]},"num":1,"den":1},
            {"class":{"intervals":[[1,2]]},"num":"-123456789012345678901234567890","den":7}]});
        let f = HallFn::from_json(&v).unwrap();
        roundtrip(&f);
        assert_eq!(f.len(), 2);
        let bad = json!({"quiver":{"n":2,"directions":["fwd"]},"p":2,"terms":[{"class":{"intervals":[[1,3]]},"num":1,"den":1}]});
        assert!(matches!(HallFn::from_json(&bad), Err(Error::Schema(_))));
    }

    #[test]
    fn continuous_documents() {
        let ar = json!({"S":[0,"1/2"],"orders":["lt","gt","lt"]});
        assert_eq!(ContinuousQuiverA::from_json(&ar).unwrap().to_json(), ar);
        let part = json!({"cuts":[-1,0,0],"ownership":["left","right","left"]});
        assert_eq!(Partition::from_json(&part).unwrap().to_json(), part);
        let rep = json!({"intervals":[{"lo":"-inf","lo_closed":false,"hi":"3/2","hi_closed":true}]});
        assert_eq!(FGRep::from_json(&rep).unwrap().to_json(), rep);
        let bad = json!({"intervals":[{"lo":1,"lo_closed":false,"hi":1,"hi_closed":true}]});
        assert!(matches!(FGRep::from_json(&bad), Err(Error::Schema(_))));
        assert!(matches!(FGRep::from_json_str("{"), Err(Error::Schema(_))));
    }

    #[test]
    fn limit_documents() {
        let f = json!({"quiver":{"S":[],"orders":["lt"]},"p":3,"terms":[
            {"rep":{"intervals":[{"lo":0,"lo_closed":false,"hi":1,"hi_closed":true}]},"coeff":"2/3"}]});
        roundtrip(&ContHallFn::from_json(&f).unwrap());
        let x = json!({"quiver":{"S":[],"orders":["lt"]},"terms":[
            {"rep":{"intervals":[{"lo":0,"lo_closed":false,"hi":1,"hi_closed":true}]},"coeff":[{"exp":-1,"coef":2},{"exp":3,"coef":1}]}]});
        let k = KbarElement::from_json(&x).unwrap();
        assert_eq!(k.to_json(), x);
        let y = json!({"partition":{"cuts":[0,1],"ownership":["left","left"]},"terms":[{"class":{"intervals":[[2,2]]},"coeff":[{"exp":0,"coef":1}]}]});
        assert_eq!(KQElement::from_json(&y).unwrap().to_json(), y);
    }

    #[test]
    fn poly_document() {
        let p = IntPoly::from_coeffs(vec![1.into(), 1.into()]);
        assert_eq!(p.to_json(), json!({"coeffs":[1,1],"text":"q + 1"}));
        roundtrip(&p);
    }
}
