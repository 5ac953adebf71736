//! Seeded randomized checks of the algebraic identities, as run by the
//! `verify` command and the acceptance tests.

pub mod gen;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::contquiver::{build_quiver, contract, is_adapted, phi_f, psi_f, sigma, stretch, Partition};
use crate::error::{Error, Result};
use crate::exactalg::PrimeField;
use crate::finquiver::{iso_classes, orbit_size, DimVector, DiscreteInterval, IsoClass, QuiverA};
use crate::hallfq::{HallAlgebra, HallFn};
use crate::json::JsonDoc;
use crate::limits::{adapted_partition, contract_kq, psi_eval, theta_eval_via, ContHallFn, KbarElement};

/// The available suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Associativity,
    PhiHom,
    PsiPhiId,
    SigmaSquares,
    OrbitCensus,
    ThetaWelldef,
    PsiCoherence,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Associativity,
        Suite::PhiHom,
        Suite::PsiPhiId,
        Suite::SigmaSquares,
        Suite::OrbitCensus,
        Suite::ThetaWelldef,
        Suite::PsiCoherence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Associativity => "associativity",
            Suite::PhiHom => "phi-hom",
            Suite::PsiPhiId => "psi-phi-id",
            Suite::SigmaSquares => "sigma-squares",
            Suite::OrbitCensus => "orbit-census",
            Suite::ThetaWelldef => "theta-welldef",
            Suite::PsiCoherence => "psi-coherence",
        }
    }

    fn instance(self) -> fn(&mut ChaCha8Rng) -> Result<Option<Value>> {
        match self {
            Suite::Associativity => associativity,
            Suite::PhiHom => phi_hom,
            Suite::PsiPhiId => psi_phi_id,
            Suite::SigmaSquares => sigma_squares,
            Suite::OrbitCensus => orbit_census,
            Suite::ThetaWelldef => theta_welldef,
            Suite::PsiCoherence => psi_coherence,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

/// Outcome of one suite run. Identical for identical `(suite, seed, count)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub count: usize,
    pub passed: usize,
    pub failed: usize,
    pub counterexample: Option<Value>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Runs `count` seeded instances of `suite`. An instance that errors counts
/// as a failure, with the error recorded in the counterexample.
pub fn run_suite(suite: Suite, seed: u64, count: usize) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let check = suite.instance();
    let (mut passed, mut failed) = (0, 0);
    let mut counterexample = None;
    for i in 0..count {
        let outcome = match check(&mut rng) {
            Ok(None) => None,
            Ok(Some(cx)) => Some(cx),
            Err(e) => Some(json!({"error": {"kind": e.kind(), "detail": e.to_string()}})),
        };
        match outcome {
            None => passed += 1,
            Some(cx) => {
                failed += 1;
                if counterexample.is_none() {
                    counterexample = Some(json!({"instance": i, "data": cx}));
                }
            }
        }
    }
    VerifyReport { suite: suite.name().into(), seed, count, passed, failed, counterexample }
}

fn char_fn(quiver: &QuiverA, field: PrimeField, c: IsoClass) -> Result<HallFn> {
    HallFn::characteristic(quiver.clone(), field, c)
}

fn associativity(rng: &mut ChaCha8Rng) -> Result<Option<Value>> {
    let n = rng.gen_range(1..=3);
    let quiver = gen::orientation(rng, n);
    let field = gen::prime(rng, &[2, 3]);
    let dims = gen::split_dims(rng, n, 3, 4, 4);
    let f = char_fn(&quiver, field, gen::class_of_dims(rng, &quiver, &dims[0])?)?;
    let g = char_fn(&quiver, field, gen::class_of_dims(rng, &quiver, &dims[1])?)?;
    let h = char_fn(&quiver, field, gen::class_of_dims(rng, &quiver, &dims[2])?)?;
    let alg = HallAlgebra::new(&quiver, field)?;
    let left = alg.product(&alg.product(&f, &g)?, &h)?;
    let right = alg.product(&f, &alg.product(&g, &h)?)?;
    Ok((left != right).then(|| {
        json!({"f": f.to_json(), "g": g.to_json(), "h": h.to_json(), "left": left.to_json(), "right": right.to_json()})
    }))
}

fn phi_hom(rng: &mut ChaCha8Rng) -> Result<Option<Value>> {
    let ar = gen::continuous_quiver(rng);
    let coarse = gen::partition(rng, 2);
    let fine = gen::strict_refinement(rng, &coarse, 2);
    let field = gen::prime(rng, &[2, 3]);
    let q1 = build_quiver(&ar, &coarse).quiver;
    let q2 = build_quiver(&ar, &fine).quiver;
    let dims = gen::split_dims(rng, q1.n(), 2, 4, 2);
    let f = gen::hall_fn(rng, &q1, field, 2, &dims[0])?;
    let g = gen::hall_fn(rng, &q1, field, 2, &dims[1])?;
    let a1 = HallAlgebra::new(&q1, field)?;
    let a2 = HallAlgebra::new(&q2, field)?;
    let left = phi_f(&a1.product(&f, &g)?, &ar, &coarse, &fine)?;
    let right = a2.product(&phi_f(&f, &ar, &coarse, &fine)?, &phi_f(&g, &ar, &coarse, &fine)?)?;
    Ok((left != right).then(|| {
        json!({"quiver": ar.to_json(), "coarse": coarse.to_json(), "fine": fine.to_json(),
               "f": f.to_json(), "g": g.to_json(), "left": left.to_json(), "right": right.to_json()})
    }))
}

fn psi_phi_id(rng: &mut ChaCha8Rng) -> Result<Option<Value>> {
    let ar = gen::continuous_quiver(rng);
    let coarse = gen::partition(rng, 3);
    let fine = gen::refinement(rng, &coarse, 3);
    let field = gen::prime(rng, &[2, 3, 5]);
    let q1 = build_quiver(&ar, &coarse).quiver;
    let f = gen::hall_fn(rng, &q1, field, 4, &DimVector(vec![2; q1.n()]))?;
    let back = psi_f(&phi_f(&f, &ar, &coarse, &fine)?, &ar, &coarse, &fine)?;
    Ok((back != f).then(|| {
        json!({"quiver": ar.to_json(), "coarse": coarse.to_json(), "fine": fine.to_json(), "f": f.to_json(), "back": back.to_json()})
    }))
}

fn sigma_squares(rng: &mut ChaCha8Rng) -> Result<Option<Value>> {
    let coarse = gen::partition(rng, 3);
    let fine = gen::refinement(rng, &coarse, 3);
    let k = rng.gen_range(0..=3);
    let v = if rng.gen() { gen::adapted_rep(rng, &coarse, k) } else { gen::adapted_rep(rng, &fine, k) };
    let fine_cls = sigma(&v, &fine)?;
    let adapted = is_adapted(&v, &coarse);
    let coarse_cls = if adapted { Some(sigma(&v, &coarse)?) } else { None };
    let mut ok = contract(&fine_cls, &coarse, &fine)? == coarse_cls;
    if let Some(c) = &coarse_cls {
        ok &= stretch(c, &coarse, &fine)? == fine_cls;
    }
    Ok((!ok).then(|| json!({"rep": v.to_json(), "coarse": coarse.to_json(), "fine": fine.to_json()})))
}

/// Number of multisets of intervals of `[1..n]` with dimension vector `dims`.
pub fn interval_multiset_count(n: usize, dims: &DimVector) -> u64 {
    fn go(ivs: &[DiscreteInterval], rem: &mut Vec<usize>) -> u64 {
        let Some((&iv, rest)) = ivs.split_first() else {
            return rem.iter().all(|&d| d == 0) as u64;
        };
        let mut total = 0;
        let mut taken = 0;
        loop {
            total += go(rest, rem);
            if (iv.lo()..=iv.hi()).any(|x| rem[x - 1] == 0) {
                break;
            }
            for x in iv.lo()..=iv.hi() {
                rem[x - 1] -= 1;
            }
            taken += 1;
        }
        for x in iv.lo()..=iv.hi() {
            rem[x - 1] += taken;
        }
        total
    }
    go(&DiscreteInterval::all(n), &mut dims.0.clone())
}

fn orbit_census(rng: &mut ChaCha8Rng) -> Result<Option<Value>> {
    let n = rng.gen_range(2..=3);
    let quiver = gen::orientation(rng, n);
    let field = gen::prime(rng, &[2, 3]);
    let dims = DimVector((0..n).map(|_| rng.gen_range(0..=2)).collect());
    census_instance(&quiver, &dims, field)
}

/// Checks `Σ_O |O| = |E_V|` and the class count for one dimension vector.
pub fn census_instance(quiver: &QuiverA, dims: &DimVector, field: PrimeField) -> Result<Option<Value>> {
    let classes = iso_classes(quiver, dims)?;
    let mut total = BigUint::from(0u32);
    for c in &classes {
        total += orbit_size(c, quiver, field)?;
    }
    let want = BigUint::from(field.p()).pow(quiver.variety_dim(dims) as u32);
    let expected_classes = interval_multiset_count(quiver.n(), dims);
    let ok = total == want && classes.len() as u64 == expected_classes;
    Ok((!ok).then(|| {
        json!({"quiver": quiver.to_json(), "dims": dims.0, "p": field.p(),
               "orbit_total": total.to_string(), "variety_size": want.to_string(),
               "classes": classes.len(), "expected_classes": expected_classes})
    }))
}

fn theta_welldef(rng: &mut ChaCha8Rng) -> Result<Option<Value>> {
    let ar = gen::continuous_quiver(rng);
    let field = gen::prime(rng, &[2, 3]);
    let f = gen::cont_hall_fn(rng, &ar, field, 3, 2);
    let supp = f.support();
    let (part, fine) = (0..64)
        .find_map(|_| {
            let p = gen::partition(rng, 2);
            adapted_partition(&supp, Some(&p)).ok().map(|fine| (p, fine))
        })
        .map_or_else(|| Ok::<_, Error>((Partition::whole_line(), adapted_partition(&supp, None)?)), Ok)?;
    let finer = gen::strict_refinement(rng, &fine, 2);
    let a = theta_eval_via(&f, &part, &fine)?;
    let b = theta_eval_via(&f, &part, &finer)?;
    let direct = restrict(&f, &part)?;
    let ok = a == b && a == direct;
    Ok((!ok).then(|| {
        json!({"f": f.to_json(), "partition": part.to_json(), "fine": fine.to_json(), "finer": finer.to_json(),
               "via_fine": a.to_json(), "via_finer": b.to_json(), "direct": direct.to_json()})
    }))
}

/// The labels of `f` adapted to `part`, moved to `Q_part` by `σ`.
fn restrict(f: &ContHallFn, part: &Partition) -> Result<HallFn> {
    let terms = f
        .terms()
        .filter(|(r, _)| is_adapted(r, part))
        .map(|(r, c)| Ok((sigma(r, part)?, c.clone())))
        .collect::<Result<Vec<_>>>()?;
    HallFn::from_terms(build_quiver(f.quiver(), part).quiver, f.field(), terms)
}

fn psi_coherence(rng: &mut ChaCha8Rng) -> Result<Option<Value>> {
    let ar = gen::continuous_quiver(rng);
    let x: KbarElement = gen::kbar(rng, &ar, 3, 2);
    let part = (0..64)
        .map(|_| gen::partition(rng, 2))
        .find(|p| psi_eval(&x, p).is_ok())
        .unwrap_or_else(Partition::whole_line);
    let fine = if rng.gen() {
        adapted_partition(x.terms().map(|(r, _)| r), Some(&part))?
    } else {
        (0..64)
            .map(|_| gen::refinement(rng, &part, 3))
            .find(|p| psi_eval(&x, p).is_ok())
            .unwrap_or_else(|| part.clone())
    };
    let down = contract_kq(&psi_eval(&x, &fine)?, &part)?;
    let direct = psi_eval(&x, &part)?;
    Ok((down != direct).then(|| {
        json!({"x": x.to_json(), "partition": part.to_json(), "fine": fine.to_json(),
               "contracted": down.to_json(), "direct": direct.to_json()})
    }))
}
