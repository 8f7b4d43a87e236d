//! Invariant suite run by `wps check`: algebraic laws and cross-ring
//! consistency conditions that must hold for every weight vector.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{rotation_number, Degree, WeightVector};
use crate::chenruan::{CrElement, CrMonomial, CrRing};
use crate::error::Result;
use crate::kawasaki::KawasakiRing;
use crate::orbifold::OrbifoldRing;
use crate::poly::UPoly;

/// The three rings built from one weight vector.
pub struct Rings {
    pub weights: WeightVector,
    pub kawasaki: KawasakiRing,
    pub orbifold: OrbifoldRing,
    pub chen_ruan: CrRing,
}

impl Rings {
    pub fn new(weights: WeightVector) -> Result<Self> {
        Ok(Rings {
            kawasaki: KawasakiRing::new(weights.clone()),
            orbifold: OrbifoldRing::new(weights.clone()),
            chen_ruan: CrRing::new(weights.clone())?,
            weights,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(&Rings) -> Result<(), String>;

const SUITE: &[(&str, Check)] = &[
    ("weights: g | b_k | l", weight_divisibility),
    ("kawasaki: l_1 = lcm, l_n = N/g", ell_endpoints),
    ("kawasaki: l_(k+m) | l_k l_m", ell_divisibility),
    ("kawasaki: associativity", kawasaki_associativity),
    ("kawasaki: scaling invariance (c = 2, 3)", kawasaki_scaling),
    ("orbifold: k u^(n+1) = 0 iff N | k", orbifold_annihilator),
    ("orbifold: (l_1 u)^(n+1) = 0", qstar_top_power),
    ("q*: ring homomorphism on generators", qstar_homomorphism),
    ("chen-ruan: identity sector data", identity_sector_data),
    (
        "chen-ruan: exponents integral (0 or 1)",
        exponent_integrality,
    ),
    (
        "chen-ruan: global stabilizer sectors",
        global_stabilizer_sectors,
    ),
    ("chen-ruan: commutativity", star_commutativity),
    ("chen-ruan: unit", star_unit),
    ("chen-ruan: grading additivity", grading_additivity),
    (
        "chen-ruan: associativity over all triples",
        star_associativity,
    ),
    (
        "chen-ruan: identity sector agrees with orbifold ring",
        identity_sector_arithmetic,
    ),
];

/// Runs every check; a check that errors counts as failed.
pub fn run_checks(rings: &Rings) -> Vec<CheckOutcome> {
    SUITE
        .iter()
        .map(|(name, f)| match f(rings) {
            Ok(()) => CheckOutcome {
                name,
                passed: true,
                detail: String::new(),
            },
            Err(detail) => CheckOutcome {
                name,
                passed: false,
                detail,
            },
        })
        .collect()
}

pub fn check_names() -> impl Iterator<Item = &'static str> {
    SUITE.iter().map(|(n, _)| *n)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn weight_divisibility(r: &Rings) -> Result<(), String> {
    let w = &r.weights;
    for &b in w.weights() {
        ensure(b % w.gcd() == 0, || {
            format!("g = {} does not divide {b}", w.gcd())
        })?;
        ensure((w.lcm() % BigUint::from(b)).is_zero(), || {
            format!("{b} does not divide l = {}", w.lcm())
        })?;
    }
    ensure(w.is_reduced() == (w.gcd() == 1), || {
        "reduced flag disagrees with gcd".into()
    })
}

fn ell_endpoints(r: &Rings) -> Result<(), String> {
    let k = &r.kawasaki;
    let n = k.dim();
    if n == 0 {
        return Ok(());
    }
    let l1 = k.ell(1).map_err(|e| e.to_string())?;
    ensure(l1 == r.weights.lcm(), || {
        format!("l_1 = {l1} but lcm = {}", r.weights.lcm())
    })?;
    let ln = k.ell(n).map_err(|e| e.to_string())?;
    let expect = r.weights.product() / BigUint::from(r.weights.gcd());
    ensure(*ln == expect, || format!("l_n = {ln} but N/g = {expect}"))
}

fn ell_divisibility(r: &Rings) -> Result<(), String> {
    let l = r.kawasaki.ell_table();
    let n = r.kawasaki.dim();
    for k in 0..=n {
        for m in 0..=n - k {
            ensure((&l[k] * &l[m] % &l[k + m]).is_zero(), || {
                format!("l_{} does not divide l_{k} l_{m}", k + m)
            })?;
        }
    }
    Ok(())
}

fn kawasaki_associativity(r: &Rings) -> Result<(), String> {
    let k = &r.kawasaki;
    let n = k.dim();
    let err = |e: crate::Error| e.to_string();
    for a in 0..=n {
        for b in 0..=n {
            for c in 0..=n {
                let lhs = k.multiply(
                    &k.gamma_product(a, b).map_err(err)?,
                    &k.gamma(c).map_err(err)?,
                );
                let rhs = k.multiply(
                    &k.gamma(a).map_err(err)?,
                    &k.gamma_product(b, c).map_err(err)?,
                );
                ensure(lhs.map_err(err)? == rhs.map_err(err)?, || {
                    format!("(g{a} g{b}) g{c} != g{a} (g{b} g{c})")
                })?;
            }
        }
    }
    Ok(())
}

fn kawasaki_scaling(r: &Rings) -> Result<(), String> {
    let base = &r.kawasaki;
    let n = base.dim();
    for c in [2u64, 3] {
        let scaled = KawasakiRing::new(r.weights.scaled(c).map_err(|e| e.to_string())?);
        for k in 0..=n {
            for m in 0..=n - k {
                let a = base.structure_constant(k, m).map_err(|e| e.to_string())?;
                let b = scaled.structure_constant(k, m).map_err(|e| e.to_string())?;
                ensure(a == b, || {
                    format!("constant for g{k} g{m} changes under b -> {c} b")
                })?;
            }
        }
    }
    Ok(())
}

fn orbifold_annihilator(r: &Rings) -> Result<(), String> {
    let o = &r.orbifold;
    let big_n = BigInt::from(r.weights.product().clone());
    ensure(o.annihilates_top(&big_n), || "N u^(n+1) is not zero".into())?;
    // Every residue 1..N-1 must survive; sample when N is large.
    let limit = BigInt::from(2000);
    let mut k = BigInt::one();
    while k < big_n && k <= limit {
        ensure(!o.annihilates_top(&k), || {
            format!("{k} u^(n+1) vanishes but N = {big_n}")
        })?;
        k += 1;
    }
    ensure(
        !o.annihilates_top(&(&big_n - BigInt::one())) || big_n.is_one(),
        || "(N-1) u^(n+1) vanishes".into(),
    )
}

fn qstar_top_power(r: &Rings) -> Result<(), String> {
    let o = &r.orbifold;
    let x = o.monomial(BigInt::from(r.weights.lcm().clone()), 1);
    let p = o
        .pow(&x, o.relation_exponent())
        .map_err(|e| e.to_string())?;
    ensure(p.is_zero(), || format!("(l_1 u)^(n+1) = {p}"))
}

fn qstar_homomorphism(r: &Rings) -> Result<(), String> {
    let (k, o) = (&r.kawasaki, &r.orbifold);
    let n = k.dim();
    let err = |e: crate::Error| e.to_string();
    for a in 0..=n {
        for b in 0..=n {
            let prod = k.gamma_product(a, b).map_err(err)?;
            let lhs = k.qstar(o, &prod).map_err(err)?;
            let qa = k.qstar(o, &k.gamma(a).map_err(err)?).map_err(err)?;
            let qb = k.qstar(o, &k.gamma(b).map_err(err)?).map_err(err)?;
            let rhs = o.multiply(&qa, &qb).map_err(err)?;
            ensure(lhs == rhs, || {
                format!("q*(g{a} g{b}) = {lhs} but q*(g{a}) q*(g{b}) = {rhs}")
            })?;
            if a + b > n {
                let la = &k.ell_table()[a];
                let lb = &k.ell_table()[b];
                ensure((la * lb % r.weights.product()).is_zero(), || {
                    format!("N does not divide l_{a} l_{b}")
                })?;
            }
        }
    }
    Ok(())
}

fn identity_sector_data(r: &Rings) -> Result<(), String> {
    let s = &r.chen_ruan.sectors()[0];
    ensure(s.fixed.len() == r.weights.weights().len(), || {
        "sector 0 does not fix everything".into()
    })?;
    ensure(&s.euler_coefficient == r.weights.product(), || {
        "c_0 != N".into()
    })?;
    ensure(s.euler_exponent as usize == r.weights.dim() + 1, || {
        "d_0 != n+1".into()
    })?;
    ensure(s.degree_shift.is_zero(), || {
        "sector 0 has nonzero degree shift".into()
    })
}

fn exponent_integrality(r: &Rings) -> Result<(), String> {
    let cr = &r.chen_ruan;
    let ell = BigUint::from(cr.ell());
    let ws = r.weights.big_weights();
    for i in 0..cr.ell() {
        for j in 0..cr.ell() {
            let eps = cr.exponents(i, j).map_err(|e| e.to_string())?;
            for (k, b) in ws.iter().enumerate() {
                let a = |m: usize| rotation_number(b, &BigInt::from(m), &ell).expect("positive");
                let e = a(i) + a(j) - a(i + j);
                ensure(e.is_zero() || e.is_one(), || {
                    format!("e_{k}(a{i}, a{j}) = {e}")
                })?;
                ensure(e == BigInt::from(eps[k]).into(), || {
                    format!("exponent mismatch at k = {k} for a{i} a{j}")
                })?;
            }
        }
    }
    Ok(())
}

fn global_stabilizer_sectors(r: &Rings) -> Result<(), String> {
    for s in r.chen_ruan.sectors() {
        if s.is_untwisted() {
            ensure(s.degree_shift.is_zero(), || {
                format!("sector {} fixes all but shifts", s.index)
            })?;
            ensure(&s.euler_coefficient == r.weights.product(), || {
                format!("sector {} fixes all but c != N", s.index)
            })?;
        } else {
            ensure(!s.degree_shift.is_zero(), || {
                format!("sector {} moves a coordinate but has shift 0", s.index)
            })?;
        }
    }
    Ok(())
}

fn generators(cr: &CrRing) -> Vec<CrElement> {
    (0..cr.ell())
        .map(|j| cr.alpha(j).expect("sector exists"))
        .collect()
}

fn star_commutativity(r: &Rings) -> Result<(), String> {
    let cr = &r.chen_ruan;
    for i in 0..cr.ell() {
        for j in i + 1..cr.ell() {
            let a = cr.star_generators(i, j).map_err(|e| e.to_string())?;
            let b = cr.star_generators(j, i).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("a{i} a{j} = {a} but a{j} a{i} = {b}"))?;
        }
    }
    Ok(())
}

fn star_unit(r: &Rings) -> Result<(), String> {
    let cr = &r.chen_ruan;
    let one = cr.alpha(0).map_err(|e| e.to_string())?;
    ensure(one == cr.one(), || "a0 is not the unit".into())?;
    let mut samples = generators(cr);
    samples.push(cr.u());
    samples.push(
        cr.add(&cr.u(), &samples[cr.ell() - 1])
            .map_err(|e| e.to_string())?,
    );
    for x in samples {
        let p = cr.star(&one, &x).map_err(|e| e.to_string())?;
        ensure(p == x, || format!("a0 * ({x}) = {p}"))?;
    }
    Ok(())
}

fn grading_additivity(r: &Rings) -> Result<(), String> {
    let cr = &r.chen_ruan;
    for i in 0..cr.ell() {
        for j in 0..cr.ell() {
            let p = cr.star_generators(i, j).map_err(|e| e.to_string())?;
            if p.is_zero() {
                continue;
            }
            let di = &cr.sectors()[i].degree_shift;
            let dj = &cr.sectors()[j].degree_shift;
            let expect = Degree::Homogeneous(di + dj);
            let got = cr.degree(&p).map_err(|e| e.to_string())?;
            ensure(got == expect, || {
                format!("deg(a{i} a{j}) = {got}, expected {expect}")
            })?;
        }
    }
    Ok(())
}

/// Checks `(a_i a_j) a_k = a_i (a_j a_k)` for every triple of sectors.
///
/// Every partial product is a single monomial `c u^e a_s`, so each side is
/// the raw product `a_s a_k` scaled by `c u^e`, then reduced.
pub fn star_associativity_all(cr: &CrRing) -> Result<(), String> {
    let ell = cr.ell();
    let raw: Vec<Vec<CrMonomial>> = (0..ell)
        .map(|i| {
            (0..ell)
                .map(|j| cr.star_raw(i, j))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    // Reduced a_i a_j as a monomial, or None when it vanishes.
    let reduced: Vec<Vec<Option<CrMonomial>>> = raw
        .iter()
        .map(|row| {
            row.iter()
                .map(|m| single_monomial(&cr.from_monomial(m)))
                .collect()
        })
        .collect();
    let times = |m: &Option<CrMonomial>, other: &CrMonomial| -> CrElement {
        match m {
            None => cr.zero(),
            Some(m) => cr.from_monomial(&CrMonomial {
                coefficient: &m.coefficient * &other.coefficient,
                u_exp: m.u_exp + other.u_exp,
                sector: other.sector,
            }),
        }
    };
    (0..ell).into_par_iter().try_for_each(|i| {
        for j in 0..ell {
            for k in 0..ell {
                let lhs = times(&reduced[i][j], &raw[raw[i][j].sector][k]);
                let rhs = times(&reduced[j][k], &raw[i][raw[j][k].sector]);
                ensure(lhs == rhs, || {
                    format!("(a{i} a{j}) a{k} = {lhs} but a{i} (a{j} a{k}) = {rhs}")
                })?;
            }
        }
        Ok(())
    })
}

fn single_monomial(x: &CrElement) -> Option<CrMonomial> {
    let mut parts = x.parts();
    let (sector, poly) = parts.next()?;
    debug_assert!(parts.next().is_none());
    let mut terms = poly.terms();
    let (u_exp, c) = terms.next()?;
    debug_assert!(terms.next().is_none());
    Some(CrMonomial {
        coefficient: c.clone(),
        u_exp,
        sector,
    })
}

fn star_associativity(r: &Rings) -> Result<(), String> {
    star_associativity_all(&r.chen_ruan)
}

fn identity_sector_arithmetic(r: &Rings) -> Result<(), String> {
    let (cr, o) = (&r.chen_ruan, &r.orbifold);
    let top = o.relation_exponent();
    let n_plus = BigInt::from(r.weights.product().clone()) + 3;
    let coeffs = [BigInt::one(), BigInt::from(-2), n_plus];
    for a in 0..=top + 1 {
        for b in 0..=top + 1 {
            for c in &coeffs {
                let px = UPoly::from_coeffs([(a, c.clone()), (0, BigInt::from(1))]);
                let py = UPoly::monomial(c.clone(), b);
                let ox = o
                    .multiply(&o.normal_form(&px), &o.normal_form(&py))
                    .map_err(|e| e.to_string())?;
                let cx = cr.element([(0, px.clone())]).map_err(|e| e.to_string())?;
                let cy = cr.element([(0, py.clone())]).map_err(|e| e.to_string())?;
                let got = cr.star(&cx, &cy).map_err(|e| e.to_string())?;
                ensure(
                    got.part(0) == *ox.poly() && got.parts().all(|(j, _)| j == 0),
                    || {
                        format!("sector-0 product of ({px}) and ({py}) is {got}, orbifold ring gives {ox}")
                    },
                )?;
            }
        }
    }
    Ok(())
}
