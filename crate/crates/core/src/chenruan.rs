//! Chen-Ruan orbifold cohomology of `[CP^n_(b)]` over the integers.
//!
//! The ring is generated by `u` (degree 2) and one placeholder `a_j` per
//! element `zeta_j = exp(2 pi i j / l)` of the cyclic group `Z_l`,
//! `l = lcm(b)`. Writing `a_k(j)` for the fractional part of `b_k j / l`:
//!
//! * `deg a_j = 2 sum_k a_k(j)`;
//! * `a_i * a_j = prod_k (b_k u)^{e_k} a_{[i+j]}` with
//!   `e_k = a_k(i) + a_k(j) - a_k(i+j)`, always `0` or `1`;
//! * sector `j` is killed by its equivariant Euler class
//!   `c_j u^{d_j} a_j`, where `c_j` is the product of the weights fixed by
//!   `zeta_j` and `d_j` their number.
//!
//! Elements are stored sector by sector, each sector polynomial reduced
//! modulo `c_j u^{d_j}`; products are evaluated eagerly into that form.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::abelian::{FgAbGroup, GradedGroups};
use crate::arith::{rotation_number, Degree, Rational, WeightVector};
use crate::error::{Error, Result};
use crate::orbifold::same_weights;
use crate::poly::{write_term, UPoly};

/// Data attached to the twisted sector of `zeta_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorData {
    pub index: usize,
    /// `a_k(j)` for each coordinate `k`.
    pub rotation: Vec<Rational>,
    /// Coordinates fixed by `zeta_j`, i.e. those with `a_k(j) = 0`.
    pub fixed: Vec<usize>,
    /// `c_j`: product of the fixed weights (1 when nothing is fixed).
    pub euler_coefficient: BigUint,
    /// `d_j`: number of fixed coordinates.
    pub euler_exponent: u32,
    /// `2 * age(zeta_j)`.
    pub degree_shift: Rational,
    /// `[b_k j]`, so that `a_k(j) = residues[k] / l`.
    residues: Vec<u64>,
}

impl SectorData {
    /// Whether the sector is killed outright (`c_j = 1`, `d_j = 0`).
    pub fn vanishes(&self) -> bool {
        self.euler_exponent == 0
    }

    /// Twisted sector fixing every coordinate (global stabilizer).
    pub fn is_untwisted(&self) -> bool {
        self.fixed.len() == self.rotation.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrRing {
    weights: Arc<WeightVector>,
    ell: u64,
    sectors: Vec<SectorData>,
}

/// A raw term `coefficient * u^u_exp * a_sector`, before reduction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrMonomial {
    pub coefficient: BigInt,
    pub u_exp: u32,
    pub sector: usize,
}

/// An element of [`CrRing`] in per-sector normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrElement {
    weights: Arc<WeightVector>,
    parts: BTreeMap<usize, UPoly>,
}

/// Entry of the multiplication table: `a_left * a_right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarEntry {
    pub left: usize,
    pub right: usize,
    pub raw: CrMonomial,
    pub value: CrElement,
}

/// Generators and relations of the ring, in deterministic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrPresentation {
    /// `("u", 2)` followed by `("a<j>", deg a_j)` for `j = 1..l`.
    pub generators: Vec<(String, Rational)>,
    /// Kernel relations `c_j u^{d_j} a_j`, one per sector.
    pub kernel: Vec<CrMonomial>,
    /// Product relations `a_i a_j - raw` for `i <= j`, both sectors
    /// nontrivial and nonzero.
    pub products: Vec<StarEntry>,
}

/// Every sector is materialized, so `l = lcm b` is capped.
pub const MAX_SECTORS: u64 = 1 << 20;

impl CrRing {
    /// Builds the sector chart for the given weights.
    pub fn new(weights: WeightVector) -> Result<Self> {
        let ell = weights
            .lcm()
            .to_u64()
            .filter(|&l| l <= MAX_SECTORS)
            .ok_or_else(|| {
                Error::arg(format!(
                    "lcm of {weights} is {}, more than the {MAX_SECTORS} sectors that can be enumerated",
                    weights.lcm()
                ))
            })?;
        let big_ell = BigUint::from(ell);
        let sectors = (0..ell)
            .map(|j| {
                let mut rotation = Vec::with_capacity(weights.weights().len());
                let mut residues = Vec::with_capacity(weights.weights().len());
                let mut fixed = Vec::new();
                let mut euler_coefficient = BigUint::one();
                for (k, &b) in weights.weights().iter().enumerate() {
                    let a = rotation_number(&b.into(), &BigInt::from(j), &big_ell)?;
                    let r = ((b as u128 * j as u128) % ell as u128) as u64;
                    if a.is_zero() {
                        fixed.push(k);
                        euler_coefficient *= b;
                    }
                    rotation.push(a);
                    residues.push(r);
                }
                let age: Rational = rotation.iter().sum();
                Ok(SectorData {
                    index: j as usize,
                    euler_exponent: fixed.len() as u32,
                    rotation,
                    fixed,
                    euler_coefficient,
                    degree_shift: age * Rational::from_integer(2.into()),
                    residues,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CrRing {
            weights: Arc::new(weights),
            ell,
            sectors,
        })
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn ell(&self) -> usize {
        self.ell as usize
    }

    pub fn sectors(&self) -> &[SectorData] {
        &self.sectors
    }

    pub fn sector(&self, j: usize) -> Result<&SectorData> {
        self.sectors
            .get(j)
            .ok_or_else(|| Error::arg(format!("sector a{j} does not exist: l = {}", self.ell)))
    }

    /// Reduction of a sector index modulo `l`.
    pub fn wrap(&self, m: usize) -> usize {
        m % self.ell()
    }

    /// The exponents `e_k = a_k(i) + a_k(j) - a_k(i+j)`, each `0` or `1`.
    pub fn exponents(&self, i: usize, j: usize) -> Result<Vec<u32>> {
        let si = self.sector(i)?;
        let sj = self.sector(j)?;
        let sk = &self.sectors[self.wrap(i + j)];
        si.residues
            .iter()
            .zip(&sj.residues)
            .zip(&sk.residues)
            .enumerate()
            .map(|(k, ((&ri, &rj), &rk))| {
                let total = ri as u128 + rj as u128;
                if total == rk as u128 {
                    Ok(0)
                } else if total == rk as u128 + self.ell as u128 {
                    Ok(1)
                } else {
                    Err(Error::Invariant(format!(
                        "non-integral exponent at coordinate {k} for a{i} * a{j} with weights {}",
                        self.weights
                    )))
                }
            })
            .collect()
    }

    /// `a_i * a_j` before reduction: `prod_{e_k = 1} b_k * u^{sum e_k} * a_{[i+j]}`.
    pub fn star_raw(&self, i: usize, j: usize) -> Result<CrMonomial> {
        let eps = self.exponents(i, j)?;
        let mut coefficient = BigInt::one();
        let mut u_exp = 0;
        for (k, e) in eps.into_iter().enumerate() {
            if e == 1 {
                coefficient *= self.weights.weight(k);
                u_exp += 1;
            }
        }
        Ok(CrMonomial {
            coefficient,
            u_exp,
            sector: self.wrap(i + j),
        })
    }

    /// `a_i * a_j` in normal form.
    pub fn star_generators(&self, i: usize, j: usize) -> Result<CrElement> {
        Ok(self.from_monomial(&self.star_raw(i, j)?))
    }

    /// The kernel generator `c_j u^{d_j} a_j` of sector `j`, unreduced.
    pub fn kernel_relation(&self, j: usize) -> Result<CrMonomial> {
        let s = self.sector(j)?;
        Ok(CrMonomial {
            coefficient: s.euler_coefficient.clone().into(),
            u_exp: s.euler_exponent,
            sector: j,
        })
    }

    pub fn zero(&self) -> CrElement {
        CrElement {
            weights: self.weights.clone(),
            parts: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> CrElement {
        self.integer(1)
    }

    pub fn integer(&self, c: impl Into<BigInt>) -> CrElement {
        self.normalize(BTreeMap::from([(0, UPoly::constant(c))]))
    }

    pub fn u(&self) -> CrElement {
        self.normalize(BTreeMap::from([(0, UPoly::monomial(1, 1))]))
    }

    /// The sector generator `a_j` (`a_0` is the unit).
    pub fn alpha(&self, j: usize) -> Result<CrElement> {
        self.sector(j)?;
        Ok(self.normalize(BTreeMap::from([(j, UPoly::constant(1))])))
    }

    pub fn from_monomial(&self, m: &CrMonomial) -> CrElement {
        self.normalize(BTreeMap::from([(
            m.sector,
            UPoly::monomial(m.coefficient.clone(), m.u_exp),
        )]))
    }

    /// Builds an element from raw sector polynomials, reducing each.
    pub fn element(&self, parts: impl IntoIterator<Item = (usize, UPoly)>) -> Result<CrElement> {
        let mut acc: BTreeMap<usize, UPoly> = BTreeMap::new();
        for (j, p) in parts {
            self.sector(j)?;
            let slot = acc.entry(j).or_default();
            *slot = slot.add(&p);
        }
        Ok(self.normalize(acc))
    }

    fn normalize(&self, parts: BTreeMap<usize, UPoly>) -> CrElement {
        let parts = parts
            .into_iter()
            .filter_map(|(j, p)| {
                let s = &self.sectors[j];
                let p = p.reduce(&s.euler_coefficient, s.euler_exponent);
                (!p.is_zero()).then_some((j, p))
            })
            .collect();
        CrElement {
            weights: self.weights.clone(),
            parts,
        }
    }

    fn check(&self, x: &CrElement) -> Result<()> {
        if same_weights(&self.weights, &x.weights) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "element of the Chen-Ruan ring for {} used in the ring for {}",
                x.weights, self.weights
            )))
        }
    }

    pub fn add(&self, x: &CrElement, y: &CrElement) -> Result<CrElement> {
        self.check(x)?;
        self.check(y)?;
        let mut parts = x.parts.clone();
        for (&j, p) in &y.parts {
            let slot = parts.entry(j).or_default();
            *slot = slot.add(p);
        }
        Ok(self.normalize(parts))
    }

    pub fn neg(&self, x: &CrElement) -> Result<CrElement> {
        self.check(x)?;
        Ok(self.normalize(x.parts.iter().map(|(&j, p)| (j, p.neg())).collect()))
    }

    /// The orbifold (star) product.
    pub fn star(&self, x: &CrElement, y: &CrElement) -> Result<CrElement> {
        self.check(x)?;
        self.check(y)?;
        let mut parts: BTreeMap<usize, UPoly> = BTreeMap::new();
        for (&i, p) in &x.parts {
            for (&j, q) in &y.parts {
                let m = self.star_raw(i, j)?;
                let term = p.mul(q).scale_shift(&m.coefficient, m.u_exp);
                let slot = parts.entry(m.sector).or_default();
                *slot = slot.add(&term);
            }
        }
        Ok(self.normalize(parts))
    }

    pub fn pow(&self, x: &CrElement, e: u32) -> Result<CrElement> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.star(&acc, x)?;
        }
        Ok(acc)
    }

    /// Degree of `u^m a_j` is `2m + deg a_j`.
    pub fn monomial_degree(&self, u_exp: u32, sector: usize) -> Result<Rational> {
        let s = self.sector(sector)?;
        Ok(Rational::from_integer((2 * u_exp).into()) + &s.degree_shift)
    }

    pub fn degree(&self, x: &CrElement) -> Result<Degree> {
        self.check(x)?;
        let degrees = x
            .parts
            .iter()
            .flat_map(|(&j, p)| p.terms().map(move |(e, _)| (e, j)))
            .map(|(e, j)| self.monomial_degree(e, j))
            .collect::<Result<Vec<_>>>()?;
        Degree::common(degrees.into_iter())
    }

    /// Indices `j >= 1` of sectors that are not killed outright.
    pub fn live_twisted_sectors(&self) -> Vec<usize> {
        self.sectors
            .iter()
            .filter(|s| s.index > 0 && !s.vanishes())
            .map(|s| s.index)
            .collect()
    }

    /// Products `a_i * a_j`, `i <= j`, among the live twisted sectors.
    pub fn mult_table(&self) -> Result<Vec<StarEntry>> {
        let live = self.live_twisted_sectors();
        let mut out = Vec::new();
        for (pos, &i) in live.iter().enumerate() {
            for &j in &live[pos..] {
                let raw = self.star_raw(i, j)?;
                let value = self.from_monomial(&raw);
                out.push(StarEntry {
                    left: i,
                    right: j,
                    raw,
                    value,
                });
            }
        }
        Ok(out)
    }

    pub fn presentation(&self) -> Result<CrPresentation> {
        let mut generators = vec![("u".to_string(), Rational::from_integer(2.into()))];
        for s in &self.sectors[1..] {
            generators.push((format!("a{}", s.index), s.degree_shift.clone()));
        }
        let kernel = (0..self.ell())
            .map(|j| self.kernel_relation(j))
            .collect::<Result<Vec<_>>>()?;
        Ok(CrPresentation {
            generators,
            kernel,
            products: self.mult_table()?,
        })
    }

    /// Degree-wise groups up to `max_degree`: sector `j` contributes `Z` in
    /// degree `2m + deg a_j` for `m < d_j` and `Z/c_j` for `m >= d_j`.
    pub fn graded_dimensions(&self, max_degree: &Rational) -> GradedGroups<Rational> {
        let mut out = GradedGroups::new(max_degree.clone());
        for s in self.sectors.iter().filter(|s| !s.vanishes()) {
            let torsion = FgAbGroup::cyclic(s.euler_coefficient.clone());
            let mut m = 0u32;
            loop {
                let d = Rational::from_integer((2 * m).into()) + &s.degree_shift;
                if &d > max_degree {
                    break;
                }
                if m < s.euler_exponent {
                    out.add(d, &FgAbGroup::free(1));
                } else if torsion.is_zero() {
                    break;
                } else {
                    out.add(d, &torsion);
                }
                m += 1;
            }
        }
        out
    }
}

/// Whether some automorphism `j -> t j` of `Z_l` carries the sector chart
/// and every structure constant of `a` onto those of `b`.
pub fn presentation_equivalent(a: &CrRing, b: &CrRing) -> Result<bool> {
    if a.ell != b.ell || a.weights.dim() != b.weights.dim() {
        return Ok(false);
    }
    let ell = a.ell();
    'units: for t in (0..ell).filter(|&t| t.gcd(&ell) == 1) {
        let map = |j: usize| (j * t) % ell;
        for j in 0..ell {
            let (sa, sb) = (&a.sectors[j], &b.sectors[map(j)]);
            if sa.degree_shift != sb.degree_shift
                || sa.euler_coefficient != sb.euler_coefficient
                || sa.euler_exponent != sb.euler_exponent
            {
                continue 'units;
            }
        }
        for i in 0..ell {
            for j in i..ell {
                let pa = a.star_generators(i, j)?;
                let pb = b.star_generators(map(i), map(j))?;
                if pa.relabel(&b.weights, map) != pb {
                    continue 'units;
                }
            }
        }
        return Ok(true);
    }
    Ok(false)
}

impl CrElement {
    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sector polynomial of `a_j` (zero if absent).
    pub fn part(&self, j: usize) -> UPoly {
        self.parts.get(&j).cloned().unwrap_or_default()
    }

    pub fn parts(&self) -> impl Iterator<Item = (usize, &UPoly)> {
        self.parts.iter().map(|(&j, p)| (j, p))
    }

    fn relabel(&self, weights: &Arc<WeightVector>, map: impl Fn(usize) -> usize) -> CrElement {
        CrElement {
            weights: weights.clone(),
            parts: self
                .parts
                .iter()
                .map(|(&j, p)| (map(j), p.clone()))
                .collect(),
        }
    }

    /// Same element written in the expression language, e.g. `4*u^2*a4 + 3`.
    pub fn to_expr_string(&self) -> String {
        let mut terms = Vec::new();
        for (&j, p) in &self.parts {
            for (e, c) in p.terms() {
                let mut factors = vec![format!("({c})")];
                if e > 0 {
                    factors.push(format!("u^{e}"));
                }
                if j > 0 {
                    factors.push(format!("a{j}"));
                }
                terms.push(factors.join("*"));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn sector_name(j: usize) -> String {
    if j == 0 {
        String::new()
    } else {
        format!("a{j}")
    }
}

impl fmt::Display for CrElement {
    /// Sectors in increasing order, highest power of `u` first: `u + 4u^2 a4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&j, p) in &self.parts {
            let tail = sector_name(j);
            for (e, c) in p.terms().collect::<Vec<_>>().into_iter().rev() {
                write_term(f, first, c, e, &tail)?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Display for CrMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(
            f,
            true,
            &self.coefficient,
            self.u_exp,
            &sector_name(self.sector),
        )
    }
}

impl StarEntry {
    /// `a_i a_j - raw`, e.g. `a2^2 - 4u^2 a4` or `a1^2 - u`.
    pub fn relation_string(&self) -> String {
        let lhs = if self.left == self.right {
            format!("a{}^2", self.left)
        } else {
            format!("a{} a{}", self.left, self.right)
        };
        format!("{lhs} - {}", self.raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(w: &[u64]) -> CrRing {
        CrRing::new(WeightVector::new(w.to_vec()).unwrap()).unwrap()
    }

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    fn mono(r: &CrRing, c: i64, e: u32, j: usize) -> CrElement {
        r.from_monomial(&CrMonomial {
            coefficient: c.into(),
            u_exp: e,
            sector: j,
        })
    }

    #[test]
    fn sector_chart_123() {
        let r = ring(&[1, 2, 2, 3, 3, 3]);
        assert_eq!(r.ell(), 6);
        let s1 = r.sector(1).unwrap();
        assert!(s1.fixed.is_empty());
        assert_eq!(s1.euler_coefficient, BigUint::one());
        assert_eq!(s1.euler_exponent, 0);
        assert_eq!(s1.degree_shift, q(14, 3));
        let s2 = r.sector(2).unwrap();
        assert_eq!(s2.fixed, vec![3, 4, 5]);
        assert_eq!(s2.euler_coefficient, BigUint::from(27u32));
        assert_eq!(s2.euler_exponent, 3);
        assert_eq!(s2.degree_shift, q(10, 3));
        let s0 = r.sector(0).unwrap();
        assert_eq!(s0.euler_coefficient, BigUint::from(108u32));
        assert_eq!(s0.euler_exponent, 6);
        assert!(s0.degree_shift.is_zero());
    }

    #[test]
    fn smooth_case_has_one_sector() {
        let r = ring(&[1, 1, 1]);
        assert_eq!(r.ell(), 1);
        let s = r.sector(0).unwrap();
        assert!(s.euler_coefficient.is_one());
        assert_eq!(s.euler_exponent, 3);
        assert!(s.degree_shift.is_zero());
        assert!(r.sector(1).is_err());
    }

    #[test]
    fn star_generator_examples() {
        let r = ring(&[1, 2, 2, 3, 3, 3]);
        assert_eq!(r.star_generators(2, 2).unwrap(), mono(&r, 4, 2, 4));
        assert_eq!(
            r.star_raw(3, 4).unwrap(),
            CrMonomial {
                coefficient: 1.into(),
                u_exp: 1,
                sector: 1
            }
        );
        assert!(r.star_generators(3, 4).unwrap().is_zero());
        assert_eq!(r.star_generators(0, 0).unwrap(), r.one());

        let r = ring(&[1, 2]);
        assert_eq!(r.star_generators(1, 1).unwrap(), r.u());
    }

    #[test]
    fn star_examples() {
        let r = ring(&[1, 2, 2, 3, 3, 3]);
        let a2 = r.alpha(2).unwrap();
        let ua2 = r.star(&r.u(), &a2).unwrap();
        assert_eq!(r.star(&ua2, &a2).unwrap(), mono(&r, 4, 3, 4));
        assert!(r.star(&a2, &r.zero()).unwrap().is_zero());
        let x = r.add(&a2, &mono(&r, 3, 1, 3)).unwrap();
        let y = r.add(&r.alpha(4).unwrap(), &r.u()).unwrap();
        assert_eq!(r.star(&x, &y).unwrap(), r.star(&y, &x).unwrap());
        assert!(r.star(&x, &ring(&[1, 2]).u()).is_err());
    }

    #[test]
    fn kernel_relations() {
        let r = ring(&[1, 2, 2, 3, 3, 3]);
        assert_eq!(r.kernel_relation(0).unwrap().to_string(), "108u^6");
        assert_eq!(r.kernel_relation(3).unwrap().to_string(), "4u^2 a3");
        assert_eq!(r.kernel_relation(1).unwrap().to_string(), "a1");
        for j in 0..6 {
            assert!(r.from_monomial(&r.kernel_relation(j).unwrap()).is_zero());
        }
    }

    #[test]
    fn degrees() {
        let r = ring(&[1, 2, 2, 3, 3, 3]);
        let a5 = CrElement {
            weights: r.weights.clone(),
            parts: BTreeMap::from([(5, UPoly::constant(1))]),
        };
        assert_eq!(r.degree(&a5).unwrap(), Degree::Homogeneous(q(22, 3)));
        assert_eq!(
            r.degree(&mono(&r, 1, 2, 0)).unwrap(),
            Degree::Homogeneous(q(4, 1))
        );
        let mixed = r.add(&r.alpha(2).unwrap(), &r.u()).unwrap();
        assert_eq!(r.degree(&mixed).unwrap(), Degree::Inhomogeneous);
        assert!(r.degree(&r.zero()).is_err());
    }

    #[test]
    fn mult_table_123() {
        let r = ring(&[1, 2, 2, 3, 3, 3]);
        let table: Vec<(usize, usize, String)> = r
            .mult_table()
            .unwrap()
            .into_iter()
            .map(|e| (e.left, e.right, e.value.to_string()))
            .collect();
        let expect = [
            (2, 2, "4u^2 a4"),
            (2, 3, "0"),
            (2, 4, "4u^3"),
            (3, 3, "27u^4"),
            (3, 4, "0"),
            (4, 4, "u a2"),
        ];
        assert_eq!(table.len(), expect.len());
        for ((i, j, v), (ei, ej, ev)) in table.iter().zip(expect) {
            assert_eq!((*i, *j, v.as_str()), (ei, ej, ev));
        }
    }

    #[test]
    fn presentation_of_orbisphere() {
        let p = ring(&[1, 2]).presentation().unwrap();
        assert_eq!(
            p.generators,
            vec![("u".into(), q(2, 1)), ("a1".into(), q(1, 1))]
        );
        let kernel: Vec<String> = p.kernel.iter().map(ToString::to_string).collect();
        assert_eq!(kernel, vec!["2u^2", "2u a1"]);
        let products: Vec<String> = p.products.iter().map(StarEntry::relation_string).collect();
        assert_eq!(products, vec!["a1^2 - u"]);
    }

    #[test]
    fn presentation_of_smooth_space() {
        let p = ring(&[1, 1, 1]).presentation().unwrap();
        assert_eq!(p.generators.len(), 1);
        assert_eq!(p.kernel.len(), 1);
        assert_eq!(p.kernel[0].to_string(), "u^3");
        assert!(p.products.is_empty());
    }

    #[test]
    fn graded_dimensions_orbisphere() {
        let r = ring(&[1, 2]);
        let g = r.graded_dimensions(&q(6, 1));
        assert_eq!(g.get(&q(0, 1)), Some(FgAbGroup::free(1)));
        assert_eq!(g.get(&q(1, 1)), Some(FgAbGroup::free(1)));
        assert_eq!(g.get(&q(2, 1)), Some(FgAbGroup::free(1)));
        assert_eq!(g.get(&q(3, 1)), Some(FgAbGroup::cyclic(2u32)));
        assert_eq!(g.get(&q(4, 1)), Some(FgAbGroup::cyclic(2u32)));
    }

    #[test]
    fn gerbe_is_a_group_ring() {
        let r = ring(&[2, 2]);
        let s1 = r.sector(1).unwrap();
        assert!(s1.is_untwisted());
        assert!(s1.degree_shift.is_zero());
        assert_eq!(r.star_generators(1, 1).unwrap(), r.one());
    }

    #[test]
    fn equivalence_distinguishes_2_2_from_4_1() {
        let a = ring(&[2, 2]);
        let b = ring(&[4, 1]);
        assert!(!presentation_equivalent(&a, &b).unwrap());
        assert!(presentation_equivalent(&a, &ring(&[2, 2])).unwrap());
        assert!(presentation_equivalent(&ring(&[1, 2, 3]), &ring(&[3, 2, 1])).unwrap());
    }

    #[test]
    fn display() {
        let r = ring(&[1, 2, 2, 3, 3, 3]);
        let x = r.add(&mono(&r, 4, 2, 4), &mono(&r, -1, 1, 0)).unwrap();
        assert_eq!(x.to_string(), "-u + 4u^2 a4");
        assert_eq!(x.to_expr_string(), "(-1)*u^1 + (4)*u^2*a4");
    }
}
