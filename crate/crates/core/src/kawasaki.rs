//! Singular cohomology of the coarse space `CP^n_(b)`.
//!
//! Additively this is `Z` in each even degree `0..=2n`, generated by
//! `gamma_k` in degree `2k`. The product is twisted by the weights:
//!
//! ```text
//! gamma_k * gamma_m = (l_k l_m / l_{k+m}) gamma_{k+m}
//! ```
//!
//! where `l_k` is the lcm, over all `(k+1)`-subsets `I` of the coordinates,
//! of `prod_{i in I} b_i / gcd_{i in I} b_i`. Products landing above degree
//! `2n` vanish.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::abelian::{FgAbGroup, GradedGroups};
use crate::arith::{lcm_all, Degree, Rational, WeightVector};
use crate::error::{Error, Result};
use crate::orbifold::{same_weights, OrbifoldElement, OrbifoldRing};
use crate::poly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KawasakiRing {
    weights: Arc<WeightVector>,
    /// `l_0 = 1, l_1, ..., l_n`.
    ells: Vec<BigUint>,
}

/// Integer combination of `gamma_0 = 1, gamma_1, ..., gamma_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KawasakiElement {
    weights: Arc<WeightVector>,
    coeffs: BTreeMap<usize, BigInt>,
}

/// One entry `gamma_left * gamma_right = coefficient * gamma_{left+right}`
/// of the product table; `target` is `None` when the product vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaProduct {
    pub left: usize,
    pub right: usize,
    pub coefficient: BigUint,
    pub target: Option<usize>,
}

/// Computes `l_k` by enumerating every `(k+1)`-subset of the weights.
pub fn ell_by_enumeration(weights: &WeightVector, k: usize) -> Result<BigUint> {
    if k > weights.dim() {
        return Err(Error::arg(format!(
            "l_{k} undefined for n = {}",
            weights.dim()
        )));
    }
    let values: Vec<BigUint> = weights
        .weights()
        .iter()
        .combinations(k + 1)
        .map(|subset| {
            let prod: BigUint = subset.iter().map(|&&b| BigUint::from(b)).product();
            let gcd = subset.iter().fold(0u64, |g, &&b| g.gcd(&b));
            prod / BigUint::from(gcd)
        })
        .collect();
    lcm_all(&values)
}

impl KawasakiRing {
    pub fn new(weights: WeightVector) -> Self {
        Self::from_shared(Arc::new(weights))
    }

    pub(crate) fn from_shared(weights: Arc<WeightVector>) -> Self {
        let mut ells = vec![BigUint::one()];
        for k in 1..=weights.dim() {
            ells.push(ell_by_enumeration(&weights, k).expect("k within range"));
        }
        KawasakiRing { weights, ells }
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.dim()
    }

    /// `l_k` for `1 <= k <= n`.
    pub fn ell(&self, k: usize) -> Result<&BigUint> {
        if k == 0 || k > self.dim() {
            return Err(Error::arg(format!(
                "l_k is defined for 1 <= k <= {}, got k = {k}",
                self.dim()
            )));
        }
        Ok(&self.ells[k])
    }

    /// `[l_0 = 1, l_1, ..., l_n]`.
    pub fn ell_table(&self) -> &[BigUint] {
        &self.ells
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k > self.dim() {
            Err(Error::arg(format!(
                "generator gamma_{k} does not exist for n = {}",
                self.dim()
            )))
        } else {
            Ok(())
        }
    }

    /// The structure constant `l_k l_m / l_{k+m}`, or `None` when `k + m > n`.
    pub fn structure_constant(&self, k: usize, m: usize) -> Result<Option<BigUint>> {
        self.check_index(k)?;
        self.check_index(m)?;
        if k + m > self.dim() {
            return Ok(None);
        }
        let num = &self.ells[k] * &self.ells[m];
        let (q, r) = num.div_rem(&self.ells[k + m]);
        if !r.is_zero() {
            return Err(Error::Invariant(format!(
                "l_{} does not divide l_{k} * l_{m} for weights {}",
                k + m,
                self.weights
            )));
        }
        Ok(Some(q))
    }

    pub fn zero(&self) -> KawasakiElement {
        KawasakiElement {
            weights: self.weights.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> KawasakiElement {
        self.integer(1)
    }

    pub fn integer(&self, c: impl Into<BigInt>) -> KawasakiElement {
        self.element([(0, c.into())])
            .expect("gamma_0 always exists")
    }

    pub fn gamma(&self, k: usize) -> Result<KawasakiElement> {
        self.element([(k, BigInt::one())])
    }

    /// `sum c_k gamma_k` from `(k, c_k)` pairs.
    pub fn element(
        &self,
        terms: impl IntoIterator<Item = (usize, BigInt)>,
    ) -> Result<KawasakiElement> {
        let mut x = self.zero();
        for (k, c) in terms {
            self.check_index(k)?;
            x.add_term(k, c);
        }
        Ok(x)
    }

    pub fn gamma_product(&self, k: usize, m: usize) -> Result<KawasakiElement> {
        match self.structure_constant(k, m)? {
            Some(c) => self.element([(k + m, BigInt::from(c))]),
            None => Ok(self.zero()),
        }
    }

    fn check(&self, x: &KawasakiElement) -> Result<()> {
        if same_weights(&self.weights, &x.weights) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "element of the Kawasaki ring for {} used in the ring for {}",
                x.weights, self.weights
            )))
        }
    }

    pub fn add(&self, x: &KawasakiElement, y: &KawasakiElement) -> Result<KawasakiElement> {
        self.check(x)?;
        self.check(y)?;
        let mut out = x.clone();
        for (&k, c) in &y.coeffs {
            out.add_term(k, c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self, x: &KawasakiElement) -> Result<KawasakiElement> {
        self.check(x)?;
        let mut out = x.clone();
        out.coeffs.values_mut().for_each(|c| *c = -&*c);
        Ok(out)
    }

    pub fn multiply(&self, x: &KawasakiElement, y: &KawasakiElement) -> Result<KawasakiElement> {
        self.check(x)?;
        self.check(y)?;
        let mut out = self.zero();
        for (&k, a) in &x.coeffs {
            for (&m, b) in &y.coeffs {
                if let Some(c) = self.structure_constant(k, m)? {
                    out.add_term(k + m, a * b * BigInt::from(c));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, x: &KawasakiElement, e: u32) -> Result<KawasakiElement> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn degree(&self, x: &KawasakiElement) -> Result<Degree> {
        self.check(x)?;
        Degree::common(
            x.coeffs
                .keys()
                .map(|&k| Rational::from_integer((2 * k).into())),
        )
    }

    /// `Z` in each even degree `2k` with `0 <= k <= n`, zero elsewhere.
    pub fn groups(&self, max_degree: u32) -> GradedGroups<u32> {
        let mut out = GradedGroups::new(max_degree);
        for k in 0..=self.dim() as u32 {
            out.add(2 * k, &FgAbGroup::free(1));
        }
        out
    }

    /// Product table for `1 <= k <= m <= n`.
    pub fn product_table(&self) -> Vec<GammaProduct> {
        let n = self.dim();
        let mut out = Vec::new();
        for k in 1..=n {
            for m in k..=n {
                let c = self.structure_constant(k, m).expect("indices in range");
                out.push(GammaProduct {
                    left: k,
                    right: m,
                    target: c.as_ref().map(|_| k + m),
                    coefficient: c.unwrap_or_default(),
                });
            }
        }
        out
    }

    /// For each `k` in `1..=n`, whether `gamma_1^k = +/- gamma_k`, i.e. whether
    /// `gamma_1` alone generates degree `2k` multiplicatively.
    pub fn gamma1_power_spans(&self) -> Vec<bool> {
        (1..=self.dim())
            .map(|k| self.ells[1].pow(k as u32) == self.ells[k])
            .collect()
    }

    /// The comparison map into orbifold cohomology: `gamma_k -> l_k u^k`.
    pub fn qstar(&self, target: &OrbifoldRing, x: &KawasakiElement) -> Result<OrbifoldElement> {
        self.check(x)?;
        if target.weights() != self.weights.as_ref() {
            return Err(Error::RingMismatch(format!(
                "q* from weights {} into orbifold ring of weights {}",
                self.weights,
                target.weights()
            )));
        }
        let raw = UPoly::from_coeffs(
            x.coeffs
                .iter()
                .map(|(&k, c)| (k as u32, c * BigInt::from(self.ells[k].clone()))),
        );
        Ok(target.normal_form(&raw))
    }
}

impl KawasakiElement {
    fn add_term(&mut self, k: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }
}

impl fmt::Display for KawasakiElement {
    /// `6g2 - 3g1 + 1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&k, c)) in self.coeffs.iter().rev().enumerate() {
            let tail = if k == 0 {
                String::new()
            } else {
                format!("g{k}")
            };
            crate::poly::write_term(f, i == 0, c, 0, &tail)?;
        }
        Ok(())
    }
}
