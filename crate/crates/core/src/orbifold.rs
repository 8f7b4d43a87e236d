//! The integral cohomology of the orbifold `[CP^n_(b)]`, presented as
//! `Z[u] / <N u^{n+1}>` with `N = b_0 ... b_n` and `deg u = 2`.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};

use crate::abelian::{FgAbGroup, GradedGroups};
use crate::arith::{Degree, Rational, WeightVector};
use crate::error::{Error, Result};
use crate::poly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbifoldRing {
    weights: Arc<WeightVector>,
    top: u32,
}

/// An element of [`OrbifoldRing`] in normal form: coefficients of `u^m` for
/// `m >= n+1` lie in `[0, N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbifoldElement {
    weights: Arc<WeightVector>,
    poly: UPoly,
}

impl OrbifoldRing {
    pub fn new(weights: WeightVector) -> Self {
        Self::from_shared(Arc::new(weights))
    }

    pub(crate) fn from_shared(weights: Arc<WeightVector>) -> Self {
        let top = u32::try_from(weights.dim() + 1).expect("dimension fits in u32");
        OrbifoldRing { weights, top }
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// The coefficient `N` of the relation `N u^{n+1}`.
    pub fn relation_coefficient(&self) -> &BigUint {
        self.weights.product()
    }

    /// The exponent `n+1` of the relation `N u^{n+1}`.
    pub fn relation_exponent(&self) -> u32 {
        self.top
    }

    pub fn normal_form(&self, raw: &UPoly) -> OrbifoldElement {
        OrbifoldElement {
            weights: self.weights.clone(),
            poly: raw.reduce(self.weights.product(), self.top),
        }
    }

    pub fn zero(&self) -> OrbifoldElement {
        self.normal_form(&UPoly::zero())
    }

    pub fn one(&self) -> OrbifoldElement {
        self.integer(1)
    }

    pub fn integer(&self, c: impl Into<BigInt>) -> OrbifoldElement {
        self.normal_form(&UPoly::constant(c))
    }

    /// `c u^exp`, reduced.
    pub fn monomial(&self, c: impl Into<BigInt>, exp: u32) -> OrbifoldElement {
        self.normal_form(&UPoly::monomial(c, exp))
    }

    pub fn u(&self) -> OrbifoldElement {
        self.monomial(1, 1)
    }

    fn check(&self, x: &OrbifoldElement) -> Result<()> {
        if same_weights(&self.weights, &x.weights) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "element of the orbifold ring for {} used in the ring for {}",
                x.weights, self.weights
            )))
        }
    }

    pub fn add(&self, x: &OrbifoldElement, y: &OrbifoldElement) -> Result<OrbifoldElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.normal_form(&x.poly.add(&y.poly)))
    }

    pub fn neg(&self, x: &OrbifoldElement) -> Result<OrbifoldElement> {
        self.check(x)?;
        Ok(self.normal_form(&x.poly.neg()))
    }

    pub fn multiply(&self, x: &OrbifoldElement, y: &OrbifoldElement) -> Result<OrbifoldElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.normal_form(&x.poly.mul(&y.poly)))
    }

    pub fn pow(&self, x: &OrbifoldElement, e: u32) -> Result<OrbifoldElement> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    /// Degree of a nonzero element (`deg u^m = 2m`).
    pub fn degree(&self, x: &OrbifoldElement) -> Result<Degree> {
        self.check(x)?;
        Degree::common(
            x.poly
                .terms()
                .map(|(e, _)| Rational::from_integer((2 * e).into())),
        )
    }

    /// `Z` in degrees `2m <= 2n`, `Z/N` in even degrees above `2n`, zero in odd degrees.
    pub fn group_at_degree(&self, d: u32) -> FgAbGroup {
        if d % 2 == 1 {
            FgAbGroup::zero()
        } else if d / 2 < self.top {
            FgAbGroup::free(1)
        } else {
            FgAbGroup::cyclic(self.weights.product().clone())
        }
    }

    pub fn groups(&self, max_degree: u32) -> GradedGroups<u32> {
        let mut out = GradedGroups::new(max_degree);
        for d in 0..=max_degree {
            out.add(d, &self.group_at_degree(d));
        }
        out
    }

    /// Whether `k u^{n+1}` vanishes, i.e. whether `N` divides `k`.
    pub fn annihilates_top(&self, k: &BigInt) -> bool {
        self.monomial(k.clone(), self.top).is_zero()
    }
}

/// Graded-ring isomorphism test for two orbifold rings `Z[u]/<N u^{n+1}>`:
/// they agree iff the dimensions and the relation coefficients agree.
pub fn iso_check(a: &WeightVector, b: &WeightVector) -> bool {
    a.dim() == b.dim() && a.product() == b.product()
}

pub(crate) fn same_weights(a: &Arc<WeightVector>, b: &Arc<WeightVector>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl OrbifoldElement {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn poly(&self) -> &UPoly {
        &self.poly
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.poly.coeff(exp)
    }

    pub fn is_normal(&self) -> bool {
        self.poly
            .is_reduced(self.weights.product(), self.weights.dim() as u32 + 1)
    }
}

impl fmt::Display for OrbifoldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

impl fmt::Display for OrbifoldRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = UPoly::monomial(BigInt::from(self.relation_coefficient().clone()), self.top);
        write!(f, "Z[u]/<{rel}>")
    }
}
