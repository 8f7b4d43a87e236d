//! Exact integer and rational helpers, and the validated weight vector
//! every ring in this crate is built from.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Greatest common divisor of a nonempty list of positive integers.
pub fn gcd_all(xs: &[BigUint]) -> Result<BigUint> {
    check_positive(xs)?;
    Ok(xs.iter().skip(1).fold(xs[0].clone(), |acc, x| acc.gcd(x)))
}

/// Least common multiple of a nonempty list of positive integers.
pub fn lcm_all(xs: &[BigUint]) -> Result<BigUint> {
    check_positive(xs)?;
    Ok(xs.iter().skip(1).fold(xs[0].clone(), |acc, x| acc.lcm(x)))
}

fn check_positive(xs: &[BigUint]) -> Result<()> {
    if xs.is_empty() {
        return Err(Error::arg("empty list"));
    }
    if xs.iter().any(Zero::is_zero) {
        return Err(Error::arg("entries must be positive"));
    }
    Ok(())
}

/// The least non-negative integer congruent to `m` modulo `ell`.
pub fn residue(m: &BigInt, ell: &BigUint) -> Result<BigUint> {
    if ell.is_zero() {
        return Err(Error::arg("modulus must be positive"));
    }
    let ell = BigInt::from(ell.clone());
    Ok(m.mod_floor(&ell).magnitude().clone())
}

/// Fractional part of `weight * m / ell`: the rotation number by which the
/// `m`-th power of a primitive `ell`-th root of unity acts on a coordinate of
/// the given weight.
pub fn rotation_number(weight: &BigUint, m: &BigInt, ell: &BigUint) -> Result<Rational> {
    if weight.is_zero() {
        return Err(Error::arg("weight must be positive"));
    }
    let r = residue(&(BigInt::from(weight.clone()) * m), ell)?;
    Ok(Rational::new(r.into(), ell.clone().into()))
}

/// Fractional part `q - floor(q)`, in `[0, 1)`.
pub fn fractional_part(q: &Rational) -> Rational {
    q - q.floor()
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `p/q` or `-p/q` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::arg(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// A tuple `(b_0, ..., b_n)` of positive integer weights for a circle action
/// on `C^{n+1}`, together with its derived quantities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    weights: Vec<u64>,
    product: BigUint,
    gcd: u64,
    lcm: BigUint,
}

impl WeightVector {
    pub fn new(weights: impl Into<Vec<u64>>) -> Result<Self> {
        let weights = weights.into();
        if weights.is_empty() {
            return Err(Error::arg("weight vector must have at least one entry"));
        }
        if let Some(pos) = weights.iter().position(|&b| b == 0) {
            return Err(Error::arg(format!("weight b_{pos} must be positive")));
        }
        let big: Vec<BigUint> = weights.iter().map(|&b| BigUint::from(b)).collect();
        let product = big.iter().product();
        let gcd = gcd_all(&big)?.to_u64().expect("gcd bounded by the weights");
        let lcm = lcm_all(&big)?;
        Ok(WeightVector {
            weights,
            product,
            gcd,
            lcm,
        })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, k: usize) -> u64 {
        self.weights[k]
    }

    /// Complex dimension `n` of the weighted projective space.
    pub fn dim(&self) -> usize {
        self.weights.len() - 1
    }

    /// `N = b_0 * ... * b_n`.
    pub fn product(&self) -> &BigUint {
        &self.product
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    /// `lcm(b_0, ..., b_n)`, the order of the group generated by all finite stabilizers.
    pub fn lcm(&self) -> &BigUint {
        &self.lcm
    }

    pub fn is_reduced(&self) -> bool {
        self.gcd == 1
    }

    /// The weights divided by their gcd; the base of the gerbe when `g > 1`.
    pub fn reduced(&self) -> WeightVector {
        let w: Vec<u64> = self.weights.iter().map(|b| b / self.gcd).collect();
        WeightVector::new(w).expect("quotient of positive weights is positive")
    }

    /// All weights multiplied by `c`.
    pub fn scaled(&self, c: u64) -> Result<WeightVector> {
        let w = self
            .weights
            .iter()
            .map(|b| {
                b.checked_mul(c)
                    .ok_or_else(|| Error::arg("scaled weight overflows u64"))
            })
            .collect::<Result<Vec<_>>>()?;
        WeightVector::new(w)
    }

    pub fn big_weights(&self) -> Vec<BigUint> {
        self.weights.iter().map(|&b| BigUint::from(b)).collect()
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    /// Parses a comma-separated list such as `1,2,2,3,3,3`.
    fn from_str(s: &str) -> Result<Self> {
        let weights = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<u64>()
                    .map_err(|_| Error::arg(format!("weight {t:?} is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        WeightVector::new(weights)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Degree of a ring element: a common (possibly fractional) degree, or
/// `Inhomogeneous` when its monomials disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degree {
    Homogeneous(Rational),
    Inhomogeneous,
}

impl Degree {
    /// Folds the degrees of the monomials of a nonzero element.
    pub(crate) fn common(mut degrees: impl Iterator<Item = Rational>) -> Result<Degree> {
        let first = degrees
            .next()
            .ok_or_else(|| Error::arg("degree of the zero element is undefined"))?;
        if degrees.all(|d| d == first) {
            Ok(Degree::Homogeneous(first))
        } else {
            Ok(Degree::Inhomogeneous)
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Homogeneous(q) => f.write_str(&format_rational(q)),
            Degree::Inhomogeneous => f.write_str("inhomogeneous"),
        }
    }
}
