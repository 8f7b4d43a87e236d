//! Sparse integer polynomials in the degree-2 class `u`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer polynomial in `u`; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    terms: BTreeMap<u32, BigInt>,
}

impl UPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: u32) -> Self {
        let mut p = UPoly::zero();
        p.add_term(exp, c.into());
        p
    }

    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = UPoly::zero();
        for (e, c) in coeffs {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> UPoly {
        UPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        let mut out = UPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplies by `c * u^shift`.
    pub fn scale_shift(&self, c: &BigInt, shift: u32) -> UPoly {
        let mut out = UPoly::zero();
        for (e, x) in self.terms() {
            out.add_term(e + shift, x * c);
        }
        out
    }

    /// Reduces modulo the principal ideal `(modulus * u^threshold)`: every
    /// coefficient of `u^m` with `m >= threshold` is replaced by its residue
    /// in `[0, modulus)`. The result is the unique such representative.
    pub fn reduce(&self, modulus: &BigUint, threshold: u32) -> UPoly {
        let m = BigInt::from(modulus.clone());
        let mut out = UPoly::zero();
        for (e, c) in self.terms() {
            if e >= threshold {
                out.add_term(e, c.mod_floor(&m));
            } else {
                out.add_term(e, c.clone());
            }
        }
        out
    }

    pub fn is_reduced(&self, modulus: &BigUint, threshold: u32) -> bool {
        self.reduce(modulus, threshold) == *self
    }
}

/// Writes `c u^e` in the compact style `27u^4`, `-u`, `3`.
pub(crate) fn write_term(
    f: &mut impl fmt::Write,
    first: bool,
    c: &BigInt,
    exp: u32,
    tail: &str,
) -> fmt::Result {
    let neg = c.is_negative();
    if first {
        if neg {
            f.write_char('-')?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    let mag = c.abs();
    let mut body = String::new();
    match exp {
        0 => {}
        1 => body.push('u'),
        e => body.push_str(&format!("u^{e}")),
    }
    if !tail.is_empty() {
        if !body.is_empty() {
            body.push(' ');
        }
        body.push_str(tail);
    }
    if body.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(&body)
    } else {
        write!(f, "{mag}{body}")
    }
}

impl fmt::Display for UPoly {
    /// Highest power first: `4u^2 + 3u - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            write_term(f, i == 0, c, e, "")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = UPoly::from_coeffs([(0, 1), (1, 2)]);
        let q = UPoly::from_coeffs([(0, -1), (1, 2)]);
        assert_eq!(p.mul(&q), UPoly::from_coeffs([(0, -1), (2, 4)]));
        assert!(p.add(&p.neg()).is_zero());
        assert_eq!(
            p.scale_shift(&3.into(), 2),
            UPoly::from_coeffs([(2, 3), (3, 6)])
        );
    }

    #[test]
    fn reduction() {
        let two = BigUint::from(2u32);
        assert!(UPoly::monomial(4, 2).reduce(&two, 2).is_zero());
        assert_eq!(UPoly::monomial(3, 2).reduce(&two, 2), UPoly::monomial(1, 2));
        assert_eq!(
            UPoly::monomial(-3, 5).reduce(&two, 2),
            UPoly::monomial(1, 5)
        );
        assert_eq!(UPoly::monomial(7, 1).reduce(&two, 2), UPoly::monomial(7, 1));
        assert!(UPoly::monomial(5, 0).reduce(&BigUint::one(), 0).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(UPoly::zero().to_string(), "0");
        assert_eq!(
            UPoly::from_coeffs([(0, -1), (1, 3), (2, 4)]).to_string(),
            "4u^2 + 3u - 1"
        );
        assert_eq!(UPoly::monomial(-1, 1).to_string(), "-u");
        assert_eq!(UPoly::monomial(27, 4).to_string(), "27u^4");
    }
}
