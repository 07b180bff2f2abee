//! Exact rational scalars and univariate scalar polynomials.
//!
//! The base ring is fixed to the rationals. Every operation here is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{parse_error, Result};

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    if t.is_empty() {
        return Err(parse_error("rational", text, "empty input"));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|e| parse_error("rational", text, e.to_string()))?;
    let den = BigInt::from_str(den).map_err(|e| parse_error("rational", text, e.to_string()))?;
    if den.is_zero() {
        return Err(parse_error("rational", text, "zero denominator"));
    }
    Ok(Scalar::new(num, den))
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

pub fn binomial_scalar(n: usize, k: usize) -> Scalar {
    Scalar::from_integer(binomial(n, k))
}

pub fn pow(base: &Scalar, exp: usize) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// A univariate polynomial over the rationals, coefficients low to high.
///
/// Trailing zeros are stripped on construction, so a nonzero polynomial
/// always has a nonzero leading coefficient and the zero polynomial is the
/// empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ScalarPoly {
    coeffs: Vec<Scalar>,
}

impl ScalarPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().copied().map(int).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Nonzero terms as `(power, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// The comma-separated coefficient form accepted by [`FromStr`].
    pub fn to_coeff_string(&self) -> String {
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromStr for ScalarPoly {
    type Err = crate::error::Error;

    /// Comma-separated rational coefficients, low to high. `""` is zero.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Self::zero());
        }
        let coeffs = t
            .split(',')
            .map(|c| parse_scalar(c).map_err(|_| parse_error("polynomial", s, format!("bad coefficient {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

pub(crate) fn monomial_text(c: &Scalar, var: &str) -> String {
    if var.is_empty() {
        c.to_string()
    } else if c.is_one() {
        var.to_string()
    } else if (-c.clone()).is_one() {
        format!("-{var}")
    } else if c.is_integer() {
        format!("{c}{var}")
    } else {
        format!("({c}){var}")
    }
}

pub(crate) fn power_text(var: &str, i: usize) -> String {
    match i {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{i}"),
    }
}

/// Joins signed terms as `a + b - c`.
pub(crate) fn join_signed(terms: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (idx, (negative, body)) in terms.iter().enumerate() {
        match (idx, negative) {
            (0, false) => out.push_str(body),
            (0, true) => {
                out.push('-');
                out.push_str(body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(body);
            }
        }
    }
    out
}

impl fmt::Display for ScalarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<(bool, String)> = self
            .terms()
            .map(|(i, c)| (c.is_negative(), monomial_text(&c.abs(), &power_text("x", i))))
            .collect();
        f.write_str(&join_signed(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_examples() {
        assert_eq!(ScalarPoly::zero().degree(), None);
        assert_eq!(ScalarPoly::from_ints(&[5]).degree(), Some(0));
        assert_eq!(ScalarPoly::from_ints(&[1, 0, 1]).degree(), Some(2));
        assert_eq!(ScalarPoly::from_ints(&[0, 0, 0]).degree(), None);
        assert_eq!(ScalarPoly::from_ints(&[3, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn parse_polynomials() {
        assert_eq!("0,1".parse::<ScalarPoly>().unwrap(), ScalarPoly::from_ints(&[0, 1]));
        assert_eq!("1".parse::<ScalarPoly>().unwrap(), ScalarPoly::from_ints(&[1]));
        assert!("".parse::<ScalarPoly>().unwrap().is_zero());
        assert_eq!(
            "1/2, -3/4,0".parse::<ScalarPoly>().unwrap(),
            ScalarPoly::new(vec![ratio(1, 2), ratio(-3, 4)])
        );
        assert!("1,x".parse::<ScalarPoly>().is_err());
        assert!("1/0".parse::<ScalarPoly>().is_err());
    }

    #[test]
    fn scalars_are_normalized() {
        let q = parse_scalar("6/-4").unwrap();
        assert_eq!(q, ratio(-3, 2));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(parse_scalar(" 7 ").unwrap(), int(7));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(60, 30), BigInt::from(118264581564861424u64));
    }

    #[test]
    fn display() {
        assert_eq!(ScalarPoly::from_ints(&[1, 0, -2, 1]).to_string(), "1 - 2x^2 + x^3");
        assert_eq!(ScalarPoly::new(vec![ratio(3, 5)]).to_string(), "3/5");
        assert_eq!(ScalarPoly::from_ints(&[0, -1]).to_string(), "-x");
    }
}
