//! Operator constraints `ω = xy − (φ(x) + yψ(x))` and their classification.
//!
//! Reading `x` as a derivation-like operator `d` and `y` as an operator `Q`,
//! `ω` imposes `dQ = φ(d) + Qψ(d)`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::scalar::{int, join_signed, monomial_text, power_text, Scalar, ScalarPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    phi: ScalarPoly,
    psi: ScalarPoly,
}

impl Constraint {
    pub fn new(phi: ScalarPoly, psi: ScalarPoly) -> Self {
        Self { phi, psi }
    }

    /// Builds from the comma-separated coefficient forms of `φ` and `ψ`.
    pub fn parse(phi: &str, psi: &str) -> Result<Self> {
        Ok(Self::new(phi.parse()?, psi.parse()?))
    }

    /// `ω = xy`.
    pub fn xy() -> Self {
        Self::new(ScalarPoly::zero(), ScalarPoly::zero())
    }

    /// `ω = xy − a₀`; `a₀ = 1` is the fundamental theorem of calculus.
    pub fn xy_minus_const(a0: Scalar) -> Self {
        Self::new(ScalarPoly::constant(a0), ScalarPoly::zero())
    }

    /// `ω = xy − (b₀y + yx)`.
    pub fn xy_minus_b0y_yx(b0: Scalar) -> Self {
        Self::new(ScalarPoly::zero(), ScalarPoly::new(vec![b0, int(1)]))
    }

    pub fn fftc() -> Self {
        Self::xy_minus_const(int(1))
    }

    pub fn commutator() -> Self {
        Self::xy_minus_b0y_yx(int(0))
    }

    pub fn phi(&self) -> &ScalarPoly {
        &self.phi
    }

    pub fn psi(&self) -> &ScalarPoly {
        &self.psi
    }

    /// `deg φ`, if `φ ≠ 0`.
    pub fn r(&self) -> Option<usize> {
        self.phi.degree()
    }

    /// `deg ψ`, if `ψ ≠ 0`.
    pub fn s(&self) -> Option<usize> {
        self.psi.degree()
    }

    pub fn a(&self, i: usize) -> Scalar {
        self.phi.coeff(i)
    }

    pub fn b(&self, j: usize) -> Scalar {
        self.psi.coeff(j)
    }
}

impl fmt::Display for Constraint {
    /// Expanded noncommutative form, e.g. `xy - 1 - 3y - yx^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = vec![(false, "xy".to_string())];
        for (i, c) in self.phi.terms() {
            terms.push((!c.is_negative(), monomial_text(&c.abs(), &power_text("x", i))));
        }
        for (j, c) in self.psi.terms() {
            let var = format!("y{}", power_text("x", j));
            terms.push((!c.is_negative(), monomial_text(&c.abs(), &var)));
        }
        f.write_str(&join_signed(&terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "param")]
pub enum NormalForm {
    /// `xy − a₀`, including `xy` itself at `a₀ = 0`.
    #[serde(rename = "XY_MINUS_CONST")]
    XyMinusConst(#[serde(serialize_with = "ser_scalar")] Scalar),
    /// `xy − (b₀y + yx)`.
    #[serde(rename = "XY_MINUS_B0Y_YX")]
    XyMinusB0yYx(#[serde(serialize_with = "ser_scalar")] Scalar),
    #[serde(rename = "OUTSIDE")]
    Outside,
}

fn ser_scalar<S: serde::Serializer>(c: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub in_omega0: bool,
    pub in_omegak: bool,
    pub normal_form: NormalForm,
}

/// Membership of `ω` in `Ω₀ = {xy − a₀} ∪ {xy − (b₀y + yx)}` and in
/// `Ω_k = {xy, xy − 1, xy − yx}`.
pub fn classify(omega: &Constraint) -> Verdict {
    let phi = omega.phi();
    let psi = omega.psi();
    let normal_form = if psi.is_zero() && phi.degree().unwrap_or(0) == 0 {
        NormalForm::XyMinusConst(phi.coeff(0))
    } else if phi.is_zero() && psi.degree() == Some(1) && psi.coeff(1).is_one() {
        NormalForm::XyMinusB0yYx(psi.coeff(0))
    } else {
        NormalForm::Outside
    };
    let in_omegak = match &normal_form {
        NormalForm::XyMinusConst(a0) => a0.is_zero() || a0.is_one(),
        NormalForm::XyMinusB0yYx(b0) => b0.is_zero(),
        NormalForm::Outside => false,
    };
    Verdict {
        in_omega0: normal_form != NormalForm::Outside,
        in_omegak,
        normal_form,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(phi: &[i64], psi: &[i64]) -> Constraint {
        Constraint::new(ScalarPoly::from_ints(phi), ScalarPoly::from_ints(psi))
    }

    #[test]
    fn classification_examples() {
        let v = classify(&c(&[1], &[]));
        assert!(v.in_omega0 && v.in_omegak);
        let v = classify(&c(&[5], &[]));
        assert!(v.in_omega0 && !v.in_omegak);
        assert_eq!(v.normal_form, NormalForm::XyMinusConst(int(5)));
        let v = classify(&c(&[0, 0, 1], &[]));
        assert!(!v.in_omega0 && !v.in_omegak);
        let v = classify(&c(&[], &[3, 1]));
        assert!(v.in_omega0 && !v.in_omegak);
        assert_eq!(v.normal_form, NormalForm::XyMinusB0yYx(int(3)));
        assert!(classify(&Constraint::xy()).in_omegak);
        assert!(classify(&Constraint::commutator()).in_omegak);
        assert!(!classify(&c(&[], &[0, 2])).in_omega0);
        assert!(!classify(&c(&[1], &[0, 1])).in_omega0);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Constraint::fftc().to_string(), "xy - 1");
        assert_eq!(Constraint::commutator().to_string(), "xy - yx");
        assert_eq!(Constraint::xy().to_string(), "xy");
        assert_eq!(c(&[-2, 0, 1], &[3, 0, -1]).to_string(), "xy + 2 - x^2 - 3y + yx^2");
    }
}
