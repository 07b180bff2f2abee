//! The counterexample recipes: which finite quotient, which `f` and `g`, and
//! the closed-form defect each one must produce.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::constraint::{classify, Constraint, NormalForm};
use crate::divided_power::{DPElement, DividedPower};
use crate::hurwitz::{rb_defect, CoverOperator, Hurwitz, Series};
use crate::error::Result;
use crate::scalar::{int, pow, Scalar};

/// Case labels, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CaseId {
    C1,
    C2S0,
    C2S1,
    C2S2,
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    WA0,
    WB0,
}

impl CaseId {
    pub const ALL: [CaseId; 14] = [
        CaseId::C1,
        CaseId::C2S0,
        CaseId::C2S1,
        CaseId::C2S2,
        CaseId::I,
        CaseId::II,
        CaseId::III,
        CaseId::IV,
        CaseId::V,
        CaseId::VI,
        CaseId::VII,
        CaseId::VIII,
        CaseId::WA0,
        CaseId::WB0,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::C1 => "C1",
            CaseId::C2S0 => "C2-s0",
            CaseId::C2S1 => "C2-s1",
            CaseId::C2S2 => "C2-s2",
            CaseId::I => "i",
            CaseId::II => "ii",
            CaseId::III => "iii",
            CaseId::IV => "iv",
            CaseId::V => "v",
            CaseId::VI => "vi",
            CaseId::VII => "vii",
            CaseId::VIII => "viii",
            CaseId::WA0 => "W-a0",
            CaseId::WB0 => "W-b0",
        }
    }

    /// The weight-λ cases; all others are weight 0.
    pub fn is_weighted(self) -> bool {
        matches!(self, CaseId::WA0 | CaseId::WB0)
    }

    /// Parses one selector: a case id, `C2` (all three C2 cases) or `W`.
    pub fn parse_selector(text: &str) -> Option<Vec<CaseId>> {
        let t = text.trim();
        match t {
            "all" => Some(Self::ALL.to_vec()),
            "C2" => Some(vec![CaseId::C2S0, CaseId::C2S1, CaseId::C2S2]),
            "W" => Some(vec![CaseId::WA0, CaseId::WB0]),
            _ => Self::ALL.iter().copied().find(|c| c.as_str() == t).map(|c| vec![c]),
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finite-support input series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// `(1, 0, 0, …)`.
    Identity,
    /// `f_ℓ = δ_{ℓ,index} z̄_basis`.
    Delta { index: usize, basis: usize },
}

impl Recipe {
    pub fn build(self, ring: &Hurwitz<DividedPower>) -> Series<DividedPower> {
        match self {
            Recipe::Identity => Series::one(ring),
            Recipe::Delta { index, basis } => Series::delta(ring, index, ring.base().z(basis)),
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Identity => write!(f, "1"),
            Recipe::Delta { index, basis } => write!(f, "δ{index}·z{basis}"),
        }
    }
}

/// Which side is subtracted from which in the closed form.
///
/// Most closed forms are written as operator side minus product side, the
/// negative of [`rb_defect`]; a few are written the other way round.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    ProductMinusOperator,
    OperatorMinusProduct,
}

/// One instantiated counterexample.
#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub id: CaseId,
    /// Subcase note, e.g. which branch of (iv) or (vi) was taken.
    pub detail: String,
    pub constraint: Constraint,
    pub weight: Scalar,
    pub modulus: usize,
    pub index: usize,
    pub f: Recipe,
    pub g: Recipe,
    pub orientation: Orientation,
    /// The closed form with the case's symbols, for display.
    pub formula: &'static str,
    pub expected: DPElement,
}

impl CaseSpec {
    /// The computed defect in this case's orientation.
    pub fn compute(&self) -> Result<DPElement> {
        let base = DividedPower::quotient(self.modulus, self.weight.clone());
        let ring = Hurwitz::new(base.clone(), self.weight.clone());
        let cover = CoverOperator::new(
            base.rota_baxter_operator(),
            self.constraint.clone(),
            self.weight.clone(),
        );
        let d = rb_defect(&cover, &self.f.build(&ring), &self.g.build(&ring), self.index)?;
        Ok(match self.orientation {
            Orientation::ProductMinusOperator => d,
            Orientation::OperatorMinusProduct => d.scale(&int(-1)),
        })
    }
}

fn sq(x: &Scalar) -> Scalar {
    x * x
}

#[allow(clippy::too_many_arguments)]
fn spec(
    id: CaseId,
    detail: impl Into<String>,
    omega: &Constraint,
    weight: Scalar,
    modulus: usize,
    f: Recipe,
    g: Recipe,
    orientation: Orientation,
    formula: &'static str,
    coeff: Scalar,
    basis: usize,
) -> CaseSpec {
    CaseSpec {
        id,
        detail: detail.into(),
        constraint: omega.clone(),
        weight,
        modulus,
        index: 1,
        f,
        g,
        orientation,
        formula,
        expected: DPElement::term(Some(modulus), basis, coeff),
    }
}

fn delta0(index: usize) -> Recipe {
    Recipe::Delta { index, basis: 0 }
}

/// Why no counterexample applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skip {
    pub reason: String,
}

/// The weight-0 counterexample for ω, or the reason there is none.
pub fn dispatch_weight_zero(omega: &Constraint) -> std::result::Result<CaseSpec, Skip> {
    use Orientation::*;
    if classify(omega).in_omega0 {
        return Err(Skip {
            reason: format!("{omega} lies in Ω₀; covers stay Rota-Baxter at weight 0"),
        });
    }
    let w = Scalar::zero();
    let one = Recipe::Identity;
    match (omega.r(), omega.s()) {
        (None, None) => unreachable!("xy lies in Ω₀"),
        (Some(r), None) => {
            let ar = omega.a(r);
            Ok(spec(CaseId::C1, format!("r={r}"), omega, w, 2, delta0(2 * r - 1), one,
                OperatorMinusProduct, "a_r^2·z0", sq(&ar), 0))
        }
        (None, Some(s)) => {
            let b = omega.b(s);
            match s {
                0 => Ok(spec(CaseId::C2S0, "s=0", omega, w, 3, one, one,
                    ProductMinusOperator, "2b0·z2", int(2) * &b, 2)),
                1 => Ok(spec(CaseId::C2S1, "s=1, b1≠1", omega, w, 3, delta0(1), one,
                    OperatorMinusProduct, "b1(b1-1)·z2", &b * (&b - int(1)), 2)),
                _ => Ok(spec(CaseId::C2S2, format!("s={s}"), omega, w, 3, delta0(s * s), one,
                    OperatorMinusProduct, "b_s^(s+1)·z2", pow(&b, s + 1), 2)),
            }
        }
        (Some(r), Some(s)) => Ok(dispatch_mixed(omega, r, s)),
    }
}

/// Cases (i) to (viii): both φ and ψ nonzero.
fn dispatch_mixed(omega: &Constraint, r: usize, s: usize) -> CaseSpec {
    use Orientation::OperatorMinusProduct as Op;
    let w = Scalar::zero();
    let one = Recipe::Identity;
    let ar = omega.a(r);
    let bs = omega.b(s);
    let rs = format!("r={r}, s={s}");
    if s > 1 {
        if r > s {
            spec(CaseId::I, rs, omega, w, 1, delta0(r + (r - 1) * s), one, Op,
                "a_r^2·b_s^(r-1)·z0", sq(&ar) * pow(&bs, r - 1), 0)
        } else if r == s {
            spec(CaseId::II, rs, omega, w, 2, Recipe::Delta { index: s * s, basis: 1 }, one, Op,
                "a_r^2·b_s^(s-1)·z1", sq(&ar) * pow(&bs, s - 1), 1)
        } else {
            spec(CaseId::III, rs, omega, w, 3, delta0(s * s), one, Op,
                "b_s^(s+1)·z2", pow(&bs, s + 1), 2)
        }
    } else if s == 1 {
        let b1 = bs;
        match r {
            0 => {
                if b1 != Scalar::one() {
                    spec(CaseId::VI, format!("{rs}, b1≠1"), omega, w, 3, delta0(1), one, Op,
                        "b1(b1-1)·z2", &b1 * (&b1 - int(1)), 2)
                } else {
                    spec(CaseId::VI, format!("{rs}, b1=1"), omega, w, 3, one, one, Op,
                        "2a0·z1", int(2) * omega.a(0), 1)
                }
            }
            1 => spec(CaseId::V, rs, omega, w, 1, delta0(1), one, Op, "a1^2·z0", sq(&ar), 0),
            _ => {
                let geometric: Scalar = (0..r).map(|k| pow(&b1, k)).sum();
                if !geometric.is_zero() {
                    spec(CaseId::IV, format!("{rs}, Σb1^k≠0"), omega, w, 1, delta0(2 * r - 1),
                        one, Op, "a_r^2·(Σ_{k<r} b1^k)·z0", sq(&ar) * geometric, 0)
                } else {
                    spec(CaseId::IV, format!("{rs}, Σb1^k=0"), omega, w, 1, delta0(2 * (r - 1)),
                        delta0(1), Op, "-r·a_r^2·b1^(r-1)·z0",
                        -(int(r as i64) * sq(&ar) * pow(&b1, r - 1)), 0)
                }
            }
        }
    } else if r >= 1 {
        spec(CaseId::VII, rs, omega, w, 1, delta0(2 * r - 1), one, Op, "a_r^2·z0", sq(&ar), 0)
    } else {
        spec(CaseId::VIII, rs, omega, w, 3, one, one, Op, "-2b0·z2", -(int(2) * bs), 2)
    }
}

/// The weight-λ recipe for a member of Ω₀, or the reason there is none.
pub fn dispatch_weighted(omega: &Constraint, weight: &Scalar) -> std::result::Result<CaseSpec, Skip> {
    use Orientation::ProductMinusOperator as Pm;
    if weight.is_zero() {
        return Err(Skip {
            reason: "the weight-λ recipes need λ ≠ 0".into(),
        });
    }
    let one = Recipe::Identity;
    match classify(omega).normal_form {
        NormalForm::XyMinusConst(a0) => Ok(spec(CaseId::WA0, "", omega, weight.clone(), 1, one,
            one, Pm, "λ·a0(a0-1)·z0", weight * &a0 * (&a0 - int(1)), 0)),
        NormalForm::XyMinusB0yYx(b0) => Ok(spec(CaseId::WB0, "", omega, weight.clone(), 2,
            delta0(1), one, Pm, "λ^2·b0·z1", sq(weight) * b0, 1)),
        NormalForm::Outside => Err(Skip {
            reason: format!("{omega} lies outside Ω₀; the weight-0 recipes apply"),
        }),
    }
}
