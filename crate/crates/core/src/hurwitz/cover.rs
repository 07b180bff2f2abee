//! Covers `Q̃` of a carrier operator `Q` induced by a constraint ω.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::One;

use super::{Hurwitz, Kind, Series};
use crate::algebra::{Algebra, CheckOutcome, LinearOperator, Witness};
use crate::constraint::Constraint;
use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// The cover of `base` for ω at weight λ. Applying it to a series yields a
/// lazy series with `Q̃(f)₀ = Q(f₀)` and `∂Q̃ = φ(∂) + Q̃ψ(∂)`.
#[derive(Clone, Debug)]
pub struct CoverOperator<A: Algebra> {
    base: LinearOperator<A>,
    constraint: Constraint,
    weight: Scalar,
}

impl<A: Algebra> CoverOperator<A> {
    pub fn new(base: LinearOperator<A>, constraint: Constraint, weight: Scalar) -> Self {
        Self {
            base,
            constraint,
            weight,
        }
    }

    pub fn base(&self) -> &LinearOperator<A> {
        &self.base
    }

    pub fn constraint(&self) -> &Constraint {
        &self.constraint
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    /// The series ring this cover acts on.
    pub fn ring(&self) -> Hurwitz<A> {
        Hurwitz::new(self.base.carrier().clone(), self.weight.clone())
    }

    pub fn apply(&self, f: &Series<A>) -> Result<Series<A>> {
        let ring = f.ring();
        if ring.weight() != &self.weight {
            return Err(Error::WeightMismatch {
                expected: self.weight.to_string(),
                got: ring.weight().to_string(),
            });
        }
        if ring.base() != self.base.carrier() {
            return Err(Error::CarrierMismatch(format!(
                "cover of {} applied to a series over {}",
                self.base.name(),
                ring.base().describe()
            )));
        }
        let node = CoverNode {
            cover: self.clone(),
            arg: f.clone(),
            table: Mutex::new(HashMap::new()),
        };
        Ok(Series::from_kind(ring, Kind::Cover(node)))
    }

    /// `Q̃` as an operator on `ring`, for the generic checkers.
    pub fn as_operator(&self, ring: &Hurwitz<A>) -> LinearOperator<Hurwitz<A>> {
        let cover = self.clone();
        LinearOperator::new(ring.clone(), format!("{}~", self.base.name()), move |f| {
            cover.apply(f).expect("series over the cover's ring")
        })
    }
}

pub(super) struct CoverNode<A: Algebra> {
    cover: CoverOperator<A>,
    arg: Series<A>,
    table: Mutex<HashMap<(usize, usize), A::Elem>>,
}

impl<A: Algebra> CoverNode<A> {
    /// `Q̃_n(∂ᵗ f)`, via `Q̃_0(∂ᵗf) = Q(f_t)` and
    /// `Q̃_n(∂ᵗf) = Σ aᵢ f_{t+n−1+i} + Σ b_j Q̃_{n−1}(∂^{t+j} f)`.
    pub(super) fn value(&self, t: usize, n: usize) -> A::Elem {
        if let Some(v) = self.table.lock().expect("cover memo").get(&(t, n)) {
            return v.clone();
        }
        let base = self.cover.base.carrier();
        let omega = &self.cover.constraint;
        let value = if n == 0 {
            self.cover.base.apply(&self.arg.component(t))
        } else {
            let mut terms = Vec::new();
            for (i, a) in omega.phi().terms() {
                terms.push(base.scale(a, &self.arg.component(t + n - 1 + i)));
            }
            for (j, b) in omega.psi().terms() {
                terms.push(base.scale(b, &self.value(t + j, n - 1)));
            }
            base.sum(terms)
        };
        self.table
            .lock()
            .expect("cover memo")
            .entry((t, n))
            .or_insert(value)
            .clone()
    }
}

/// The largest argument index that `Q̃_n` reads.
pub fn required_input_order(omega: &Constraint, n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let from_phi = omega.r().map(|r| n - 1 + r);
    match omega.s() {
        Some(s) => {
            let from_psi = required_input_order(omega, n - 1) + s;
            from_phi.map_or(from_psi, |p| p.max(from_psi))
        }
        None => from_phi.unwrap_or(0),
    }
}

/// `Q̃(f)_n`.
pub fn cover_component<A: Algebra>(
    cover: &CoverOperator<A>,
    f: &Series<A>,
    n: usize,
) -> Result<A::Elem> {
    Ok(cover.apply(f)?.component(n))
}

/// `Q̃(f)Q̃(g) − Q̃(Q̃(f)g) − Q̃(fQ̃(g)) − λQ̃(fg)` as a lazy series.
pub fn rb_defect_series<A: Algebra>(
    cover: &CoverOperator<A>,
    f: &Series<A>,
    g: &Series<A>,
) -> Result<Series<A>> {
    let qf = cover.apply(f)?;
    let qg = cover.apply(g)?;
    let lhs = qf.try_mul(&qg)?;
    let t1 = cover.apply(&qf.try_mul(g)?)?;
    let t2 = cover.apply(&f.try_mul(&qg)?)?;
    let t3 = cover.apply(&f.try_mul(g)?)?;
    let minus_one = int(-1);
    Series::combination(
        f.ring(),
        vec![
            (Scalar::one(), lhs),
            (minus_one.clone(), t1),
            (minus_one, t2),
            (-cover.weight.clone(), t3),
        ],
    )
}

/// The left-minus-right value of the Rota-Baxter identity for `Q̃` at index `n`.
pub fn rb_defect<A: Algebra>(
    cover: &CoverOperator<A>,
    f: &Series<A>,
    g: &Series<A>,
    n: usize,
) -> Result<A::Elem> {
    Ok(rb_defect_series(cover, f, g)?.component(n))
}

/// Re-derives `Q̃(f)_{n+1} = Σ aᵢ f_{n+i} + Σ b_j Q̃(∂ʲf)_n` for `n < order`.
pub fn check_cover_relation<A: Algebra>(
    cover: &CoverOperator<A>,
    f: &Series<A>,
    order: usize,
) -> Result<CheckOutcome<A::Elem>> {
    let applied = cover.apply(f)?;
    check_cover_relation_of(cover, &applied, f, order)
}

/// As [`check_cover_relation`], but against an already applied series, which
/// may come from some other construction.
pub fn check_cover_relation_of<A: Algebra>(
    cover: &CoverOperator<A>,
    applied: &Series<A>,
    f: &Series<A>,
    order: usize,
) -> Result<CheckOutcome<A::Elem>> {
    let base = cover.base.carrier();
    let omega = &cover.constraint;
    let shifted: Vec<(Scalar, Series<A>)> = omega
        .psi()
        .terms()
        .map(|(j, b)| Ok((b.clone(), cover.apply(&f.shift(j))?)))
        .collect::<Result<_>>()?;
    let lhs = applied.component(0);
    let rhs = cover.base.apply(&f.component(0));
    if !base.elem_eq(&lhs, &rhs) {
        return Ok(CheckOutcome::Fail(Witness {
            sample_index: 0,
            defect: base.sub(&lhs, &rhs),
            inputs: vec![lhs, rhs],
        }));
    }
    for n in 0..order {
        let lhs = applied.component(n + 1);
        let rhs = base.sum(
            omega
                .phi()
                .terms()
                .map(|(i, a)| base.scale(a, &f.component(n + i)))
                .chain(shifted.iter().map(|(b, s)| base.scale(b, &s.component(n)))),
        );
        let defect = base.sub(&lhs, &rhs);
        if !base.is_zero(&defect) {
            return Ok(CheckOutcome::Fail(Witness {
                sample_index: n + 1,
                inputs: vec![lhs, rhs],
                defect,
            }));
        }
    }
    Ok(CheckOutcome::Pass { checked: order + 1 })
}
