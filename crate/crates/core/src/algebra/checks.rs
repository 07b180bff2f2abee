use super::{Algebra, LinearOperator};
use crate::constraint::Constraint;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The sampled input that broke an identity, with the nonzero left-minus-right
/// value.
#[derive(Clone, Debug)]
pub struct Witness<E> {
    pub sample_index: usize,
    pub inputs: Vec<E>,
    pub defect: E,
}

#[derive(Clone, Debug)]
pub enum CheckOutcome<E> {
    Pass { checked: usize },
    Fail(Witness<E>),
}

impl<E> CheckOutcome<E> {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass { .. })
    }

    pub fn witness(&self) -> Option<&Witness<E>> {
        match self {
            CheckOutcome::Pass { .. } => None,
            CheckOutcome::Fail(w) => Some(w),
        }
    }
}

fn ensure_members<A: Algebra>(carrier: &A, items: &[&A::Elem]) -> Result<()> {
    for item in items {
        if !carrier.contains(item) {
            return Err(Error::CarrierMismatch(format!(
                "sample {item:?} is not an element of {}",
                carrier.describe()
            )));
        }
    }
    Ok(())
}

fn ensure_same_carrier<A: Algebra>(a: &LinearOperator<A>, b: &LinearOperator<A>) -> Result<()> {
    if a.carrier() != b.carrier() {
        return Err(Error::CarrierMismatch(format!(
            "{} acts on {} but {} acts on {}",
            a.name(),
            a.carrier().describe(),
            b.name(),
            b.carrier().describe()
        )));
    }
    Ok(())
}

/// Checks `P(u)P(v) = P(P(u)v) + P(uP(v)) + λP(uv)` on every sampled pair.
pub fn check_rb_axiom<A: Algebra>(
    p: &LinearOperator<A>,
    weight: &Scalar,
    samples: &[(A::Elem, A::Elem)],
) -> Result<CheckOutcome<A::Elem>> {
    let alg = p.carrier();
    for (idx, (u, v)) in samples.iter().enumerate() {
        ensure_members(alg, &[u, v])?;
        let pu = p.apply(u);
        let pv = p.apply(v);
        let lhs = alg.mul(&pu, &pv);
        let rhs = alg.sum([
            p.apply(&alg.mul(&pu, v)),
            p.apply(&alg.mul(u, &pv)),
            alg.scale(weight, &p.apply(&alg.mul(u, v))),
        ]);
        let defect = alg.sub(&lhs, &rhs);
        if !alg.is_zero(&defect) {
            return Ok(CheckOutcome::Fail(Witness {
                sample_index: idx,
                inputs: vec![u.clone(), v.clone()],
                defect,
            }));
        }
    }
    Ok(CheckOutcome::Pass {
        checked: samples.len(),
    })
}

/// Checks `d(1) = 0` and `d(uv) = d(u)v + ud(v) + λd(u)d(v)` on every pair.
///
/// A failure at `d(1)` is reported with `sample_index == usize::MAX`.
pub fn check_diff_axiom<A: Algebra>(
    d: &LinearOperator<A>,
    weight: &Scalar,
    samples: &[(A::Elem, A::Elem)],
) -> Result<CheckOutcome<A::Elem>> {
    let alg = d.carrier();
    let one = alg.one();
    let d_one = d.apply(&one);
    if !alg.is_zero(&d_one) {
        return Ok(CheckOutcome::Fail(Witness {
            sample_index: usize::MAX,
            inputs: vec![one],
            defect: d_one,
        }));
    }
    for (idx, (u, v)) in samples.iter().enumerate() {
        ensure_members(alg, &[u, v])?;
        let du = d.apply(u);
        let dv = d.apply(v);
        let lhs = d.apply(&alg.mul(u, v));
        let rhs = alg.sum([
            alg.mul(&du, v),
            alg.mul(u, &dv),
            alg.scale(weight, &alg.mul(&du, &dv)),
        ]);
        let defect = alg.sub(&lhs, &rhs);
        if !alg.is_zero(&defect) {
            return Ok(CheckOutcome::Fail(Witness {
                sample_index: idx,
                inputs: vec![u.clone(), v.clone()],
                defect,
            }));
        }
    }
    Ok(CheckOutcome::Pass {
        checked: samples.len(),
    })
}

/// Checks the type-ω relation `(d∘Q)(u) = φ(d)(u) + (Q∘ψ(d))(u)`.
pub fn check_omega_relation<A: Algebra>(
    d: &LinearOperator<A>,
    q: &LinearOperator<A>,
    omega: &Constraint,
    samples: &[A::Elem],
) -> Result<CheckOutcome<A::Elem>> {
    ensure_same_carrier(d, q)?;
    let alg = d.carrier();
    for (idx, u) in samples.iter().enumerate() {
        ensure_members(alg, &[u])?;
        let lhs = d.apply(&q.apply(u));
        let rhs = alg.add(
            &d.apply_poly(omega.phi(), u),
            &q.apply(&d.apply_poly(omega.psi(), u)),
        );
        let defect = alg.sub(&lhs, &rhs);
        if !alg.is_zero(&defect) {
            return Ok(CheckOutcome::Fail(Witness {
                sample_index: idx,
                inputs: vec![u.clone()],
                defect,
            }));
        }
    }
    Ok(CheckOutcome::Pass {
        checked: samples.len(),
    })
}

/// Checks `op(u + c·v) = op(u) + c·op(v)` on sampled pairs.
pub fn check_additivity<A: Algebra>(
    op: &LinearOperator<A>,
    c: &Scalar,
    samples: &[(A::Elem, A::Elem)],
) -> Result<CheckOutcome<A::Elem>> {
    let alg = op.carrier();
    for (idx, (u, v)) in samples.iter().enumerate() {
        ensure_members(alg, &[u, v])?;
        let lhs = op.apply(&alg.add(u, &alg.scale(c, v)));
        let rhs = alg.add(&op.apply(u), &alg.scale(c, &op.apply(v)));
        let defect = alg.sub(&lhs, &rhs);
        if !alg.is_zero(&defect) {
            return Ok(CheckOutcome::Fail(Witness {
                sample_index: idx,
                inputs: vec![u.clone(), v.clone()],
                defect,
            }));
        }
    }
    Ok(CheckOutcome::Pass {
        checked: samples.len(),
    })
}
