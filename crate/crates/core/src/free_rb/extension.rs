//! The extension `q̃` of a carrier operator to `Ш(R)` induced by ω.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{FreeRb, FreeRbElement};
use crate::algebra::{Algebra, Based, LinearOperator};
use crate::constraint::Constraint;
use crate::error::{Error, Result};

type WordMemo<B> = HashMap<Vec<B>, FreeRbElement<B>>;

/// `q̃(u₀ ⊗ u′) = q(u₀) ⊗ u′ + (u₀ + λq(u₀))·(φ(q̃) + P_R ψ(q̃))(u′)` with
/// `q̃|_R = q`. Results are memoized per word and shared between clones.
#[derive(Clone)]
pub struct Extension<A: Based> {
    ring: FreeRb<A>,
    q: LinearOperator<A>,
    constraint: Constraint,
    memo: Arc<Mutex<WordMemo<A::Basis>>>,
}

impl<A: Based> std::fmt::Debug for Extension<A> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Extension({} for {} on {})", self.q.name(), self.constraint, self.ring.describe())
    }
}

impl<A: Based> Extension<A> {
    /// Fails unless `q(1) = 0`.
    pub fn new(ring: FreeRb<A>, q: LinearOperator<A>, constraint: Constraint) -> Result<Self> {
        let base = ring.base();
        if q.carrier() != base {
            return Err(Error::CarrierMismatch(format!(
                "{} acts on {}, not {}",
                q.name(),
                q.carrier().describe(),
                base.describe()
            )));
        }
        let at_one = q.apply(&base.one());
        if !base.is_zero(&at_one) {
            return Err(Error::IdentityNotAnnihilated(base.render(&at_one)));
        }
        Ok(Self {
            ring,
            q,
            constraint,
            memo: Arc::new(Mutex::new(HashMap::new())),
        })
    }

    pub fn ring(&self) -> &FreeRb<A> {
        &self.ring
    }

    pub fn apply(&self, u: &FreeRbElement<A::Basis>) -> FreeRbElement<A::Basis> {
        let mut out = FreeRbElement::zero();
        for (w, c) in u.terms() {
            out.add_scaled(&self.apply_word(w), c);
        }
        out
    }

    fn apply_word(&self, word: &[A::Basis]) -> FreeRbElement<A::Basis> {
        if let Some(v) = self.memo.lock().expect("extension memo").get(word) {
            return v.clone();
        }
        let ring = &self.ring;
        let base = ring.base();
        let u0 = base.basis_element(&word[0]);
        let qu0 = self.q.apply(&u0);
        let value = if word.len() == 1 {
            ring.unit_embed(&qu0)
        } else {
            let tail_word = word[1..].to_vec();
            let tail = ring.basis_element(&tail_word);
            let mut head = FreeRbElement::zero();
            for (b, c) in base.decompose(&qu0) {
                let mut w = tail_word.clone();
                w.insert(0, b);
                head.add_term(w, c);
            }
            let phi = self.constraint.phi();
            let psi = self.constraint.psi();
            let top = phi.degree().max(psi.degree()).unwrap_or(0);
            let mut powers = vec![tail];
            for k in 1..=top {
                let next = self.apply(&powers[k - 1]);
                powers.push(next);
            }
            let mut phi_part = FreeRbElement::zero();
            for (i, a) in phi.terms() {
                phi_part.add_scaled(&powers[i], a);
            }
            let mut psi_part = FreeRbElement::zero();
            for (j, b) in psi.terms() {
                psi_part.add_scaled(&powers[j], b);
            }
            let inner = phi_part.plus(&ring.free_p(&psi_part));
            let coef = base.add(&u0, &base.scale(ring.weight(), &qu0));
            head.plus(&ring.act(&coef, &inner))
        };
        self.memo
            .lock()
            .expect("extension memo")
            .entry(word.to_vec())
            .or_insert(value)
            .clone()
    }

    pub fn as_operator(&self) -> LinearOperator<FreeRb<A>> {
        let me = self.clone();
        LinearOperator::new(self.ring.clone(), format!("{}~", self.q.name()), move |u| {
            me.apply(u)
        })
    }
}
