//! The monad structure maps of `Ш`: unit, multiplication, and the functor
//! action on slots.

use super::{vartheta, FreeRb, FreeRbElement};
use crate::algebra::{Algebra, Based};

/// `μ(U⁰ ⊗ … ⊗ Uᵏ) = U⁰·P_A(U¹·P_A(⋯P_A(Uᵏ)))` for one outer word whose
/// slots are inner words.
pub fn monad_mu_word<A: Based>(
    inner: &FreeRb<A>,
    word: &[Vec<A::Basis>],
) -> FreeRbElement<A::Basis> {
    let (last, rest) = word.split_last().expect("nonempty word");
    let mut acc = inner.basis_element(last);
    for slot in rest.iter().rev() {
        acc = inner.mul(&inner.basis_element(slot), &inner.free_p(&acc));
    }
    acc
}

/// `μ_A : Ш(Ш(A)) → Ш(A)`, extended linearly. This is `ϑ` for `(Ш(A), P_A)`.
pub fn monad_mu<A: Based>(
    inner: &FreeRb<A>,
    u: &FreeRbElement<Vec<A::Basis>>,
) -> FreeRbElement<A::Basis> {
    vartheta(&inner.rota_baxter_operator(), u)
}

/// `η_{Ш(A)}`: every inner word becomes an outer word of length one.
pub fn outer_unit<B: Ord + Clone>(u: &FreeRbElement<B>) -> FreeRbElement<Vec<B>> {
    let mut out = FreeRbElement::zero();
    for (w, c) in u.terms() {
        out.add_term(vec![w.clone()], c.clone());
    }
    out
}

/// `Ш(f)`: applies `f` to every slot and expands the tensor in `target`.
pub fn map_slots<B, T, F>(target: &FreeRb<T>, u: &FreeRbElement<B>, f: F) -> FreeRbElement<T::Basis>
where
    B: Ord + Clone,
    T: Based,
    F: Fn(&B) -> T::Elem,
{
    let mut out = FreeRbElement::zero();
    for (w, c) in u.terms() {
        let slots: Vec<T::Elem> = w.iter().map(&f).collect();
        out.add_scaled(&target.tensor(&slots), c);
    }
    out
}
