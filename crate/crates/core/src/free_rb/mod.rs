//! The free Rota-Baxter algebra `Ш(A)` on a carrier with a basis.
//!
//! Words are stored over basis labels of the carrier, so a pure tensor
//! `a₀ ⊗ … ⊗ a_n` of arbitrary elements is expanded multilinearly and every
//! element has one canonical coefficient map.

mod extension;
mod monad;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use crate::algebra::{sample_nonzero_coeff, Algebra, Based, LinearOperator, Sample, SampleBasis};
use crate::error::{Error, Result};
use crate::scalar::{join_signed, Scalar};

pub use extension::Extension;
pub use monad::{map_slots, monad_mu, monad_mu_word, outer_unit};

/// Default caps for sampled elements: at most 4 words of length at most 3.
pub const SAMPLE_MAX_WORDS: usize = 4;
pub const SAMPLE_MAX_LENGTH: usize = 3;

/// A finite linear combination of tensor words over basis labels `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeRbElement<B: Ord> {
    terms: BTreeMap<Vec<B>, Scalar>,
}

impl<B: Ord + Clone> FreeRbElement<B> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// `c·(word)`. Empty words are not elements and are rejected by
    /// [`FreeRbElement::from_terms`]; here they panic.
    pub fn word(word: Vec<B>, c: Scalar) -> Self {
        assert!(!word.is_empty(), "tensor words are nonempty");
        let mut out = Self::zero();
        out.add_term(word, c);
        out
    }

    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<B>, Scalar)>,
    {
        let mut out = Self::zero();
        for (w, c) in terms {
            if w.is_empty() {
                return Err(Error::InvalidArgument("empty tensor word".into()));
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, word: Vec<B>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        for (w, v) in &other.terms {
            self.add_term(w.clone(), c * v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<B>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[B]) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The largest word length, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }
}

/// `Ш(A)` with the weight-λ mixable shuffle product.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeRb<A: Based> {
    base: A,
    weight: Scalar,
}

type Terms<B> = FreeRbElement<B>;

impl<A: Based> FreeRb<A> {
    pub fn new(base: A, weight: Scalar) -> Self {
        Self { base, weight }
    }

    pub fn base(&self) -> &A {
        &self.base
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    /// `j_A(a)`: the degree-1 words of `a`.
    pub fn unit_embed(&self, a: &A::Elem) -> FreeRbElement<A::Basis> {
        let mut out = FreeRbElement::zero();
        for (b, c) in self.base.decompose(a) {
            out.add_term(vec![b], c);
        }
        out
    }

    /// `a₀ ⊗ a₁ ⊗ …` for arbitrary carrier elements, expanded over the basis.
    pub fn tensor(&self, slots: &[A::Elem]) -> FreeRbElement<A::Basis> {
        assert!(!slots.is_empty(), "tensor words are nonempty");
        let mut acc: Vec<(Vec<A::Basis>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for slot in slots {
            let parts = self.base.decompose(slot);
            let mut next = Vec::with_capacity(acc.len() * parts.len());
            for (w, c) in &acc {
                for (b, cb) in &parts {
                    let mut w2 = w.clone();
                    w2.push(b.clone());
                    next.push((w2, c * cb));
                }
            }
            acc = next;
        }
        FreeRbElement::from_terms(acc).expect("nonempty words")
    }

    fn basis_mul(&self, x: &A::Basis, y: &A::Basis) -> Vec<(A::Basis, Scalar)> {
        let product = self
            .base
            .mul(&self.base.basis_element(x), &self.base.basis_element(y));
        self.base.decompose(&product)
    }

    /// The weight-λ quasi-shuffle of two tails; the empty word is allowed here.
    fn shuffle(&self, x: &[A::Basis], y: &[A::Basis]) -> Terms<A::Basis> {
        let mut out = FreeRbElement::zero();
        if x.is_empty() || y.is_empty() {
            out.terms.insert([x, y].concat(), Scalar::one());
            return out;
        }
        for (w, c) in self.shuffle(&x[1..], y).terms {
            out.add_term(prepend(&x[0], w), c);
        }
        for (w, c) in self.shuffle(x, &y[1..]).terms {
            out.add_term(prepend(&y[0], w), c);
        }
        if !self.weight.is_zero() {
            let tails = self.shuffle(&x[1..], &y[1..]);
            for (b, cb) in self.basis_mul(&x[0], &y[0]) {
                let k = &self.weight * cb;
                for (w, c) in &tails.terms {
                    out.add_term(prepend(&b, w.clone()), &k * c);
                }
            }
        }
        out
    }

    fn word_mul(&self, x: &[A::Basis], y: &[A::Basis]) -> Terms<A::Basis> {
        let tails = self.shuffle(&x[1..], &y[1..]);
        let mut out = FreeRbElement::zero();
        for (b, cb) in self.basis_mul(&x[0], &y[0]) {
            for (w, c) in &tails.terms {
                out.add_term(prepend(&b, w.clone()), &cb * c);
            }
        }
        out
    }

    /// Left action of a carrier element: `r·(w₀ ⊗ w′) = (r w₀) ⊗ w′`.
    pub fn act(&self, r: &A::Elem, u: &FreeRbElement<A::Basis>) -> FreeRbElement<A::Basis> {
        self.mul(&self.unit_embed(r), u)
    }

    /// `P_A` prepends `1_A` to every word.
    pub fn free_p(&self, u: &FreeRbElement<A::Basis>) -> FreeRbElement<A::Basis> {
        let one = self.base.decompose(&self.base.one());
        let mut out = FreeRbElement::zero();
        for (w, c) in &u.terms {
            for (b, cb) in &one {
                out.add_term(prepend(b, w.clone()), c * cb);
            }
        }
        out
    }

    pub fn rota_baxter_operator(&self) -> LinearOperator<Self> {
        let me = self.clone();
        LinearOperator::new(self.clone(), "P_A", move |u| me.free_p(u))
    }

    /// Random element with at most `max_words` words of length at most `max_len`.
    pub fn sample_with(
        &self,
        rng: &mut dyn RngCore,
        max_words: usize,
        max_len: usize,
    ) -> FreeRbElement<A::Basis>
    where
        A: SampleBasis,
    {
        let mut out = FreeRbElement::zero();
        let count = rng.gen_range(1..=max_words);
        for _ in 0..count {
            let len = rng.gen_range(1..=max_len);
            let word = (0..len).map(|_| self.base.sample_basis(rng)).collect();
            out.add_term(word, sample_nonzero_coeff(rng));
        }
        out
    }
}

fn prepend<B: Clone>(head: &B, mut tail: Vec<B>) -> Vec<B> {
    tail.insert(0, head.clone());
    tail
}

/// `ϑ(v₀ ⊗ … ⊗ v_m) = v₀ P(v₁ P(⋯ P(v_m)))`, extended linearly.
pub fn vartheta<A: Based>(p: &LinearOperator<A>, u: &FreeRbElement<A::Basis>) -> A::Elem {
    let base = p.carrier();
    base.sum(u.terms().map(|(word, c)| {
        let mut acc = base.basis_element(word.last().expect("nonempty word"));
        for b in word[..word.len() - 1].iter().rev() {
            acc = base.mul(&base.basis_element(b), &p.apply(&acc));
        }
        base.scale(c, &acc)
    }))
}

/// The product `u·v` in `Ш(A)`; errors if the two rings differ.
pub fn mix_shuffle_mul<A: Based>(
    ring: &FreeRb<A>,
    other: &FreeRb<A>,
    u: &FreeRbElement<A::Basis>,
    v: &FreeRbElement<A::Basis>,
) -> Result<FreeRbElement<A::Basis>> {
    if ring.base != other.base {
        return Err(Error::CarrierMismatch(format!(
            "{} and {}",
            ring.describe(),
            other.describe()
        )));
    }
    if ring.weight != other.weight {
        return Err(Error::WeightMismatch {
            expected: ring.weight.to_string(),
            got: other.weight.to_string(),
        });
    }
    Ok(ring.mul(u, v))
}

impl<A: Based> Algebra for FreeRb<A> {
    type Elem = FreeRbElement<A::Basis>;

    fn describe(&self) -> String {
        format!("Ш({}) (weight {})", self.base.describe(), self.weight)
    }

    fn zero(&self) -> Self::Elem {
        FreeRbElement::zero()
    }

    fn one(&self) -> Self::Elem {
        self.unit_embed(&self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.plus(b)
    }

    fn scale(&self, c: &Scalar, a: &Self::Elem) -> Self::Elem {
        a.scale(c)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = FreeRbElement::zero();
        for (x, cx) in &a.terms {
            for (y, cy) in &b.terms {
                out.add_scaled(&self.word_mul(x, y), &(cx * cy));
            }
        }
        out
    }

    fn elem_eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn render(&self, a: &Self::Elem) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let parts: Vec<(bool, String)> = a
            .terms
            .iter()
            .map(|(w, c)| {
                let word = self.render_basis(w);
                let mag = c.abs();
                let text = if mag.is_one() {
                    word
                } else {
                    format!("{mag}·{word}")
                };
                (c < &Scalar::zero(), text)
            })
            .collect();
        join_signed(&parts)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
}

impl<A: Based> Based for FreeRb<A> {
    type Basis = Vec<A::Basis>;

    fn decompose(&self, a: &Self::Elem) -> Vec<(Self::Basis, Scalar)> {
        a.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect()
    }

    fn basis_element(&self, b: &Self::Basis) -> Self::Elem {
        FreeRbElement::word(b.clone(), Scalar::one())
    }

    fn render_basis(&self, b: &Self::Basis) -> String {
        let slots: Vec<String> = b.iter().map(|x| self.base.render_basis(x)).collect();
        format!("({})", slots.join(" ⊗ "))
    }
}

impl<A: SampleBasis> Sample for FreeRb<A> {
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem {
        self.sample_with(rng, SAMPLE_MAX_WORDS, SAMPLE_MAX_LENGTH)
    }
}

impl<A: SampleBasis> SampleBasis for FreeRb<A> {
    fn sample_basis(&self, rng: &mut dyn RngCore) -> Self::Basis {
        let len = rng.gen_range(1..=SAMPLE_MAX_LENGTH);
        (0..len).map(|_| self.base.sample_basis(rng)).collect()
    }
}

impl<B: Ord + fmt::Debug> fmt::Display for FreeRbElement<B> {
    /// Basis labels are shown with `Debug`; use [`Algebra::render`] for the
    /// carrier's own notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("{c}·{w:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
