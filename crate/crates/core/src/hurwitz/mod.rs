//! λ-Hurwitz series over a carrier algebra.
//!
//! A [`Series`] is an immutable expression graph whose components are
//! computed on demand and memoized per node. Covers of finite-support series
//! usually have infinite support, so nothing here truncates: every component
//! is exact because it depends on finitely many inputs.

mod cover;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use rand::{Rng, RngCore};

use crate::algebra::{Algebra, LinearOperator, Sample};
use crate::error::{parse_error, Error, Result};
use crate::scalar::{binomial_scalar, int, pow, Scalar};

pub use cover::{
    check_cover_relation, check_cover_relation_of, cover_component, rb_defect, rb_defect_series,
    required_input_order, CoverOperator,
};

/// Largest index and support size of sampled finite-support series.
pub const SAMPLE_MAX_INDEX: usize = 10;
pub const SAMPLE_MAX_SUPPORT: usize = 6;

/// The algebra `A^N` of λ-Hurwitz series over `base`.
///
/// `compare_order` only affects [`Algebra::elem_eq`] on series: two series are
/// treated as equal when their components agree up to that index.
#[derive(Clone, Debug, PartialEq)]
pub struct Hurwitz<A: Algebra> {
    base: A,
    weight: Scalar,
    compare_order: usize,
}

impl<A: Algebra> Hurwitz<A> {
    pub fn new(base: A, weight: Scalar) -> Self {
        Self {
            base,
            weight,
            compare_order: 8,
        }
    }

    pub fn with_compare_order(mut self, order: usize) -> Self {
        self.compare_order = order;
        self
    }

    pub fn base(&self) -> &A {
        &self.base
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn compare_order(&self) -> usize {
        self.compare_order
    }

    fn same_series_ring(&self, other: &Self) -> bool {
        self.base == other.base && self.weight == other.weight
    }

    /// `∂(f)_n = f_{n+1}` as an operator.
    pub fn partial_operator(&self) -> LinearOperator<Self> {
        LinearOperator::new(self.clone(), "∂", partial)
    }

    pub fn literal<I>(&self, entries: I) -> Series<A>
    where
        I: IntoIterator<Item = (usize, A::Elem)>,
    {
        Series::literal(self, entries)
    }
}

type Memo<E> = Mutex<HashMap<usize, E>>;

enum Kind<A: Algebra> {
    Literal(BTreeMap<usize, A::Elem>),
    Combination(Vec<(Scalar, Series<A>)>),
    Product(Series<A>, Series<A>),
    Shift(Series<A>, usize),
    Map(LinearOperator<A>, Series<A>),
    Theta(LinearOperator<A>, A::Elem),
    Cover(cover::CoverNode<A>),
}

struct Node<A: Algebra> {
    ring: Hurwitz<A>,
    kind: Kind<A>,
    memo: Memo<A::Elem>,
}

/// A λ-Hurwitz series with exact on-demand components.
///
/// Cloning is cheap and shares the memo table. The memo tables are
/// internally locked, so a series may be evaluated from several threads.
pub struct Series<A: Algebra> {
    node: Arc<Node<A>>,
}

impl<A: Algebra> Clone for Series<A> {
    fn clone(&self) -> Self {
        Self {
            node: Arc::clone(&self.node),
        }
    }
}

impl<A: Algebra> fmt::Debug for Series<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.node.kind {
            Kind::Literal(_) => "literal",
            Kind::Combination(_) => "combination",
            Kind::Product(..) => "product",
            Kind::Shift(..) => "shift",
            Kind::Map(..) => "map",
            Kind::Theta(..) => "theta",
            Kind::Cover(_) => "cover",
        };
        write!(f, "Series[{kind}] {}", self.render(4))
    }
}

impl<A: Algebra> Series<A> {
    fn from_kind(ring: &Hurwitz<A>, kind: Kind<A>) -> Self {
        Self {
            node: Arc::new(Node {
                ring: ring.clone(),
                kind,
                memo: Mutex::new(HashMap::new()),
            }),
        }
    }

    /// A finite-support series; zero entries are dropped.
    pub fn literal<I>(ring: &Hurwitz<A>, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, A::Elem)>,
    {
        let base = ring.base();
        let mut map: BTreeMap<usize, A::Elem> = BTreeMap::new();
        for (i, e) in entries {
            let merged = match map.remove(&i) {
                Some(prev) => base.add(&prev, &e),
                None => e,
            };
            if !base.is_zero(&merged) {
                map.insert(i, merged);
            }
        }
        Self::from_kind(ring, Kind::Literal(map))
    }

    pub fn zero(ring: &Hurwitz<A>) -> Self {
        Self::literal(ring, [])
    }

    /// The identity `(1, 0, 0, …)`.
    pub fn one(ring: &Hurwitz<A>) -> Self {
        Self::literal(ring, [(0, ring.base().one())])
    }

    /// `f_ℓ = δ_{ℓ,index} u`.
    pub fn delta(ring: &Hurwitz<A>, index: usize, u: A::Elem) -> Self {
        Self::literal(ring, [(index, u)])
    }

    /// `θ(u)_n = dⁿ(u)`.
    pub fn theta(ring: &Hurwitz<A>, d: &LinearOperator<A>, u: A::Elem) -> Self {
        Self::from_kind(ring, Kind::Theta(d.clone(), u))
    }

    pub fn ring(&self) -> &Hurwitz<A> {
        &self.node.ring
    }

    /// The entries of a finite-support literal.
    pub fn literal_entries(&self) -> Option<&BTreeMap<usize, A::Elem>> {
        match &self.node.kind {
            Kind::Literal(map) => Some(map),
            _ => None,
        }
    }

    fn ensure_same_ring(&self, other: &Self) -> Result<()> {
        let (a, b) = (self.ring(), other.ring());
        if a.weight != b.weight {
            return Err(Error::WeightMismatch {
                expected: a.weight.to_string(),
                got: b.weight.to_string(),
            });
        }
        if a.base != b.base {
            return Err(Error::CarrierMismatch(format!(
                "series over {} and {}",
                a.base.describe(),
                b.base.describe()
            )));
        }
        Ok(())
    }

    pub fn component(&self, n: usize) -> A::Elem {
        if let Kind::Literal(map) = &self.node.kind {
            return map.get(&n).cloned().unwrap_or_else(|| self.ring().base.zero());
        }
        if let Some(v) = self.node.memo.lock().expect("memo lock").get(&n) {
            return v.clone();
        }
        let value = self.compute(n);
        self.node
            .memo
            .lock()
            .expect("memo lock")
            .entry(n)
            .or_insert(value)
            .clone()
    }

    pub fn components(&self, upto: usize) -> Vec<A::Elem> {
        (0..=upto).map(|n| self.component(n)).collect()
    }

    fn compute(&self, n: usize) -> A::Elem {
        let base = &self.ring().base;
        match &self.node.kind {
            Kind::Literal(_) => unreachable!("literals are read directly"),
            Kind::Combination(terms) => base.sum(
                terms
                    .iter()
                    .map(|(c, s)| base.scale(c, &s.component(n))),
            ),
            Kind::Product(f, g) => hurwitz_product_component(base, &self.ring().weight, f, g, n),
            Kind::Shift(f, j) => f.component(n + j),
            Kind::Map(op, f) => op.apply(&f.component(n)),
            Kind::Theta(d, u) => {
                if n == 0 {
                    u.clone()
                } else {
                    d.apply(&self.component(n - 1))
                }
            }
            Kind::Cover(node) => node.value(0, n),
        }
    }

    /// `Σ cᵢ·sᵢ` over series in one ring.
    pub fn combination(ring: &Hurwitz<A>, terms: Vec<(Scalar, Series<A>)>) -> Result<Self> {
        let probe = Self::zero(ring);
        for (_, s) in &terms {
            probe.ensure_same_ring(s)?;
        }
        Ok(Self::from_kind(ring, Kind::Combination(terms)))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Self::combination(
            self.ring(),
            vec![(Scalar::one(), self.clone()), (Scalar::one(), other.clone())],
        )
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Self::combination(
            self.ring(),
            vec![(Scalar::one(), self.clone()), (int(-1), other.clone())],
        )
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_kind(self.ring(), Kind::Combination(vec![(c.clone(), self.clone())]))
    }

    /// The λ-Hurwitz product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.ensure_same_ring(other)?;
        Ok(Self::from_kind(
            self.ring(),
            Kind::Product(self.clone(), other.clone()),
        ))
    }

    /// `∂ʲ f`.
    pub fn shift(&self, j: usize) -> Self {
        if j == 0 {
            return self.clone();
        }
        match &self.node.kind {
            Kind::Shift(inner, k) => inner.shift(j + k),
            Kind::Literal(map) => Self::literal(
                self.ring(),
                map.iter()
                    .filter(|(i, _)| **i >= j)
                    .map(|(i, e)| (i - j, e.clone())),
            ),
            _ => Self::from_kind(self.ring(), Kind::Shift(self.clone(), j)),
        }
    }

    /// Applies a carrier operator to every component.
    pub fn map(&self, op: &LinearOperator<A>) -> Result<Self> {
        if op.carrier() != self.ring().base() {
            return Err(Error::CarrierMismatch(format!(
                "{} does not act on {}",
                op.name(),
                self.ring().base().describe()
            )));
        }
        Ok(Self::from_kind(self.ring(), Kind::Map(op.clone(), self.clone())))
    }

    /// Nonzero components up to `upto`, as `{index: element, …}`.
    pub fn render(&self, upto: usize) -> String {
        let base = self.ring().base();
        let items: Vec<String> = match &self.node.kind {
            Kind::Literal(map) => map
                .iter()
                .filter(|(i, _)| **i <= upto)
                .map(|(i, e)| format!("{i}: {}", base.render(e)))
                .collect(),
            _ => (0..=upto)
                .map(|n| (n, self.component(n)))
                .filter(|(_, e)| !base.is_zero(e))
                .map(|(n, e)| format!("{n}: {}", base.render(&e)))
                .collect(),
        };
        format!("{{{}}}", items.join(", "))
    }

    /// Parses a finite-support literal `{index: element, …}`.
    pub fn parse_literal<F>(ring: &Hurwitz<A>, text: &str, parse_elem: F) -> Result<Self>
    where
        F: Fn(&str) -> Result<A::Elem>,
    {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| parse_error("series", text, "expected {index: element, ...}"))?;
        let mut entries = Vec::new();
        for item in split_top_level(inner) {
            if item.trim().is_empty() {
                continue;
            }
            let (idx, elem) = item
                .split_once(':')
                .ok_or_else(|| parse_error("series", text, format!("missing ':' in {item:?}")))?;
            let idx = idx
                .trim()
                .parse::<usize>()
                .map_err(|_| parse_error("series", text, format!("bad index {idx:?}")))?;
            entries.push((idx, parse_elem(elem.trim())?));
        }
        Ok(Self::literal(ring, entries))
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// `(fg)_n = Σ_{k=0}^{n} Σ_{j=0}^{n−k} C(n,k) C(n−k,j) λᵏ f_{n−j} g_{k+j}`.
fn hurwitz_product_component<A: Algebra>(
    base: &A,
    weight: &Scalar,
    f: &Series<A>,
    g: &Series<A>,
    n: usize,
) -> A::Elem {
    let k_max = if weight.is_zero() { 0 } else { n };
    let mut acc = base.zero();
    for k in 0..=k_max {
        let lambda_k = pow(weight, k);
        let c_nk = binomial_scalar(n, k);
        for j in 0..=(n - k) {
            let fj = f.component(n - j);
            if base.is_zero(&fj) {
                continue;
            }
            let gj = g.component(k + j);
            if base.is_zero(&gj) {
                continue;
            }
            let c = &c_nk * binomial_scalar(n - k, j) * &lambda_k;
            acc = base.add(&acc, &base.scale(&c, &base.mul(&fj, &gj)));
        }
    }
    acc
}

/// The `n`-th component of the λ-Hurwitz product `fg`.
pub fn hmul<A: Algebra>(f: &Series<A>, g: &Series<A>, weight: &Scalar, n: usize) -> Result<A::Elem> {
    f.ensure_same_ring(g)?;
    if &f.ring().weight != weight {
        return Err(Error::WeightMismatch {
            expected: f.ring().weight.to_string(),
            got: weight.to_string(),
        });
    }
    Ok(hurwitz_product_component(f.ring().base(), weight, f, g, n))
}

/// `∂(f)_n = f_{n+1}`.
pub fn partial<A: Algebra>(f: &Series<A>) -> Series<A> {
    f.shift(1)
}

/// The counit `ε(f) = f₀`.
pub fn epsilon<A: Algebra>(f: &Series<A>) -> A::Elem {
    f.component(0)
}

/// The comultiplication read as a two-index oracle: `(δ(f)_m)_n = f_{m+n}`.
pub fn delta<A: Algebra>(f: &Series<A>, m: usize, n: usize) -> A::Elem {
    f.component(m + n)
}

/// The row `δ(f)_m` as a series.
pub fn delta_row<A: Algebra>(f: &Series<A>, m: usize) -> Series<A> {
    f.shift(m)
}

/// `θ(u)_n = dⁿ(u)`.
pub fn theta<A: Algebra>(d: &LinearOperator<A>, u: &A::Elem, n: usize) -> A::Elem {
    d.apply_power(n, u)
}

impl<A: Algebra> Algebra for Hurwitz<A> {
    type Elem = Series<A>;

    fn describe(&self) -> String {
        format!("{}^N (weight {})", self.base.describe(), self.weight)
    }

    fn zero(&self) -> Series<A> {
        Series::zero(self)
    }

    fn one(&self) -> Series<A> {
        Series::one(self)
    }

    fn add(&self, a: &Series<A>, b: &Series<A>) -> Series<A> {
        a.try_add(b).expect("series over this ring")
    }

    fn scale(&self, c: &Scalar, a: &Series<A>) -> Series<A> {
        a.scale(c)
    }

    fn mul(&self, a: &Series<A>, b: &Series<A>) -> Series<A> {
        a.try_mul(b).expect("series over this ring")
    }

    fn elem_eq(&self, a: &Series<A>, b: &Series<A>) -> bool {
        (0..=self.compare_order).all(|n| self.base.elem_eq(&a.component(n), &b.component(n)))
    }

    fn contains(&self, a: &Series<A>) -> bool {
        self.same_series_ring(a.ring())
    }

    fn render(&self, a: &Series<A>) -> String {
        a.render(self.compare_order)
    }
}

impl<A: Sample> Sample for Hurwitz<A> {
    /// Finite support of size at most 6 at indices at most 10.
    fn sample(&self, rng: &mut dyn RngCore) -> Series<A> {
        let size = rng.gen_range(1..=SAMPLE_MAX_SUPPORT);
        let entries: Vec<_> = (0..size)
            .map(|_| {
                let idx = rng.gen_range(0..=SAMPLE_MAX_INDEX);
                (idx, self.base.sample(rng))
            })
            .collect();
        Series::literal(self, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divided_power::DividedPower;
    use crate::scalar::ratio;

    fn ring(m: usize, w: Scalar) -> Hurwitz<DividedPower> {
        Hurwitz::new(DividedPower::quotient(m, w.clone()), w)
    }

    #[test]
    fn low_order_product_examples() {
        let lambda = ratio(3, 5);
        let h = ring(4, lambda.clone());
        let b = h.base().clone();
        let f = h.literal([(0, b.z(1)), (1, b.z(0)), (2, b.element(&[1, 2]))]);
        let g = h.literal([(0, b.z(2)), (1, b.element(&[0, 3])), (2, b.z(0))]);
        assert_eq!(
            hmul(&f, &g, &lambda, 0).unwrap(),
            b.mul(&f.component(0), &g.component(0))
        );
        let expected = b.sum([
            b.mul(&f.component(1), &g.component(0)),
            b.mul(&f.component(0), &g.component(1)),
            b.scale(&lambda, &b.mul(&f.component(1), &g.component(1))),
        ]);
        assert_eq!(hmul(&f, &g, &lambda, 1).unwrap(), expected);

        let h0 = ring(4, int(0));
        let b0 = h0.base().clone();
        let f0 = h0.literal([(0, b0.z(1)), (1, b0.z(0)), (2, b0.element(&[1, 2]))]);
        let g0 = h0.literal([(0, b0.z(2)), (1, b0.element(&[0, 3])), (2, b0.z(0))]);
        let expected = b0.sum([
            b0.mul(&f0.component(2), &g0.component(0)),
            b0.scale(&int(2), &b0.mul(&f0.component(1), &g0.component(1))),
            b0.mul(&f0.component(0), &g0.component(2)),
        ]);
        assert_eq!(hmul(&f0, &g0, &int(0), 2).unwrap(), expected);
    }

    #[test]
    fn weight_mismatch_is_rejected() {
        let h = ring(3, int(1));
        let f = Series::one(&h);
        assert!(matches!(hmul(&f, &f, &int(2), 1), Err(Error::WeightMismatch { .. })));
        let other = Series::one(&ring(3, int(2)));
        assert!(f.try_mul(&other).is_err());
        let other_carrier = Series::one(&ring(2, int(1)));
        assert!(matches!(f.try_mul(&other_carrier), Err(Error::CarrierMismatch(_))));
    }

    #[test]
    fn partial_epsilon_delta_theta() {
        let h = ring(4, int(0));
        let b = h.base().clone();
        assert!(h.elem_eq(&partial(&Series::one(&h)), &Series::zero(&h)));
        let f = h.literal([(3, b.z(2))]);
        let df = partial(&f);
        assert_eq!(df.literal_entries().unwrap().get(&2), Some(&b.z(2)));
        assert_eq!(epsilon(&Series::one(&h)), b.z(0));
        let g = h.literal([(0, b.z(1)), (1, b.z(3)), (5, b.z(0))]);
        assert_eq!(epsilon(&partial(&g)), b.z(3));
        assert_eq!(delta(&g, 0, 5), g.component(5));
        assert_eq!(delta(&g, 1, 0), g.component(1));
        assert_eq!(delta(&g, 2, 3), g.component(5));

        let full = DividedPower::full(int(0));
        let d = full.derivation();
        assert_eq!(theta(&d, &full.z(2), 0), full.z(2));
        assert_eq!(theta(&d, &full.z(2), 2), full.z(0));
        let hf = Hurwitz::new(full.clone(), int(0));
        let th = Series::theta(&hf, &d, full.z(3));
        assert_eq!(th.component(3), full.z(0));
        assert!(th.component(4).is_zero());
    }

    #[test]
    fn render_and_parse_literal() {
        let h = ring(3, int(0));
        let b = h.base().clone();
        let f = h.literal([(0, b.z(1)), (4, b.element(&[2, 0, -1]))]);
        let text = f.render(10);
        assert_eq!(text, "{0: z1, 4: 2·z0 - z2}");
        let back = Series::parse_literal(&h, &text, |s| b.parse(s)).unwrap();
        assert!(Hurwitz::new(b.clone(), int(0)).with_compare_order(10).elem_eq(&back, &f));
        assert!(Series::parse_literal(&h, "0: z1", |s| b.parse(s)).is_err());
        assert!(Series::parse_literal(&h, "{x: z1}", |s| b.parse(s)).is_err());
        assert_eq!(Series::parse_literal(&h, "{}", |s| b.parse(s)).unwrap().render(3), "{}");
    }

    #[test]
    fn memoized_components_are_stable() {
        let h = ring(4, int(1));
        let b = h.base().clone();
        let f = h.literal([(0, b.z(1)), (2, b.z(0))]);
        let g = f.try_mul(&f).unwrap().try_mul(&f).unwrap();
        let first = g.components(6);
        let second = g.components(6);
        assert_eq!(first, second);
    }
}
