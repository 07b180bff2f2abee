use std::fmt;
use std::sync::Arc;

use super::Algebra;
use crate::scalar::{Scalar, ScalarPoly};

type MapFn<A> = dyn Fn(&<A as Algebra>::Elem) -> <A as Algebra>::Elem + Send + Sync;

/// A linear map on the elements of one carrier.
///
/// Linearity is not enforced; [`super::check_additivity`] tests it on samples.
pub struct LinearOperator<A: Algebra> {
    carrier: A,
    name: String,
    map: Arc<MapFn<A>>,
}

impl<A: Algebra> Clone for LinearOperator<A> {
    fn clone(&self) -> Self {
        Self {
            carrier: self.carrier.clone(),
            name: self.name.clone(),
            map: Arc::clone(&self.map),
        }
    }
}

impl<A: Algebra> fmt::Debug for LinearOperator<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOperator({} on {})", self.name, self.carrier.describe())
    }
}

impl<A: Algebra> LinearOperator<A> {
    pub fn new<F>(carrier: A, name: impl Into<String>, map: F) -> Self
    where
        F: Fn(&A::Elem) -> A::Elem + Send + Sync + 'static,
    {
        Self {
            carrier,
            name: name.into(),
            map: Arc::new(map),
        }
    }

    pub fn zero(carrier: A) -> Self {
        let c = carrier.clone();
        Self::new(carrier, "0", move |_| c.zero())
    }

    pub fn identity(carrier: A) -> Self {
        Self::new(carrier, "id", Clone::clone)
    }

    pub fn apply(&self, u: &A::Elem) -> A::Elem {
        (self.map)(u)
    }

    /// `self^k (u)`.
    pub fn apply_power(&self, k: usize, u: &A::Elem) -> A::Elem {
        let mut acc = u.clone();
        for _ in 0..k {
            acc = self.apply(&acc);
        }
        acc
    }

    /// `poly(self)(u) = Σ cᵢ selfⁱ(u)`.
    pub fn apply_poly(&self, poly: &ScalarPoly, u: &A::Elem) -> A::Elem {
        let mut acc = self.carrier.zero();
        let mut power = u.clone();
        for (i, c) in poly.coeffs().iter().enumerate() {
            if i > 0 {
                power = self.apply(&power);
            }
            if !num_traits::Zero::is_zero(c) {
                acc = self.carrier.add(&acc, &self.carrier.scale(c, &power));
            }
        }
        acc
    }

    pub fn carrier(&self) -> &A {
        &self.carrier
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b) = (self.clone(), other.clone());
        Self::new(
            self.carrier.clone(),
            format!("{}∘{}", self.name, other.name),
            move |u| a.apply(&b.apply(u)),
        )
    }

    pub fn scaled(&self, c: Scalar) -> Self {
        let op = self.clone();
        let carrier = self.carrier.clone();
        Self::new(self.carrier.clone(), format!("{c}·{}", self.name), move |u| {
            carrier.scale(&c, &op.apply(u))
        })
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}
