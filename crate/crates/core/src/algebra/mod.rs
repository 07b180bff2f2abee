//! The uniform contract for commutative unital algebras over the rationals,
//! linear operators on them, and sample-based axiom checkers.

mod checks;
mod operator;

use std::fmt;
use std::hash::Hash;

use num_traits::{One, Zero};
use rand::{Rng, RngCore};

pub use checks::{
    check_additivity, check_diff_axiom, check_omega_relation, check_rb_axiom, CheckOutcome, Witness,
};
pub use operator::LinearOperator;

use crate::scalar::{int, Scalar};

/// A commutative unital algebra over the rationals.
///
/// The algebra value is the carrier descriptor; elements are plain data and
/// all arithmetic goes through the descriptor, since products may depend on
/// parameters such as the weight or a quotient modulus.
pub trait Algebra: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + Send + Sync + 'static;

    fn describe(&self) -> String;

    fn zero(&self) -> Self::Elem;

    fn one(&self) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn scale(&self, c: &Scalar, a: &Self::Elem) -> Self::Elem;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn elem_eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    /// Whether `a` is a well-formed element of this carrier.
    fn contains(&self, _a: &Self::Elem) -> bool {
        true
    }

    fn render(&self, a: &Self::Elem) -> String;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.scale(&int(-1), a)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.elem_eq(a, &self.zero())
    }

    fn sum<I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = Self::Elem>,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, &x))
    }
}

/// An algebra with a distinguished basis, so that tensor words over it can
/// be stored in canonical form.
pub trait Based: Algebra {
    type Basis: Clone + Ord + Hash + fmt::Debug + Send + Sync + 'static;

    fn decompose(&self, a: &Self::Elem) -> Vec<(Self::Basis, Scalar)>;

    fn basis_element(&self, b: &Self::Basis) -> Self::Elem;

    fn render_basis(&self, b: &Self::Basis) -> String {
        self.render(&self.basis_element(b))
    }
}

/// Random element generation for the sample-based checkers.
pub trait Sample: Algebra {
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem;
}

pub trait SampleBasis: Based {
    fn sample_basis(&self, rng: &mut dyn RngCore) -> Self::Basis;
}

/// Uniform nonzero integer coefficient in `-5..=5`.
pub(crate) fn sample_nonzero_coeff(rng: &mut dyn RngCore) -> Scalar {
    loop {
        let c: i64 = rng.gen_range(-5..=5);
        if c != 0 {
            return int(c);
        }
    }
}

/// The base ring itself.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Algebra for Rationals {
    type Elem = Scalar;

    fn describe(&self) -> String {
        "k".to_string()
    }

    fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    fn one(&self) -> Scalar {
        Scalar::one()
    }

    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }

    fn scale(&self, c: &Scalar, a: &Scalar) -> Scalar {
        c * a
    }

    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }

    fn elem_eq(&self, a: &Scalar, b: &Scalar) -> bool {
        a == b
    }

    fn render(&self, a: &Scalar) -> String {
        a.to_string()
    }
}

impl Based for Rationals {
    type Basis = ();

    fn decompose(&self, a: &Scalar) -> Vec<((), Scalar)> {
        if a.is_zero() {
            Vec::new()
        } else {
            vec![((), a.clone())]
        }
    }

    fn basis_element(&self, _b: &()) -> Scalar {
        Scalar::one()
    }
}

impl Sample for Rationals {
    fn sample(&self, rng: &mut dyn RngCore) -> Scalar {
        int(rng.gen_range(-5..=5))
    }
}

impl SampleBasis for Rationals {
    fn sample_basis(&self, _rng: &mut dyn RngCore) {}
}
