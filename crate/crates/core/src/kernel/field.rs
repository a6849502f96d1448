use std::fmt::Debug;

use num_traits::{One, Zero};

use super::Rational;

/// A commutative ring given as a context object.
///
/// Elements do not need to know their parent ring, which lets the same dense
/// matrix code run over `Q`, a number field, or a polynomial ring.
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// A field of characteristic zero containing `Q`.
pub trait Field: Ring {
    /// Multiplicative inverse, `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// The image of a rational number under the canonical embedding.
    fn from_rational(&self, r: &Rational) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|inv| self.mul(a, &inv))
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
}

impl Field for Rationals {
    fn inv(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_rational(&self, r: &Rational) -> Rational {
        r.clone()
    }
}
