//! Exact scalars and dense linear algebra.
//!
//! Everything here is exact: rationals are arbitrary-precision fractions and
//! the only extension fields are simple number fields `Q[t]/(m(t))` with an
//! irreducible modulus of degree at most three. Matrices are dense and small
//! (catalecticants, Hessians, multiplication maps), so the algorithms are the
//! textbook ones: row reduction to reduced echelon form, Bareiss elimination,
//! and a memoized Laplace expansion for matrices over rings without division.

mod field;
mod matrix;
mod number_field;

pub use field::{Field, Rationals, Ring};
pub use matrix::{
    det_bareiss, det_fraction_free, kernel_basis, mat_mul, mat_vec, rank, rref, ExactMatrix, Rref,
};
pub use number_field::{rational_roots, NumberField, NumberFieldElement};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for building a rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `num / den`; panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
