//! Multivariate polynomials over `Q` and the apolarity action.
//!
//! `R = Q[x0..xN]` holds forms; the dual ring `Q[X0..XN]` acts on it with
//! `Xi` acting as `d/dxi`. Both rings share the same [`Polynomial`]
//! representation; [`DiffOperator`] marks a polynomial that is meant to act.

mod form;
mod monomial;
mod parse;
mod polynomial;

pub use form::{gradient, hessian_matrix, DiffOperator, Form};
pub use monomial::{monomials_of_degree, Monomial};
pub use parse::{parse_operator, parse_polynomial, ParseError};
pub use polynomial::{Polynomial, PolynomialRing};
