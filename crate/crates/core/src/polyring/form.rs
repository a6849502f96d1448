use std::fmt;

use super::polynomial::{Polynomial, PolynomialRing};
use crate::error::{Error, Result};
use crate::kernel::{det_fraction_free, ExactMatrix, Rational};

/// A nonzero homogeneous polynomial of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    poly: Polynomial,
    degree: u32,
}

impl Form {
    pub fn new(poly: Polynomial) -> Result<Self> {
        let degree = poly.total_degree().ok_or(Error::ZeroForm)?;
        if !poly.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(Self { poly, degree })
    }

    /// Parses and validates in one step.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        Self::new(super::parse_polynomial(text, nvars)?)
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    /// `f(Mx)`. Homogeneity and degree are preserved; the result is nonzero
    /// whenever `M` is invertible.
    pub fn substitute_linear(&self, m: &ExactMatrix<Rational>) -> Result<Self> {
        Self::new(self.poly.substitute_linear(m))
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Element of the dual ring `Q[X0..XN]`, acting on forms by differentiation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOperator {
    poly: Polynomial,
}

impl DiffOperator {
    pub fn new(poly: Polynomial) -> Self {
        Self { poly }
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    /// `alpha(f)`, with `Xi` acting as `d/dxi`:
    /// `X^a (x^b) = b!/(b-a)! x^(b-a)` when `a <= b`, else zero.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars(), f.nvars(), "operator and polynomial have different variable counts");
        let mut out = Polynomial::zero(f.nvars());
        for (m, c) in self.poly.terms() {
            out = &out + &f.apply_monomial(m).scale(c);
        }
        out
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.write_with(f, 'X')
    }
}

/// The `N + 1` first partial derivatives of `f`.
pub fn gradient(f: &Form) -> Vec<Polynomial> {
    (0..f.nvars()).map(|i| f.poly().derivative(i)).collect()
}

/// Symmetric matrix of second partials.
pub fn hessian_matrix(f: &Form) -> ExactMatrix<Polynomial> {
    let grad = gradient(f);
    let n = f.nvars();
    let mut h = ExactMatrix::from_fn(n, n, |_, _| Polynomial::zero(n));
    for i in 0..n {
        for j in i..n {
            let d = grad[i].derivative(j);
            *h.get_mut(j, i) = d.clone();
            *h.get_mut(i, j) = d;
        }
    }
    h
}

impl Form {
    /// Symbolic Hessian determinant.
    pub fn hessian_determinant(&self) -> Polynomial {
        det_fraction_free(&PolynomialRing { nvars: self.nvars() }, &hessian_matrix(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, Rationals};
    use crate::polyring::{parse_operator, parse_polynomial, Monomial};
    use proptest::prelude::*;

    fn perazzo() -> Form {
        Form::parse("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5).unwrap()
    }

    #[test]
    fn form_validation() {
        assert!(matches!(Form::parse("0", 3), Err(Error::ZeroForm)));
        assert!(matches!(Form::parse("x0^2 + x1", 3), Err(Error::NotHomogeneous)));
        assert_eq!(perazzo().degree(), 3);
    }

    #[test]
    fn apply_examples() {
        let f = perazzo();
        let op = parse_operator("X3^2", 5).unwrap();
        assert_eq!(op.apply(f.poly()), parse_polynomial("2*x0", 5).unwrap());
        let x0 = parse_operator("X0", 2).unwrap();
        assert!(x0.apply(&parse_polynomial("x1^3", 2).unwrap()).is_zero());
        let id = parse_operator("1", 5).unwrap();
        assert_eq!(id.apply(f.poly()), *f.poly());
    }

    #[test]
    fn perazzo_gradient() {
        // frozen from the apolarity oracle
        let expected = ["x3^2", "x3*x4", "x4^2", "2*x0*x3 + x1*x4", "x1*x3 + 2*x2*x4"];
        let grad = gradient(&perazzo());
        for (g, e) in grad.iter().zip(expected) {
            assert_eq!(g, &parse_polynomial(e, 5).unwrap());
        }
        // f0 f2 = f1^2
        assert_eq!(&grad[0] * &grad[2], &grad[1] * &grad[1]);
    }

    #[test]
    fn small_gradients_and_hessians() {
        let f = Form::parse("x0^3", 1).unwrap();
        assert_eq!(gradient(&f), vec![parse_polynomial("3*x0^2", 1).unwrap()]);
        let g = Form::parse("x0*x1", 2).unwrap();
        assert_eq!(gradient(&g), vec![parse_polynomial("x1", 2).unwrap(), parse_polynomial("x0", 2).unwrap()]);
        let sq = Form::parse("x0^2", 1).unwrap();
        assert_eq!(hessian_matrix(&sq).get(0, 0), &Polynomial::constant(1, rat(2)));
        let h = hessian_matrix(&Form::parse("x0*x1*x2", 3).unwrap());
        assert!(h.get(0, 0).is_zero());
        assert_eq!(h.get(0, 1), &Polynomial::var(3, 2));
        assert_eq!(h.get(1, 2), &Polynomial::var(3, 0));
    }

    #[test]
    fn perazzo_hessian_vanishes_and_rank_at_ones() {
        let f = perazzo();
        assert!(f.hessian_determinant().is_zero());
        let ones = vec![rat(1); 5];
        let at = hessian_matrix(&f).map(|p| p.evaluate(&Rationals, &ones));
        assert_eq!(at.rank(), 4);
        assert_eq!(f.poly().evaluate(&Rationals, &ones), rat(3));
    }

    #[test]
    fn fermat_hessian_determinant() {
        let f = Form::parse("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", 5).unwrap();
        let expected = Polynomial::monomial(Monomial::new(vec![1; 5]), rat(7776));
        assert_eq!(f.hessian_determinant(), expected);
    }

    fn arb_form(nvars: usize, degree: u32) -> impl Strategy<Value = Form> {
        let monos = crate::polyring::monomials_of_degree(nvars, degree);
        let n = monos.len();
        proptest::collection::vec(-3i64..=3, n)
            .prop_filter("nonzero", |c| c.iter().any(|&v| v != 0))
            .prop_map(move |c| {
                Form::new(Polynomial::from_terms(nvars, monos.iter().cloned().zip(c.into_iter().map(rat)))).unwrap()
            })
    }

    proptest! {
        #[test]
        fn euler_identity(f in (1usize..=5, 1u32..=4).prop_flat_map(|(n, d)| arb_form(n, d))) {
            let n = f.nvars();
            let sum = gradient(&f).iter().enumerate().fold(Polynomial::zero(n), |acc, (i, g)| {
                &acc + &(&Polynomial::var(n, i) * g)
            });
            prop_assert_eq!(sum, f.poly().scale(&rat(i64::from(f.degree()))));
        }

        #[test]
        fn operators_commute(f in arb_form(4, 3), i in 0usize..4, j in 0usize..4) {
            let xi = DiffOperator::new(Polynomial::var(4, i));
            let xj = DiffOperator::new(Polynomial::var(4, j));
            let both = DiffOperator::new(&Polynomial::var(4, i) * &Polynomial::var(4, j));
            prop_assert_eq!(xi.apply(&xj.apply(f.poly())), both.apply(f.poly()));
            prop_assert_eq!(xj.apply(&xi.apply(f.poly())), both.apply(f.poly()));
        }

        #[test]
        fn apply_is_bilinear(f in arb_form(3, 3), g in arb_form(3, 3), a in -3i64..=3) {
            let op = DiffOperator::new(&Polynomial::var(3, 0) + &Polynomial::var(3, 2).scale(&rat(a)));
            let lhs = op.apply(&(f.poly() + &g.poly().scale(&rat(a))));
            let rhs = &op.apply(f.poly()) + &op.apply(g.poly()).scale(&rat(a));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn hessian_is_jacobian_of_gradient(f in arb_form(4, 3)) {
            let h = hessian_matrix(&f);
            prop_assert!(h.is_symmetric());
            let grad = gradient(&f);
            for i in 0..4 {
                for j in 0..4 {
                    prop_assert_eq!(h.get(i, j), &grad[i].derivative(j));
                }
            }
        }
    }
}
