use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use crate::kernel::{ExactMatrix, Field, Rational, Ring};

/// Sparse polynomial over `Q` in a fixed number of variables.
///
/// Terms are kept in a map keyed by graded-lex order; zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        Self::from_terms(nvars, [(Monomial::var(nvars, i), Rational::one())])
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        Self::from_terms(nvars, [(m, c)])
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        Self::from_terms(n, coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.nvars(), self.nvars, "monomial has the wrong number of variables");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest total degree of a term, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// True for the zero polynomial and for polynomials whose terms all
    /// share one total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, degree: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == degree).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn derivative(&self, i: usize) -> Self {
        self.apply_monomial(&Monomial::var(self.nvars, i))
    }

    /// `X^op` acting on `self` by repeated differentiation.
    pub fn apply_monomial(&self, op: &Monomial) -> Self {
        assert_eq!(op.nvars(), self.nvars, "operator has the wrong number of variables");
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter_map(|(m, c)| {
                let quotient = m.checked_div(op)?;
                Some((quotient, c * Rational::from_integer(op.derivative_factor(m))))
            }),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// Exact evaluation in any field containing `Q`.
    pub fn evaluate<F: Field>(&self, field: &F, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars, "point has the wrong length");
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut term = field.from_rational(c);
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    term = field.mul(&term, x);
                }
            }
            acc = field.add(&acc, &term);
        }
        acc
    }

    /// `f(Mx)`: substitutes `x_i -> sum_j M[i][j] x_j`.
    pub fn substitute_linear(&self, m: &ExactMatrix<Rational>) -> Self {
        assert!(m.rows() == self.nvars && m.cols() == self.nvars, "substitution matrix has the wrong size");
        let images: Vec<Polynomial> =
            (0..self.nvars).map(|i| Self::linear(m.row(i))).collect();
        let mut out = Self::zero(self.nvars);
        for (mono, c) in &self.terms {
            let mut term = Self::constant(self.nvars, c.clone());
            for (i, &e) in mono.exponents().iter().enumerate() {
                for _ in 0..e {
                    term = &term * &images[i];
                }
            }
            out = &out + &term;
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Polynomial {
    /// Canonical text in the parser's grammar, leading term first.
    pub fn write_with(&self, f: &mut impl fmt::Write, letter: char) -> fmt::Result {
        if self.is_zero() {
            return f.write_char('0');
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_char('-')?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.write_with(f, letter)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, 'x')
    }
}

/// `Q[x0..x_{n-1}]` as a [`Ring`] context, for determinants of polynomial
/// matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolynomialRing {
    pub nvars: usize,
}

impl Ring for PolynomialRing {
    type Elem = Polynomial;

    fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars)
    }
    fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars)
    }
    fn is_zero(&self, a: &Polynomial) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a + b
    }
    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a * b
    }
    fn neg(&self, a: &Polynomial) -> Polynomial {
        -a
    }
    fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a - b
    }
}
