use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense exponent vector. Ordered graded-lexicographically with
/// `x0 > x1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    /// Multiplicity with which `X^self` acting on `x^target` scales the
    /// quotient monomial: the product of falling factorials `b!/(b-a)!`.
    /// Zero when `self` does not divide `target`.
    pub fn derivative_factor(&self, target: &Self) -> BigInt {
        let mut factor = BigInt::one();
        for (&a, &b) in self.0.iter().zip(&target.0) {
            if a > b {
                return BigInt::zero();
            }
            for k in 0..a {
                factor *= b - k;
            }
        }
        factor
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl Monomial {
    /// Writes the monomial in the text grammar with the given variable
    /// letter (`x` for forms, `X` for operators). The unit monomial prints
    /// as `1`.
    pub fn write_with(&self, f: &mut impl fmt::Write, letter: char) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            write!(f, "{letter}{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, 'x')
    }
}

/// All monomials of total degree `degree` in `nvars` variables, in
/// decreasing lexicographic order (`x0^d` first).
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == nvars {
            cur[pos] = left;
            out.push(Monomial(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(nvars, pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(nvars, 0, degree, &mut vec![0; nvars], &mut out);
    out
}
