use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Integer polynomial in weighted variables, with every term of weighted
/// degree above `cap` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GradedPoly {
    pub(crate) weights: Vec<u32>,
    pub(crate) cap: u32,
    pub(crate) terms: BTreeMap<Vec<u32>, BigInt>,
}

impl GradedPoly {
    pub(crate) fn zero(weights: Vec<u32>, cap: u32) -> Self {
        Self { weights, cap, terms: BTreeMap::new() }
    }

    pub(crate) fn constant(weights: Vec<u32>, cap: u32, c: BigInt) -> Self {
        let mut p = Self::zero(weights, cap);
        let e = vec![0; p.weights.len()];
        p.add_term(e, c);
        p
    }

    pub(crate) fn one(weights: Vec<u32>, cap: u32) -> Self {
        Self::constant(weights, cap, BigInt::one())
    }

    pub(crate) fn var(weights: Vec<u32>, cap: u32, i: usize) -> Self {
        let mut p = Self::zero(weights, cap);
        let mut e = vec![0; p.weights.len()];
        e[i] = 1;
        p.add_term(e, BigInt::one());
        p
    }

    pub(crate) fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub(crate) fn degree_of(&self, e: &[u32]) -> u32 {
        e.iter().zip(&self.weights).map(|(a, w)| a * w).sum()
    }

    pub(crate) fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() || self.degree_of(&e) > self.cap {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_ring(&self, other: &Self) {
        assert!(self.weights == other.weights && self.cap == other.cap, "graded polynomials from different rings");
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        self.same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub(crate) fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(), ..self.clone() }
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub(crate) fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.weights.clone(), self.cap);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        self.same_ring(other);
        let mut out = Self::zero(self.weights.clone(), self.cap);
        for (a, x) in &self.terms {
            let da = self.degree_of(a);
            for (b, y) in &other.terms {
                if da + self.degree_of(b) > self.cap {
                    continue;
                }
                let e: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    pub(crate) fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.weights.clone(), self.cap), |acc, _| acc.mul(self))
    }

    /// The part of weighted degree exactly `d`.
    pub(crate) fn component(&self, d: u32) -> Self {
        Self {
            terms: self.terms.iter().filter(|(e, _)| self.degree_of(e) == d).map(|(e, c)| (e.clone(), c.clone())).collect(),
            ..self.clone()
        }
    }

    pub(crate) fn constant_term(&self) -> BigInt {
        self.terms.get(&vec![0; self.nvars()]).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Inverse of `1 + x` with `x` of positive degree, as a geometric series.
    pub(crate) fn inverse_unipotent(&self) -> Option<Self> {
        if !self.constant_term().is_one() {
            return None;
        }
        let one = Self::one(self.weights.clone(), self.cap);
        let minus_x = one.sub(self);
        let mut out = one.clone();
        let mut power = one;
        for _ in 0..self.cap {
            power = power.mul(&minus_x);
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Some(out)
    }
}
