use std::fmt;

use num_traits::Zero;

use super::AGAlgebra;
use crate::error::{Error, Result};
use crate::kernel::{mat_mul, ExactMatrix, Rational, Rationals};
use crate::polyring::{DiffOperator, Polynomial};
use crate::random::{integer_vector, seeded_rng};

/// A partition of `dim A`, parts non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanType {
    parts: Vec<usize>,
}

/// Result of comparing two partitions of the same integer in dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominanceOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl JordanType {
    /// Sorts and drops zero parts.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let longest = self.parts.first().copied().unwrap_or(0);
        Self::from_parts((1..=longest).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `Hilb(A)^∨`: the conjugate of the Hilbert vector read as a partition.
    pub fn hilbert_dual(hilbert: &[usize]) -> Self {
        Self::from_parts(hilbert.to_vec()).conjugate()
    }

    /// Compares partial sums. Partitions of different totals are incomparable.
    pub fn dominance_cmp(&self, other: &Self) -> DominanceOrder {
        if self.total() != other.total() {
            return DominanceOrder::Incomparable;
        }
        let len = self.parts.len().max(other.parts.len());
        let (mut a, mut b) = (0usize, 0usize);
        let (mut le, mut ge) = (true, true);
        for i in 0..len {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            le &= a <= b;
            ge &= a >= b;
        }
        match (le, ge) {
            (true, true) => DominanceOrder::Equal,
            (true, false) => DominanceOrder::Less,
            (false, true) => DominanceOrder::Greater,
            (false, false) => DominanceOrder::Incomparable,
        }
    }
}

impl fmt::Display for JordanType {
    /// Exponent notation, e.g. `4^1 ⊕ 2^3 ⊕ 1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if !first {
                f.write_str(" ⊕ ")?;
            }
            write!(f, "{p}^{run}")?;
            first = false;
            i += run;
        }
        Ok(())
    }
}

const GENERIC_START_BOUND: i64 = 5;
const GENERIC_START_SAMPLES: usize = 3;
const GENERIC_ROUNDS: usize = 6;

impl AGAlgebra {
    /// Matrix of `x -> l x` from `A_k` to `A_{k+1}` in the stored bases.
    pub fn multiplication_matrix(&self, l: &[Rational], k: u32) -> ExactMatrix<Rational> {
        assert_eq!(l.len(), self.nvars(), "linear form has the wrong length");
        assert!(k < self.socle_degree(), "multiplication maps are defined for k < d");
        let lin = Polynomial::linear(l);
        let source = self.basis(k);
        let rows = self.hilbert()[k as usize + 1];
        let mut m = ExactMatrix::zeros(rows, source.len());
        for (j, mono) in source.into_iter().enumerate() {
            let product = &lin * &Polynomial::monomial(mono, Rational::from_integer(1.into()));
            let image = if product.is_zero() {
                vec![Rational::zero(); rows]
            } else {
                self.class_of(&DiffOperator::new(product), k + 1)
            };
            debug_assert_eq!(image.len(), rows);
            for (i, c) in image.into_iter().enumerate() {
                *m.get_mut(i, j) = c;
            }
        }
        m
    }

    /// The nilpotent `dim A x dim A` matrix of `mu_l` on the whole algebra.
    pub fn multiplication_operator(&self, l: &[Rational]) -> ExactMatrix<Rational> {
        let hilbert = self.hilbert();
        let mut offsets = vec![0usize];
        for h in &hilbert {
            offsets.push(offsets.last().unwrap() + h);
        }
        let dim = *offsets.last().unwrap();
        let mut full = ExactMatrix::zeros(dim, dim);
        for k in 0..self.socle_degree() {
            let block = self.multiplication_matrix(l, k);
            let (r0, c0) = (offsets[k as usize + 1], offsets[k as usize]);
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    *full.get_mut(r0 + i, c0 + j) = block.get(i, j).clone();
                }
            }
        }
        full
    }

    /// `J_{A,l}`: the number of blocks of size at least `j` is
    /// `rank M^{j-1} - rank M^j`.
    pub fn jordan_type(&self, l: &[Rational]) -> JordanType {
        let m = self.multiplication_operator(l);
        let dim = m.rows();
        let mut ranks = vec![dim];
        let mut power = ExactMatrix::identity(dim);
        while *ranks.last().unwrap() > 0 {
            power = mat_mul(&Rationals, &power, &m);
            ranks.push(power.rank());
        }
        // at_least[j-1] = #blocks of size >= j
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut parts = Vec::new();
        for (j, &count) in at_least.iter().enumerate() {
            let next = at_least.get(j + 1).copied().unwrap_or(0);
            parts.extend(std::iter::repeat(j + 1).take(count - next));
        }
        JordanType::from_parts(parts)
    }

    /// Jordan type at a generic linear form.
    ///
    /// Draws `s` seeded integer vectors with entries in `[-B, B]` and keeps
    /// the dominance maximum. The round is accepted when that maximum
    /// dominates every sample and is attained at least twice; otherwise `B`
    /// doubles and `s` grows, up to a fixed number of rounds.
    pub fn generic_jordan_type(&self, seed: u64) -> Result<JordanType> {
        let mut rng = seeded_rng(seed);
        let mut bound = GENERIC_START_BOUND;
        let mut samples = GENERIC_START_SAMPLES;
        let mut last_reason = String::new();
        for _ in 0..GENERIC_ROUNDS {
            let types: Vec<JordanType> =
                (0..samples).map(|_| self.jordan_type(&integer_vector(&mut rng, self.nvars(), bound))).collect();
            let best = types
                .iter()
                .find(|t| types.iter().all(|u| matches!(t.dominance_cmp(u), DominanceOrder::Greater | DominanceOrder::Equal)));
            match best {
                Some(best) if types.iter().filter(|t| *t == best).count() >= 2 => return Ok(best.clone()),
                Some(_) => last_reason = format!("maximum attained once among {samples} samples with bound {bound}"),
                None => last_reason = format!("incomparable samples with bound {bound}"),
            }
            bound *= 2;
            samples += 2;
        }
        Err(Error::RetryCapExhausted { attempts: GENERIC_ROUNDS, reason: last_reason })
    }
}
