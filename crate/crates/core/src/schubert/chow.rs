use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::graded::GradedPoly;
use crate::error::{Error, Result};
use crate::kernel::{det_fraction_free, ExactMatrix, Ring};

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.0.len() <= rows && self.part(0) <= cols
    }

    /// Complement inside the `rows x cols` box, rotated.
    pub fn complement(&self, rows: usize, cols: usize) -> Self {
        Self::new((0..rows).map(|i| cols - self.part(rows - 1 - i)).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The Grassmannian `G(k, n)` of `k`-dimensional subspaces of an
/// `n`-dimensional space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrassContext {
    k: usize,
    n: usize,
}

impl GrassContext {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::UnsupportedBundle(format!("G({k},{n}) needs 0 < k < n")));
        }
        Ok(Self { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the tautological quotient bundle.
    pub fn quotient_rank(&self) -> usize {
        self.n - self.k
    }

    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn box_partition(&self) -> Partition {
        Partition::new(vec![self.quotient_rank(); self.k])
    }

    pub(crate) fn weights(&self) -> Vec<u32> {
        (1..=self.quotient_rank() as u32).collect()
    }

    /// All partitions in the `k x (n-k)` box of size `d`.
    pub fn partitions_of(&self, d: usize) -> Vec<Partition> {
        fn go(rows: usize, max: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
                return;
            }
            if rows == 0 {
                return;
            }
            for p in (1..=max.min(left)).rev() {
                cur.push(p);
                go(rows - 1, p, left - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self.k, self.quotient_rank(), d, &mut Vec::new(), &mut out);
        out
    }

    /// Pieri: `sigma_lambda * sigma_i` as a sum over horizontal strips that
    /// stay in the box.
    pub fn pieri(&self, lambda: &Partition, i: usize) -> Vec<Partition> {
        let cols = self.quotient_rank();
        let mut out = Vec::new();
        let mut mu = vec![0usize; self.k];
        fn go(
            row: usize,
            left: usize,
            lambda: &Partition,
            cols: usize,
            mu: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if row == mu.len() {
                if left == 0 {
                    out.push(Partition::new(mu.clone()));
                }
                return;
            }
            let low = lambda.part(row);
            // mu_row <= lambda_{row-1} keeps the strip horizontal
            let high = if row == 0 { cols } else { lambda.part(row - 1) }.min(low + left);
            for m in low..=high {
                mu[row] = m;
                go(row + 1, left - (m - low), lambda, cols, mu, out);
            }
        }
        go(0, i, lambda, cols, &mut mu, &mut out);
        out
    }
}

impl fmt::Display for GrassContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.k, self.n)
    }
}

/// A class in the Chow ring of `G(k, n)`, written as an integer polynomial
/// in `q_1, ..., q_{n-k}` (the Chern classes of the quotient bundle) and
/// truncated above degree `k(n-k)`.
///
/// The polynomial is not reduced modulo the relations of the Chow ring, so
/// two classes are compared through their Schubert expansions
/// ([`ChowClass::equivalent`]); `==` is equality of representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass {
    ctx: GrassContext,
    pub(crate) poly: GradedPoly,
}

impl ChowClass {
    pub(crate) fn from_poly(ctx: GrassContext, poly: GradedPoly) -> Self {
        Self { ctx, poly }
    }

    pub fn zero(ctx: GrassContext) -> Self {
        Self::from_poly(ctx, GradedPoly::zero(ctx.weights(), ctx.dim() as u32))
    }

    pub fn constant(ctx: GrassContext, c: i64) -> Self {
        Self::from_poly(ctx, GradedPoly::constant(ctx.weights(), ctx.dim() as u32, BigInt::from(c)))
    }

    pub fn one(ctx: GrassContext) -> Self {
        Self::constant(ctx, 1)
    }

    /// `q_i = c_i(Q) = sigma_i` for `1 <= i <= n-k`; `q_0 = 1`, and zero
    /// outside that range.
    pub fn q(ctx: GrassContext, i: usize) -> Self {
        match i {
            0 => Self::one(ctx),
            i if i <= ctx.quotient_rank() => {
                Self::from_poly(ctx, GradedPoly::var(ctx.weights(), ctx.dim() as u32, i - 1))
            }
            _ => Self::zero(ctx),
        }
    }

    pub fn context(&self) -> GrassContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_poly(self.ctx, self.poly.add(&other.poly)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_poly(self.ctx, self.poly.mul(&other.poly)))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("classes on different Grassmannians")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("classes on different Grassmannians")
    }

    pub fn neg(&self) -> Self {
        Self::from_poly(self.ctx, self.poly.neg())
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_poly(self.ctx, self.poly.scale(&BigInt::from(c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::from_poly(self.ctx, self.poly.pow(e))
    }

    /// Degree-`d` homogeneous part.
    pub fn component(&self, d: usize) -> Self {
        Self::from_poly(self.ctx, self.poly.component(d as u32))
    }

    /// Multiplicative inverse; exists when the constant term is 1.
    pub fn inverse(&self) -> Option<Self> {
        self.poly.inverse_unipotent().map(|p| Self::from_poly(self.ctx, p))
    }

    /// Multiplies the degree-`i` part by `(-1)^i`.
    pub fn alternate(&self) -> Self {
        let mut out = GradedPoly::zero(self.poly.weights.clone(), self.poly.cap);
        for (e, c) in &self.poly.terms {
            let sign = if self.poly.degree_of(e) % 2 == 0 { c.clone() } else { -c };
            out.add_term(e.clone(), sign);
        }
        Self::from_poly(self.ctx, out)
    }

    /// Coefficients in the Schubert basis `sigma_lambda`, all degrees.
    pub fn schubert_expansion(&self) -> BTreeMap<Partition, BigInt> {
        let mut total: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (e, c) in &self.poly.terms {
            let mut state: BTreeMap<Partition, BigInt> = BTreeMap::from([(Partition::empty(), BigInt::one())]);
            for (i, &times) in e.iter().enumerate() {
                for _ in 0..times {
                    let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
                    for (lambda, v) in &state {
                        for mu in self.ctx.pieri(lambda, i + 1) {
                            *next.entry(mu).or_insert_with(BigInt::zero) += v;
                        }
                    }
                    state = next;
                }
            }
            for (lambda, v) in state {
                *total.entry(lambda).or_insert_with(BigInt::zero) += v * c;
            }
        }
        total.retain(|_, v| !v.is_zero());
        total
    }

    /// Degree: the coefficient of the point class `sigma_box`.
    pub fn integral(&self) -> BigInt {
        let top = self.component(self.ctx.dim());
        top.schubert_expansion().remove(&self.ctx.box_partition()).unwrap_or_else(BigInt::zero)
    }

    /// Equality in the Chow ring.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.sub(other).schubert_expansion().is_empty()
    }

    /// `sigma_lambda = det[q_{lambda_i + j - i}]` (Giambelli).
    pub fn schubert_class(ctx: GrassContext, lambda: &Partition) -> Result<Self> {
        if !lambda.fits_in(ctx.k(), ctx.quotient_rank()) {
            return Err(Error::UnsupportedBundle(format!("partition {lambda} does not fit in the box of {ctx}")));
        }
        let l = lambda.parts().len();
        if l == 0 {
            return Ok(Self::one(ctx));
        }
        let m = ExactMatrix::from_fn(l, l, |i, j| {
            let idx = lambda.part(i) as i64 + j as i64 - i as i64;
            if idx < 0 {
                Self::zero(ctx)
            } else {
                Self::q(ctx, idx as usize)
            }
        });
        Ok(det_fraction_free(&ChowRing { ctx }, &m))
    }
}

impl fmt::Display for ChowClass {
    /// Schubert expansion, e.g. `2*s(2,1) - s(3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exp = self.schubert_expansion();
        if exp.is_empty() {
            return f.write_str("0");
        }
        for (idx, (lambda, c)) in exp.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "s{lambda}")?;
        }
        Ok(())
    }
}

/// The Chow ring of a fixed Grassmannian as a [`Ring`], for determinants.
#[derive(Clone, Copy, Debug)]
pub struct ChowRing {
    pub ctx: GrassContext,
}

impl Ring for ChowRing {
    type Elem = ChowClass;

    fn zero(&self) -> ChowClass {
        ChowClass::zero(self.ctx)
    }
    fn one(&self) -> ChowClass {
        ChowClass::one(self.ctx)
    }
    fn is_zero(&self, a: &ChowClass) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &ChowClass, b: &ChowClass) -> ChowClass {
        a.add(b)
    }
    fn mul(&self, a: &ChowClass, b: &ChowClass) -> ChowClass {
        a.mul(b)
    }
    fn neg(&self, a: &ChowClass) -> ChowClass {
        a.neg()
    }
}
