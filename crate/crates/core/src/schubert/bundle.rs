use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::chow::{ChowClass, GrassContext};
use super::graded::GradedPoly;
use crate::error::{Error, Result};

/// Rank and total Chern class of a (possibly virtual) bundle on `G(k, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleClass {
    ctx: GrassContext,
    rank: i64,
    chern: ChowClass,
}

/// Most Chern roots the splitting-principle routines will introduce for one
/// bundle.
const MAX_ROOTS: i64 = 8;

/// `(S, Q)` with `c(Q) = 1 + q_1 + ... + q_{n-k}` and `c(S) = c(Q)^{-1}`.
pub fn tautological_bundles(ctx: GrassContext) -> (BundleClass, BundleClass) {
    let cq = (0..=ctx.quotient_rank()).fold(ChowClass::zero(ctx), |acc, i| acc.add(&ChowClass::q(ctx, i)));
    let cs = cq.inverse().expect("c(Q) is unipotent");
    (
        BundleClass { ctx, rank: ctx.k() as i64, chern: cs },
        BundleClass { ctx, rank: ctx.quotient_rank() as i64, chern: cq },
    )
}

impl BundleClass {
    pub fn new(rank: i64, chern: ChowClass) -> Result<Self> {
        if !chern.component(0).equivalent(&ChowClass::one(chern.context())) {
            return Err(Error::UnsupportedBundle("total Chern class must start with 1".into()));
        }
        Ok(Self { ctx: chern.context(), rank, chern })
    }

    pub fn trivial(ctx: GrassContext, rank: i64) -> Self {
        Self { ctx, rank, chern: ChowClass::one(ctx) }
    }

    pub fn context(&self) -> GrassContext {
        self.ctx
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn total_chern(&self) -> &ChowClass {
        &self.chern
    }

    pub fn chern_class(&self, i: usize) -> ChowClass {
        self.chern.component(i)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn dual(&self) -> Self {
        Self { ctx: self.ctx, rank: self.rank, chern: self.chern.alternate() }
    }

    /// Direct sum (Whitney).
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { ctx: self.ctx, rank: self.rank + other.rank, chern: self.chern.mul(&other.chern) })
    }

    /// Virtual difference, `c = c(self) / c(other)`.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let inv = other.chern.inverse().expect("total Chern classes are unipotent");
        Ok(Self { ctx: self.ctx, rank: self.rank - other.rank, chern: self.chern.mul(&inv) })
    }

    /// `self^{⊕m}`.
    pub fn scale(&self, m: u32) -> Self {
        Self { ctx: self.ctx, rank: self.rank * i64::from(m), chern: self.chern.pow(m) }
    }

    /// `s(B) = c(B)^{-1}`.
    pub fn segre(&self) -> ChowClass {
        self.chern.inverse().expect("total Chern classes are unipotent")
    }

    /// Segre class in the projective-bundle-of-quotients convention,
    /// `c(B^*)^{-1}`: `s_i` picks up the sign `(-1)^i`.
    pub fn quotient_segre(&self) -> ChowClass {
        self.dual().segre()
    }

    fn roots(&self) -> Result<usize> {
        if !(0..=MAX_ROOTS).contains(&self.rank) {
            return Err(Error::UnsupportedBundle(format!("root calculus needs a genuine bundle of rank at most {MAX_ROOTS}, got rank {}", self.rank)));
        }
        Ok(self.rank as usize)
    }

    pub fn sym_power(&self, d: usize) -> Result<Self> {
        let r = self.roots()?;
        let sums = multisets(r, d, true);
        let rank = sums.len() as i64;
        let chern = chern_from_roots(self.ctx, &[self], &sums)?;
        Ok(Self { ctx: self.ctx, rank, chern })
    }

    pub fn ext_power(&self, d: usize) -> Result<Self> {
        let r = self.roots()?;
        let sums = multisets(r, d, false);
        let rank = sums.len() as i64;
        let chern = chern_from_roots(self.ctx, &[self], &sums)?;
        Ok(Self { ctx: self.ctx, rank, chern })
    }

    /// `self ⊗ other`, roots `a_i + b_j`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (r1, r2) = (self.roots()?, other.roots()?);
        let mut sums = Vec::new();
        for i in 0..r1 {
            for j in 0..r2 {
                let mut v = vec![0u32; r1 + r2];
                v[i] = 1;
                v[r1 + j] = 1;
                sums.push(v);
            }
        }
        let chern = chern_from_roots(self.ctx, &[self, other], &sums)?;
        Ok(Self { ctx: self.ctx, rank: (r1 * r2) as i64, chern })
    }

    /// `c_k(F ⊗ L) = sum_i binom(r - i, k - i) c_i(F) c_1(L)^{k-i}`.
    pub fn tensor_line(&self, line: &Self) -> Result<Self> {
        self.check(line)?;
        if line.rank != 1 {
            return Err(Error::UnsupportedBundle(format!("tensor_line needs a line bundle, got rank {}", line.rank)));
        }
        let r = self.roots()? as i64;
        let l = line.chern_class(1);
        let mut total = ChowClass::zero(self.ctx);
        for k in 0..=r {
            for i in 0..=k {
                let b = binomial(r - i, k - i);
                if b.is_zero() {
                    continue;
                }
                let term = self.chern_class(i as usize).mul(&l.pow((k - i) as u32));
                total = total.add(&ChowClass::from_poly(self.ctx, term.poly.scale(&b)));
            }
        }
        Ok(Self { ctx: self.ctx, rank: r, chern: total })
    }
}

pub(crate) fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Exponent vectors of the root sums of `Sym^d` (with repetition) or
/// `∧^d` (without), over `r` roots.
fn multisets(r: usize, d: usize, repeat: bool) -> Vec<Vec<u32>> {
    fn go(start: usize, r: usize, left: usize, repeat: bool, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            cur[i] += 1;
            go(if repeat { i } else { i + 1 }, r, left - 1, repeat, cur, out);
            cur[i] -= 1;
        }
    }
    let mut out = Vec::new();
    go(0, r, d, repeat, &mut vec![0; r], &mut out);
    out
}

/// Total Chern class of the bundle whose Chern roots are the given integer
/// combinations of the roots of `blocks`, expressed back in the Chern
/// classes of the blocks.
fn chern_from_roots(ctx: GrassContext, blocks: &[&BundleClass], roots: &[Vec<u32>]) -> Result<ChowClass> {
    let sizes: Vec<usize> = blocks.iter().map(|b| b.rank as usize).collect();
    let nroots: usize = sizes.iter().sum();
    let cap = ctx.dim() as u32;
    let one = GradedPoly::one(vec![1; nroots], cap);
    let mut total = one.clone();
    for root in roots {
        // 1 + (sum of roots with multiplicity)
        let mut factor = one.clone();
        for (i, &c) in root.iter().enumerate() {
            if c > 0 {
                let mut e = vec![0u32; nroots];
                e[i] = 1;
                factor.add_term(e, BigInt::from(c));
            }
        }
        total = total.mul(&factor);
    }
    let reduced = reduce_block_symmetric(&total, &sizes)?;
    // substitute e_i of block b -> c_i(block b)
    let mut out = ChowClass::zero(ctx);
    let mut powers: HashMap<(usize, u32), ChowClass> = HashMap::new();
    let offsets: Vec<usize> = sizes.iter().scan(0, |acc, &s| {
        let o = *acc;
        *acc += s;
        Some(o)
    }).collect();
    for (e, c) in &reduced.terms {
        let mut term = ChowClass::one(ctx);
        for (b, block) in blocks.iter().enumerate() {
            for i in 0..sizes[b] {
                let exp = e[offsets[b] + i];
                if exp == 0 {
                    continue;
                }
                let p = powers
                    .entry((offsets[b] + i, exp))
                    .or_insert_with(|| block.chern_class(i + 1).pow(exp))
                    .clone();
                term = term.mul(&p);
            }
        }
        out = out.add(&ChowClass::from_poly(ctx, term.poly.scale(c)));
    }
    Ok(out)
}

/// Rewrites a polynomial in root variables, symmetric within each block of
/// consecutive variables, as a polynomial in the elementary symmetric
/// functions of the blocks (variable `offset_b + i` stands for `e_{i+1}`
/// of block `b`, weight `i + 1`). Classical leading-term subtraction in lex
/// order.
fn reduce_block_symmetric(p: &GradedPoly, sizes: &[usize]) -> Result<GradedPoly> {
    let nroots: usize = sizes.iter().sum();
    let cap = p.cap;
    let weights: Vec<u32> = sizes.iter().flat_map(|&s| 1..=s as u32).collect();
    let mut out = GradedPoly::zero(weights, cap);
    // elementary symmetric polynomials of each block, in root variables
    let mut elementary: Vec<GradedPoly> = Vec::with_capacity(nroots);
    let mut offset = 0;
    for &s in sizes {
        for i in 1..=s {
            let mut e = GradedPoly::zero(vec![1; nroots], cap);
            for subset in multisets(s, i, false) {
                let mut exps = vec![0u32; nroots];
                exps[offset..offset + s].copy_from_slice(&subset);
                e.add_term(exps, BigInt::one());
            }
            elementary.push(e);
        }
        offset += s;
    }
    let mut rest = p.clone();
    while let Some((lead, c)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        let mut e_exps = vec![0u32; nroots];
        let mut product = GradedPoly::one(vec![1; nroots], cap);
        let mut offset = 0;
        for &s in sizes {
            let block = &lead[offset..offset + s];
            for i in 0..s {
                let next = if i + 1 < s { block[i + 1] } else { 0 };
                if block[i] < next {
                    return Err(Error::Inconsistent("root polynomial is not symmetric".into()));
                }
                let f = block[i] - next;
                e_exps[offset + i] = f;
                if f > 0 {
                    product = product.mul(&elementary[offset + i].pow(f));
                }
            }
            offset += s;
        }
        rest = rest.sub(&product.scale(&c));
        out.add_term(e_exps, c);
    }
    Ok(out)
}
