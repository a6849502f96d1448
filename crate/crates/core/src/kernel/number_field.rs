use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Ring};
use super::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients from the constant term up.
type UniPoly = Vec<Rational>;

fn trim(p: &mut UniPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_eval(p: &[Rational], t: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
}

/// `(quotient, remainder)` of `a` by a nonzero `b`.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (UniPoly, UniPoly) {
    let mut r: UniPoly = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            let v = &r[shift + i] - &c * bc;
            r[shift + i] = v;
        }
        q[shift] = c;
        trim(&mut r);
    }
    (q, r)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> UniPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> UniPoly {
    let n = a.len().max(b.len());
    let mut out: UniPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All distinct rational roots of a nonzero polynomial (coefficients from the
/// constant term up), by the rational root theorem.
pub fn rational_roots(poly: &[Rational]) -> Vec<Rational> {
    let mut p: UniPoly = poly.to_vec();
    trim(&mut p);
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    // factor out t^m
    let lowest = p.iter().position(|c| !c.is_zero()).unwrap();
    if lowest > 0 {
        roots.push(Rational::zero());
        p.drain(..lowest);
    }
    if p.len() <= 1 {
        return roots;
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let (a0, an) = (&ints[0], ints.last().unwrap());
    for num in positive_divisors(a0) {
        for den in positive_divisors(an) {
            if !num.gcd(&den).is_one() {
                continue;
            }
            for cand in [Rational::new(num.clone(), den.clone()), -Rational::new(num.clone(), den.clone())] {
                if poly_eval(&p, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

#[derive(Debug, PartialEq, Eq)]
struct Modulus {
    /// Monic, constant term first; length is `degree + 1`.
    coeffs: UniPoly,
}

/// The simple extension `Q[t]/(m(t))` for a monic irreducible `m` of degree
/// one to three. Cheap to clone; elements share the modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField(Arc<Modulus>);

impl NumberField {
    /// Normalizes `modulus` to be monic and checks irreducibility. Degree two
    /// and three are irreducible over `Q` exactly when there is no rational
    /// root.
    pub fn new(modulus: Vec<Rational>) -> Result<Self> {
        let mut m = modulus;
        trim(&mut m);
        let degree = m.len().saturating_sub(1);
        if !(1..=3).contains(&degree) {
            return Err(Error::InvalidModulus(format!("degree {degree} is outside 1..=3")));
        }
        if degree > 1 && !rational_roots(&m).is_empty() {
            return Err(Error::InvalidModulus("modulus has a rational root".into()));
        }
        let lead = m[degree].clone();
        let coeffs = m.into_iter().map(|c| c / &lead).collect();
        Ok(Self(Arc::new(Modulus { coeffs })))
    }

    pub fn degree(&self) -> usize {
        self.0.coeffs.len() - 1
    }

    pub fn modulus(&self) -> &[Rational] {
        &self.0.coeffs
    }

    /// The class of `t`.
    pub fn generator(&self) -> NumberFieldElement {
        self.element(vec![Rational::zero(), Rational::one()])
    }

    /// The class of the polynomial with the given coefficients.
    pub fn element(&self, coeffs: Vec<Rational>) -> NumberFieldElement {
        let (_, mut r) = poly_divmod(&coeffs, self.modulus());
        r.resize(self.degree(), Rational::zero());
        NumberFieldElement { field: self.clone(), coeffs: r }
    }
}

/// An element of a [`NumberField`], stored as its reduced coefficient vector
/// (length = degree of the modulus).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberFieldElement {
    field: NumberField,
    coeffs: Vec<Rational>,
}

impl NumberFieldElement {
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) {
        assert!(self.field == other.field, "elements of different number fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Self { field: self.field.clone(), coeffs }
    }

    pub fn neg(&self) -> Self {
        Self { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        self.field.element(poly_mul(&self.coeffs, &other.coeffs))
    }

    /// Inverse by the extended Euclidean algorithm against the modulus.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut a: UniPoly = self.field.modulus().to_vec();
        let mut b: UniPoly = self.coeffs.clone();
        trim(&mut b);
        // invariant: s_a * self = a, s_b * self = b  (mod m)
        let mut s_a: UniPoly = Vec::new();
        let mut s_b: UniPoly = vec![Rational::one()];
        while b.len() > 1 {
            let (q, r) = poly_divmod(&a, &b);
            let s_r = poly_sub(&s_a, &poly_mul(&q, &s_b));
            a = std::mem::replace(&mut b, r);
            s_a = std::mem::replace(&mut s_b, s_r);
        }
        // b is a nonzero constant since the modulus is irreducible
        let c = b[0].clone();
        Some(self.field.element(s_b.into_iter().map(|x| x / &c).collect()))
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Ring for NumberField {
    type Elem = NumberFieldElement;

    fn zero(&self) -> NumberFieldElement {
        self.element(Vec::new())
    }
    fn one(&self) -> NumberFieldElement {
        self.element(vec![Rational::one()])
    }
    fn is_zero(&self, a: &NumberFieldElement) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        a.add(b)
    }
    fn mul(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        a.mul(b)
    }
    fn neg(&self, a: &NumberFieldElement) -> NumberFieldElement {
        a.neg()
    }
}

impl Field for NumberField {
    fn inv(&self, a: &NumberFieldElement) -> Option<NumberFieldElement> {
        a.inv()
    }
    fn from_rational(&self, r: &Rational) -> NumberFieldElement {
        self.element(vec![r.clone()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, ratio};
    use proptest::prelude::*;

    fn cube_root_two() -> NumberField {
        NumberField::new(vec![rat(-2), rat(0), rat(0), rat(1)]).unwrap()
    }

    #[test]
    fn generator_satisfies_modulus() {
        let k = cube_root_two();
        let t = k.generator();
        let t3 = t.mul(&t).mul(&t);
        assert_eq!(t3, k.from_rational(&rat(2)));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // (t - 1)(t^2 + 1)
        let m = vec![rat(-1), rat(1), rat(-1), rat(1)];
        assert!(NumberField::new(m).is_err());
        assert!(NumberField::new(vec![rat(1)]).is_err());
    }

    #[test]
    fn non_monic_modulus_normalized() {
        let k = NumberField::new(vec![rat(-4), rat(0), rat(2)]).unwrap();
        assert_eq!(k.modulus(), &[rat(-2), rat(0), rat(1)]);
    }

    #[test]
    fn rational_roots_of_cubics() {
        // 2t^3 - 3t^2 - 3t + 2 = (t + 1)(2t - 1)(t - 2)
        let p = vec![rat(2), rat(-3), rat(-3), rat(2)];
        assert_eq!(rational_roots(&p), vec![rat(-1), ratio(1, 2), rat(2)]);
        assert_eq!(rational_roots(&[rat(0), rat(0), rat(1)]), vec![rat(0)]);
        assert!(rational_roots(&[rat(-2), rat(0), rat(0), rat(1)]).is_empty());
    }

    fn element(k: &NumberField) -> impl Strategy<Value = NumberFieldElement> {
        let k = k.clone();
        proptest::collection::vec((-9i64..=9, 1i64..=5), 3)
            .prop_map(move |v| k.element(v.into_iter().map(|(n, d)| ratio(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn inverse_cancels(a in element(&cube_root_two()), b in element(&cube_root_two())) {
            prop_assume!(!a.is_zero());
            let inv = a.inv().unwrap();
            prop_assert_eq!(a.mul(&b).mul(&inv), b);
        }
    }
}
