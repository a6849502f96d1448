use num_bigint::BigInt;

use super::bundle::{binomial, tautological_bundles, BundleClass};
use super::chow::GrassContext;
use crate::error::{Error, Result};

/// Dimension and degree of a locus in the projective space of forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusDegree {
    pub dim: usize,
    pub degree: BigInt,
}

/// `binom(binom(n + d - 1, n), n)`.
pub fn cone_degree_formula(n: usize, d: usize) -> BigInt {
    let inner = binomial((n + d - 1) as i64, n as i64);
    let inner = i64::try_from(inner).expect("small arguments");
    binomial(inner, n as i64)
}

/// Cones among degree-`d` forms in `n + 1` variables: a vertex point in
/// `P^n` plus a form in the remaining `n` variables.
pub fn cone_locus_dimension(n: usize, d: usize) -> usize {
    let forms = binomial((n + d - 1) as i64, d as i64);
    n + usize::try_from(forms).expect("small arguments") - 1
}

/// `∫_{P^n} s_n(Sym^d P^*)`, where `P` is the rank-`n` quotient bundle on
/// `P^n = G(1, n+1)`, cross-checked against [`cone_degree_formula`].
pub fn degree_cone_locus(n: usize, d: usize) -> Result<BigInt> {
    let ctx = GrassContext::new(1, n + 1)?;
    let (_, p) = tautological_bundles(ctx);
    let f = p.dual().sym_power(d)?;
    let degree = f.segre().component(n).integral();
    let formula = cone_degree_formula(n, d);
    if degree != formula {
        return Err(Error::Inconsistent(format!("Segre class gives {degree}, binomial formula gives {formula}")));
    }
    Ok(degree)
}

/// `E = 5 Sym^2 Q^* - ∧^2 Q^* ⊗ Q^*` on `G(3, 5)`.
pub fn vanishing_hessian_bundle() -> Result<BundleClass> {
    let ctx = GrassContext::new(3, 5)?;
    let (_, q) = tautological_bundles(ctx);
    let qd = q.dual();
    qd.sym_power(2)?.scale(5).difference(&qd.ext_power(2)?.tensor(&qd)?)
}

/// `(dim G + rk E - 1, ∫ s_6(E))`.
pub fn degree_vanishing_hessian_locus() -> Result<LocusDegree> {
    let e = vanishing_hessian_bundle()?;
    let ctx = e.context();
    let dim = ctx.dim() + e.rank() as usize - 1;
    Ok(LocusDegree { dim, degree: e.segre().component(ctx.dim()).integral() })
}

/// `∫ 3 s_6(E) + (c_1(Sym^2 Q^*) + c_1(Q)) s_5(E)`, Segre classes taken in
/// the projective-bundle-of-quotients convention.
pub fn degree_intersection_locus() -> Result<LocusDegree> {
    let e = vanishing_hessian_bundle()?;
    let ctx = e.context();
    let (_, q) = tautological_bundles(ctx);
    let s = e.quotient_segre();
    let c1 = q.dual().sym_power(2)?.chern_class(1).add(&q.chern_class(1));
    let integrand = s.component(6).scale(3).add(&c1.mul(&s.component(5)));
    Ok(LocusDegree { dim: 17, degree: integrand.integral() })
}

/// The same integrand with `s = c^{-1}`; kept to document the convention
/// gap.
pub fn degree_intersection_locus_inverse_chern() -> Result<BigInt> {
    let e = vanishing_hessian_bundle()?;
    let ctx = e.context();
    let (_, q) = tautological_bundles(ctx);
    let s = e.segre();
    let c1 = q.dual().sym_power(2)?.chern_class(1).add(&q.chern_class(1));
    Ok(s.component(6).scale(3).add(&c1.mul(&s.component(5))).integral())
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_degrees() {
        // frozen from the localization oracle
        assert_eq!(degree_cone_locus(4, 3).unwrap(), BigInt::from(1365));
        assert_eq!(degree_cone_locus(2, 2).unwrap(), BigInt::from(3));
        assert_eq!(degree_cone_locus(1, 1).unwrap(), BigInt::from(1));
        assert_eq!(degree_cone_locus(3, 2).unwrap(), BigInt::from(4));
        assert_eq!(cone_locus_dimension(4, 3), 23);
        assert_eq!(cone_degree_formula(4, 3), BigInt::from(1365));
    }

    #[test]
    fn vanishing_hessian_locus() {
        let e = vanishing_hessian_bundle().unwrap();
        assert_eq!(e.rank(), 13);
        assert_eq!(e.context().dim(), 6);
        assert_eq!(degree_vanishing_hessian_locus().unwrap(), LocusDegree { dim: 18, degree: BigInt::from(29960) });
    }

    #[test]
    fn intersection_locus() {
        assert_eq!(degree_intersection_locus().unwrap(), LocusDegree { dim: 17, degree: BigInt::from(116420) });
        assert_eq!(degree_intersection_locus_inverse_chern().unwrap(), BigInt::from(63340));
    }

    #[test]
    fn segre_conventions_agree_in_even_degree() {
        let e = vanishing_hessian_bundle().unwrap();
        assert_eq!(e.segre().component(6), e.quotient_segre().component(6));
        assert_eq!(e.segre().component(5), e.quotient_segre().component(5).neg());
    }
}
