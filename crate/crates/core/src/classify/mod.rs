//! Classification of cubic threefolds in `P^4`: cones, the vanishing-Hessian
//! (Perazzo) cubic, the two developable cases and the non-developable rest.

mod fixtures;

pub use fixtures::{
    canonical_form, random_invertible_matrix, random_pgl_conjugate, CanonicalForm, CanonicalKind,
    FERMAT, JOIN_CONICS, PERAZZO_S12, SECANT_RNC,
};

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::apolar::{has_vanishing_hessian, is_cone, AGAlgebra};
use crate::error::{Error, Result};
use crate::kernel::{rank, rational_roots, ExactMatrix, Field, NumberField, Rational, Rationals, Ring};
use crate::polyring::{gradient, hessian_matrix, monomials_of_degree, Form, Polynomial};
use crate::random::{integer_vector, seeded_rng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CubicLabel {
    Cone,
    PerazzoS12,
    SecantRnc,
    JoinConics,
    NonDevelopable,
    Unrecognized,
}

impl CubicLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Cone => "CONE",
            Self::PerazzoS12 => "PERAZZO_S12",
            Self::SecantRnc => "SECANT_RNC",
            Self::JoinConics => "JOIN_CONICS",
            Self::NonDevelopable => "NON_DEVELOPABLE",
            Self::Unrecognized => "UNRECOGNIZED",
        }
    }
}

impl fmt::Display for CubicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Everything the decision tree looked at. `dual_dim` and `stab_dim` are
/// only computed when the tree reaches them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsRecord {
    pub is_cone: bool,
    pub vertex_dim: i64,
    pub hess_vanishes: bool,
    pub dual_dim: Option<i64>,
    pub stab_dim: Option<usize>,
    pub hilbert: Vec<usize>,
    /// Why the result is UNRECOGNIZED, when it is.
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicClass {
    pub label: CubicLabel,
    pub invariants: InvariantsRecord,
}

const DUAL_RETRIES: usize = 20;
const LINE_BOUND: i64 = 10;

fn require_cubic_threefold(f: &Form) -> Result<()> {
    if f.degree() != 3 || f.nvars() != 5 {
        return Err(Error::NotCubicThreefold { degree: f.degree(), nvars: f.nvars() });
    }
    Ok(())
}

/// Dimension of `{A : D_A f in span(f)}` with `D_A f = sum A_ij x_i df/dx_j`.
///
/// One column per unknown `A_ij` and a last one for `-f`; the nullity of
/// this coefficient system equals the dimension of the `A`-projection since
/// `A = 0` forces `lambda = 0`.
pub fn stabilizer_dimension(f: &Form) -> usize {
    let n = f.nvars();
    let grad = gradient(f);
    let mut cols: Vec<Polynomial> = Vec::with_capacity(n * n + 1);
    for i in 0..n {
        for g in &grad {
            cols.push(&Polynomial::var(n, i) * g);
        }
    }
    cols.push(-f.poly());
    let monos = monomials_of_degree(n, f.degree());
    let system = ExactMatrix::from_fn(monos.len(), cols.len(), |r, c| cols[c].coefficient(&monos[r]));
    cols.len() - system.rank()
}

/// `f(p + t q)` as coefficients from the constant term up, by interpolation
/// at `t = 0..=d`.
fn restrict_to_line(f: &Form, p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    let d = f.degree() as usize;
    let nodes: Vec<Rational> = (0..=d as i64).map(crate::kernel::rat).collect();
    let values: Vec<Rational> = nodes
        .iter()
        .map(|t| {
            let pt: Vec<Rational> = p.iter().zip(q).map(|(a, b)| a + t * b).collect();
            f.poly().evaluate(&Rationals, &pt)
        })
        .collect();
    // Vandermonde solve
    let v = ExactMatrix::from_fn(d + 1, d + 2, |i, j| {
        if j == d + 1 {
            values[i].clone()
        } else {
            num_traits::pow(nodes[i].clone(), j)
        }
    });
    let reduced = crate::kernel::rref(&Rationals, &v);
    let mut coeffs: Vec<Rational> = (0..=d).map(|i| reduced.matrix.get(i, d + 1).clone()).collect();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// Rank of the Hessian of `f` at `point`, or `None` when the point is
/// singular on `V(f)`.
fn hessian_rank_at<F: Field>(field: &F, f: &Form, point: &[F::Elem]) -> Option<usize> {
    let grad = gradient(f);
    if grad.iter().all(|g| field.is_zero(&g.evaluate(field, point))) {
        return None;
    }
    let h = hessian_matrix(f).map(|p| p.evaluate(field, point));
    Some(rank(field, &h))
}

/// Hessian rank at a point of `V(f)` on the line `p + t q`, or `None` if the
/// line gives no usable smooth point.
fn hessian_rank_on_line(f: &Form, p: &[Rational], q: &[Rational]) -> Result<Option<usize>> {
    let m = restrict_to_line(f, p, q);
    if m.len() < 2 {
        // the line lies on V(f) or misses it
        return Ok(None);
    }
    if let Some(r) = rational_roots(&m).first() {
        let pt: Vec<Rational> = p.iter().zip(q).map(|(a, b)| a + r * b).collect();
        return Ok(hessian_rank_at(&Rationals, f, &pt));
    }
    let field = NumberField::new(m)?;
    let t = field.generator();
    let pt: Vec<_> = p
        .iter()
        .zip(q)
        .map(|(a, b)| field.add(&field.from_rational(a), &field.mul(&t, &field.from_rational(b))))
        .collect();
    Ok(hessian_rank_at(&field, f, &pt))
}

/// `dim X^* = rank Hess_f(x) - 2` at a random smooth point `x` of `V(f)`.
///
/// The point is the intersection of `V(f)` with a seeded random line,
/// taken over `Q` when the restricted cubic has a rational root and over
/// the number field it generates otherwise.
pub fn dual_variety_dimension(f: &Form, seed: u64) -> Result<i64> {
    require_cubic_threefold(f)?;
    if is_cone(f).is_cone {
        return Err(Error::ConeInput("dual_variety_dimension"));
    }
    let mut rng = seeded_rng(seed);
    for _ in 0..DUAL_RETRIES {
        let p = integer_vector(&mut rng, 5, LINE_BOUND);
        let q = integer_vector(&mut rng, 5, LINE_BOUND);
        let rank = hessian_rank_on_line(f, &p, &q)?;
        if let Some(r) = rank {
            return Ok(r as i64 - 2);
        }
    }
    Err(Error::RetryCapExhausted {
        attempts: DUAL_RETRIES,
        reason: "no smooth point found on random lines".into(),
    })
}

/// The decision tree: cone, vanishing Hessian, dual dimension, then the
/// stabilizer dimension to separate the two developable cases.
pub fn classify(f: &Form, seed: u64) -> Result<CubicClass> {
    require_cubic_threefold(f)?;
    let cone = is_cone(f);
    let mut inv = InvariantsRecord {
        is_cone: cone.is_cone,
        vertex_dim: cone.vertex_dim,
        hess_vanishes: has_vanishing_hessian(f),
        dual_dim: None,
        stab_dim: None,
        hilbert: AGAlgebra::build(f).hilbert(),
        diagnostics: Vec::new(),
    };
    let done = |label, inv| Ok(CubicClass { label, invariants: inv });
    if inv.is_cone {
        return done(CubicLabel::Cone, inv);
    }
    if inv.hess_vanishes {
        return done(CubicLabel::PerazzoS12, inv);
    }
    let dual = match dual_variety_dimension(f, seed) {
        Ok(d) => d,
        Err(e) => {
            inv.diagnostics.push(e.to_string());
            return done(CubicLabel::Unrecognized, inv);
        }
    };
    inv.dual_dim = Some(dual);
    if dual == 3 {
        return done(CubicLabel::NonDevelopable, inv);
    }
    let stab = stabilizer_dimension(f);
    inv.stab_dim = Some(stab);
    match stab {
        4 => done(CubicLabel::SecantRnc, inv),
        5 => done(CubicLabel::JoinConics, inv),
        _ => {
            inv.diagnostics.push(format!("developable with dual dimension {dual} but stabilizer dimension {stab}"));
            done(CubicLabel::Unrecognized, inv)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(kind: CanonicalKind) -> Form {
        canonical_form(kind).form
    }

    #[test]
    fn stabilizer_dimensions() {
        // frozen from the classification oracle
        assert_eq!(stabilizer_dimension(&fixture(CanonicalKind::SecantRnc)), 4);
        assert_eq!(stabilizer_dimension(&fixture(CanonicalKind::JoinConics)), 5);
        assert_eq!(stabilizer_dimension(&fixture(CanonicalKind::PerazzoS12)), 7);
        assert_eq!(stabilizer_dimension(&fixture(CanonicalKind::Fermat)), 1);
    }

    #[test]
    fn stabilizer_is_conjugation_invariant() {
        for kind in [CanonicalKind::SecantRnc, CanonicalKind::JoinConics] {
            let f = fixture(kind);
            let g = random_pgl_conjugate(&f, 11);
            assert_eq!(stabilizer_dimension(&f), stabilizer_dimension(&g));
        }
    }

    #[test]
    fn dual_dimensions() {
        assert_eq!(dual_variety_dimension(&fixture(CanonicalKind::Fermat), 0).unwrap(), 3);
        for kind in [CanonicalKind::SecantRnc, CanonicalKind::JoinConics, CanonicalKind::PerazzoS12] {
            for seed in 0..5 {
                assert_eq!(dual_variety_dimension(&fixture(kind), seed).unwrap(), 2, "{kind:?} seed {seed}");
            }
        }
        assert!(matches!(
            dual_variety_dimension(&Form::parse("x0^3 + x1^3", 5).unwrap(), 0),
            Err(Error::ConeInput(_))
        ));
    }

    #[test]
    fn line_restriction() {
        let f = fixture(CanonicalKind::Fermat);
        let p = [1, 0, 0, 0, 0].map(crate::kernel::rat);
        let q = [0, 1, 0, 0, 0].map(crate::kernel::rat);
        // (1)^3 + t^3
        let m = restrict_to_line(&f, &p, &q);
        assert_eq!(m, [1, 0, 0, 1].map(crate::kernel::rat));
    }

    #[test]
    fn points_over_number_fields() {
        let r = |v: [i64; 5]| v.map(crate::kernel::rat);
        // f(1, 1, t, 0, 0) = t^3 + 2 has no rational root
        let m = restrict_to_line(&fixture(CanonicalKind::Fermat), &r([1, 1, 0, 0, 0]), &r([0, 0, 1, 0, 0]));
        assert!(rational_roots(&m).is_empty());
        let rank = hessian_rank_on_line(&fixture(CanonicalKind::Fermat), &r([1, 1, 0, 0, 0]), &r([0, 0, 1, 0, 0]));
        assert_eq!(rank.unwrap(), Some(3));
        let rank = hessian_rank_on_line(&fixture(CanonicalKind::Fermat), &r([1, 1, 1, 0, 0]), &r([0, 0, 0, 1, 1]));
        assert_eq!(rank.unwrap(), Some(5));
        let rank = hessian_rank_on_line(&fixture(CanonicalKind::PerazzoS12), &r([1, 2, 0, 1, 1]), &r([0, 1, 3, 0, 2]));
        assert_eq!(rank.unwrap(), Some(4));
    }

    #[test]
    fn fixture_labels() {
        let cases = [
            (CanonicalKind::SecantRnc, CubicLabel::SecantRnc),
            (CanonicalKind::JoinConics, CubicLabel::JoinConics),
            (CanonicalKind::PerazzoS12, CubicLabel::PerazzoS12),
            (CanonicalKind::Fermat, CubicLabel::NonDevelopable),
        ];
        for (kind, label) in cases {
            let c = classify(&fixture(kind), 0).unwrap();
            assert_eq!(c.label, label);
            assert!(c.invariants.diagnostics.is_empty());
        }
        let cone = classify(&Form::parse("x0^3 + x1^3 + x2^3", 5).unwrap(), 0).unwrap();
        assert_eq!(cone.label, CubicLabel::Cone);
        assert_eq!(cone.invariants.vertex_dim, 1);
    }

    #[test]
    fn developable_signatures_are_distinct() {
        let sig = |kind| {
            let f = fixture(kind);
            (has_vanishing_hessian(&f), stabilizer_dimension(&f))
        };
        let a = sig(CanonicalKind::SecantRnc);
        let b = sig(CanonicalKind::JoinConics);
        let c = sig(CanonicalKind::PerazzoS12);
        assert!(a != b && b != c && a != c);
    }

    #[test]
    fn non_cubics_are_rejected() {
        let quartic = Form::parse("x0^4 + x1^4", 5).unwrap();
        assert!(matches!(classify(&quartic, 0), Err(Error::NotCubicThreefold { degree: 4, nvars: 5 })));
    }

    #[test]
    fn labels_serialize_in_caps() {
        assert_eq!(serde_json::to_string(&CubicLabel::PerazzoS12).unwrap(), "\"PERAZZO_S12\"");
        assert_eq!(serde_json::to_string(&CubicLabel::NonDevelopable).unwrap(), "\"NON_DEVELOPABLE\"");
        assert_eq!(CubicLabel::SecantRnc.to_string(), "SECANT_RNC");
    }
}
