use rand::Rng;

use crate::kernel::{rat, ExactMatrix, Rational};
use crate::polyring::{monomials_of_degree, Form, Polynomial};
use crate::random::seeded_rng;

/// Named cubic threefolds used as fixtures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalKind {
    SecantRnc,
    JoinConics,
    PerazzoS12,
    Fermat,
    /// Dense cubic with seeded coefficients in `[-3, 3]`.
    Random(u64),
}

/// A fixture cubic together with its kind.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalForm {
    pub kind: CanonicalKind,
    pub form: Form,
}

pub const PERAZZO_S12: &str = "x0*x3^2 + x1*x3*x4 + x2*x4^2";
/// `det [[x0,x1,x2],[x1,x2,x3],[x2,x3,x4]]`, expanded.
pub const SECANT_RNC: &str = "x0*x2*x4 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^3";
/// The symmetric `3 x 3` determinant restricted to one off-diagonal entry
/// being zero. `C1 = {x3 = x4 = 0, x0*x2 = x1^2}` and
/// `C2 = {x0 = x1 = 0, x2*x3 = x4^2}` meet only at `e2`.
pub const JOIN_CONICS: &str = "x0*x2*x3 - x0*x4^2 - x1^2*x3";
pub const FERMAT: &str = "x0^3 + x1^3 + x2^3 + x3^3 + x4^3";

pub fn canonical_form(kind: CanonicalKind) -> CanonicalForm {
    let parse = |text: &str| Form::parse(text, 5).expect("fixture parses");
    let form = match kind {
        CanonicalKind::SecantRnc => parse(SECANT_RNC),
        CanonicalKind::JoinConics => parse(JOIN_CONICS),
        CanonicalKind::PerazzoS12 => parse(PERAZZO_S12),
        CanonicalKind::Fermat => parse(FERMAT),
        CanonicalKind::Random(seed) => random_cubic(seed),
    };
    CanonicalForm { kind, form }
}

fn random_cubic(seed: u64) -> Form {
    let mut rng = seeded_rng(seed);
    loop {
        let poly = Polynomial::from_terms(
            5,
            monomials_of_degree(5, 3).into_iter().map(|m| (m, rat(rng.gen_range(-3..=3)))),
        );
        if let Ok(f) = Form::new(poly) {
            return f;
        }
    }
}

/// Seeded invertible integer matrix with entries in `[-2, 2]`.
pub fn random_invertible_matrix(n: usize, seed: u64) -> ExactMatrix<Rational> {
    let mut rng = seeded_rng(seed);
    loop {
        let m = ExactMatrix::from_fn(n, n, |_, _| rat(rng.gen_range(-2..=2)));
        if m.rank() == n {
            return m;
        }
    }
}

/// `f(Mx)` for a seeded invertible integer matrix `M`.
pub fn random_pgl_conjugate(f: &Form, seed: u64) -> Form {
    let m = random_invertible_matrix(f.nvars(), seed);
    f.substitute_linear(&m).expect("invertible substitution keeps f nonzero")
}
