//! Artinian Gorenstein algebras of forms, higher Hessians, Lefschetz
//! elements and Jordan types.

mod algebra;
mod cone;
mod jordan;

pub use algebra::AGAlgebra;
pub use cone::{has_vanishing_hessian, is_cone, ConeInfo};
pub use jordan::{DominanceOrder, JordanType};

use num_traits::Zero;

use crate::kernel::{det_bareiss, det_fraction_free, ExactMatrix, Rational, Rationals};
use crate::polyring::{Polynomial, PolynomialRing};
use crate::random::{integer_vector, seeded_rng};

/// `Hess^k_f = [alpha_i(alpha_j(f))]` on the stored basis of `A_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct HessianRecord {
    pub k: u32,
    pub matrix: ExactMatrix<Polynomial>,
    pub symbolic_det: Polynomial,
}

impl HessianRecord {
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        if self.matrix.rows() == 0 {
            return Rational::from_integer(1.into());
        }
        let at = self.matrix.map(|p| p.evaluate(&Rationals, point));
        det_bareiss(&Rationals, &at)
    }
}

/// Outcome of the strong Lefschetz test.
#[derive(Clone, Debug, PartialEq)]
pub struct SlpResult {
    pub holds: bool,
    /// A linear form `a_0 X_0 + ... + a_N X_N` that is a strong Lefschetz
    /// element, when one exists.
    pub witness: Option<Vec<Rational>>,
}

const WITNESS_ROUNDS: usize = 8;
const WITNESS_TRIES: usize = 16;

impl AGAlgebra {
    /// The `k`-th Hessian, for `k <= d/2`. `Hess^0` is the `1 x 1` matrix `[f]`.
    pub fn higher_hessian(&self, k: u32) -> &HessianRecord {
        assert!(2 * k <= self.socle_degree(), "higher Hessians are defined for k <= d/2");
        &self.hessians()[k as usize]
    }

    pub(crate) fn hessians(&self) -> &[HessianRecord] {
        self.hessians.get_or_init(|| (0..=self.socle_degree() / 2).map(|k| self.compute_hessian(k)).collect())
    }

    fn compute_hessian(&self, k: u32) -> HessianRecord {
        let n = self.nvars();
        let f = self.form().poly();
        let basis = self.basis(k);
        let firsts: Vec<Polynomial> = basis.iter().map(|m| f.apply_monomial(m)).collect();
        let size = basis.len();
        let mut matrix = ExactMatrix::from_fn(size, size, |_, _| Polynomial::zero(n));
        for i in 0..size {
            for j in i..size {
                let e = firsts[j].apply_monomial(&basis[i]);
                *matrix.get_mut(j, i) = e.clone();
                *matrix.get_mut(i, j) = e;
            }
        }
        let symbolic_det = if matrix.entries().iter().all(|p| p.total_degree().unwrap_or(0) == 0) {
            // socle-degree pairing: constant entries, plain elimination
            let constants = matrix.map(|p| p.coefficient(&crate::polyring::Monomial::one(n)));
            Polynomial::constant(n, det_bareiss(&Rationals, &constants))
        } else {
            det_fraction_free(&PolynomialRing { nvars: n }, &matrix)
        };
        HessianRecord { k, matrix, symbolic_det }
    }

    /// True iff `hess^k_f(a) != 0` for every `0 <= k <= d/2`.
    pub fn is_lefschetz_element(&self, a: &[Rational]) -> bool {
        assert_eq!(a.len(), self.nvars(), "point has the wrong length");
        self.hessians().iter().all(|h| !h.evaluate(a).is_zero())
    }

    /// SLP holds iff no higher Hessian determinant vanishes identically. A
    /// witness is then found by seeded search over integer vectors.
    pub fn has_slp(&self, seed: u64) -> SlpResult {
        if self.hessians().iter().any(|h| h.symbolic_det.is_zero()) {
            return SlpResult { holds: false, witness: None };
        }
        let mut rng = seeded_rng(seed);
        let mut bound = 2;
        for _ in 0..WITNESS_ROUNDS {
            for _ in 0..WITNESS_TRIES {
                let a = integer_vector(&mut rng, self.nvars(), bound);
                if self.hessians().iter().all(|h| !h.symbolic_det.evaluate(&Rationals, &a).is_zero()) {
                    return SlpResult { holds: true, witness: Some(a) };
                }
            }
            bound *= 2;
        }
        // nonzero polynomials of small degree cannot vanish on all of these
        unreachable!("no Lefschetz witness found although every Hessian is nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;
    use crate::polyring::{hessian_matrix, parse_polynomial, Form};

    fn perazzo() -> AGAlgebra {
        AGAlgebra::build(&Form::parse("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5).unwrap())
    }

    fn fermat() -> AGAlgebra {
        AGAlgebra::build(&Form::parse("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", 5).unwrap())
    }

    #[test]
    fn hessian_zero_is_the_form() {
        let a = perazzo();
        let h0 = a.higher_hessian(0);
        assert_eq!(h0.matrix.rows(), 1);
        assert_eq!(&h0.symbolic_det, a.form().poly());
    }

    #[test]
    fn first_hessian_is_the_classical_one() {
        for a in [perazzo(), fermat()] {
            assert_eq!(a.higher_hessian(1).matrix, hessian_matrix(a.form()));
        }
        assert!(perazzo().higher_hessian(1).symbolic_det.is_zero());
        assert_eq!(fermat().higher_hessian(1).symbolic_det, parse_polynomial("7776*x0*x1*x2*x3*x4", 5).unwrap());
    }

    #[test]
    fn small_hessians() {
        let a = AGAlgebra::build(&Form::parse("x0^3", 1).unwrap());
        assert_eq!(a.higher_hessian(1).symbolic_det, parse_polynomial("6*x0", 1).unwrap());
        // A_2 of x0^5 + x1^5 is 2-dimensional (X0*X1 annihilates f)
        let q = AGAlgebra::build(&Form::parse("x0^5 + x1^5", 2).unwrap());
        let h = q.higher_hessian(2);
        assert_eq!(h.matrix.rows(), 2);
        assert!(h.matrix.is_symmetric());
        assert_eq!(h.symbolic_det, parse_polynomial("14400*x0*x1", 2).unwrap());
    }

    #[test]
    fn lefschetz_elements() {
        let ones = vec![rat(1); 5];
        assert!(fermat().is_lefschetz_element(&ones));
        assert!(!perazzo().is_lefschetz_element(&ones));
        // f(a) = 0
        assert!(!fermat().is_lefschetz_element(&[rat(1), rat(-1), rat(0), rat(0), rat(0)]));
    }

    #[test]
    fn slp_decisions() {
        assert_eq!(perazzo().has_slp(0), SlpResult { holds: false, witness: None });
        let f = fermat();
        let r = f.has_slp(0);
        assert!(r.holds);
        assert!(f.is_lefschetz_element(r.witness.as_ref().unwrap()));
        let cube = AGAlgebra::build(&Form::parse("x0^3", 1).unwrap());
        assert!(cube.has_slp(3).holds);
    }
}
