use crate::kernel::{ExactMatrix, Rationals};
use crate::polyring::{gradient, monomials_of_degree, Form};

/// Whether `V(f)` is a cone, and the projective dimension of its vertex
/// (`-1` for the empty vertex).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConeInfo {
    pub is_cone: bool,
    pub vertex_dim: i64,
}

/// Cone test by linear dependence of the first partials. The vertex is the
/// projectivized kernel of the degree-one catalecticant.
pub fn is_cone(f: &Form) -> ConeInfo {
    let n = f.nvars();
    let grad = gradient(f);
    let targets = monomials_of_degree(n, f.degree().saturating_sub(1));
    let cat = ExactMatrix::from_fn(targets.len(), n, |i, j| grad[j].coefficient(&targets[i]));
    let nullity = n - crate::kernel::rank(&Rationals, &cat);
    ConeInfo { is_cone: nullity > 0, vertex_dim: nullity as i64 - 1 }
}

/// True iff the symbolic Hessian determinant is the zero polynomial.
pub fn has_vanishing_hessian(f: &Form) -> bool {
    f.hessian_determinant().is_zero()
}
