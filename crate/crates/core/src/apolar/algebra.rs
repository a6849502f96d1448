use num_traits::Zero;

use crate::kernel::{rref, ExactMatrix, Rational, Rationals};
use crate::polyring::{monomials_of_degree, DiffOperator, Form, Monomial, Polynomial};

/// One graded piece `A_k = Q_k / (Ann_f)_k`.
#[derive(Clone, Debug)]
pub(crate) struct GradedPiece {
    /// All degree-`k` monomials of the dual ring, decreasing lex order.
    pub(crate) monomials: Vec<Monomial>,
    /// Catalecticant `Q_k -> R_{d-k}`, `alpha -> alpha(f)`; one column per
    /// entry of `monomials`, one row per degree-`(d-k)` monomial of `R`.
    pub(crate) catalecticant: ExactMatrix<Rational>,
    /// Indices into `monomials` whose classes form the stored basis of `A_k`.
    pub(crate) basis: Vec<usize>,
    /// `a_k x |Q_k|`: column `j` holds the class of `monomials[j]` in the
    /// stored basis.
    pub(crate) coordinates: ExactMatrix<Rational>,
    /// Basis of `(Ann_f)_k` as coefficient vectors over `monomials`.
    pub(crate) ann_kernel: Vec<Vec<Rational>>,
}

impl GradedPiece {
    fn build(f: &Form, k: u32) -> Self {
        let n = f.nvars();
        let d = f.degree();
        let monomials = monomials_of_degree(n, k);
        let targets = if k <= d { monomials_of_degree(n, d - k) } else { Vec::new() };
        let images: Vec<Polynomial> = monomials.iter().map(|m| f.poly().apply_monomial(m)).collect();
        let catalecticant =
            ExactMatrix::from_fn(targets.len(), monomials.len(), |i, j| images[j].coefficient(&targets[i]));
        let reduced = rref(&Rationals, &catalecticant);
        let rank = reduced.rank();
        let coordinates = ExactMatrix::from_fn(rank, monomials.len(), |i, j| reduced.matrix.get(i, j).clone());
        let ann_kernel = reduced.kernel_basis(&Rationals);
        Self { monomials, catalecticant, basis: reduced.pivots, coordinates, ann_kernel }
    }

    pub(crate) fn dim(&self) -> usize {
        self.basis.len()
    }

    pub(crate) fn index_of(&self, m: &Monomial) -> usize {
        // monomials are sorted decreasingly
        self.monomials
            .binary_search_by(|probe| m.cmp(probe))
            .expect("monomial of the right degree")
    }
}

/// The Artinian Gorenstein algebra `A_f = Q / Ann_f` of a form `f`.
///
/// Each graded piece is read off one reduced row echelon form of the
/// catalecticant `Q_k -> R_{d-k}`: its kernel is `(Ann_f)_k`, its pivot
/// columns give the lexicographically first monomials that form a basis of
/// `A_k`, and its nonzero rows express every monomial in that basis.
/// Cones are accepted; their Hilbert vector then has `a_1 < N + 1`.
#[derive(Clone, Debug)]
pub struct AGAlgebra {
    form: Form,
    pieces: Vec<GradedPiece>,
    pub(crate) hessians: std::sync::OnceLock<Vec<super::HessianRecord>>,
}

impl AGAlgebra {
    pub fn build(f: &Form) -> Self {
        let pieces = (0..=f.degree()).map(|k| GradedPiece::build(f, k)).collect();
        Self { form: f.clone(), pieces, hessians: std::sync::OnceLock::new() }
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn socle_degree(&self) -> u32 {
        self.form.degree()
    }

    pub fn nvars(&self) -> usize {
        self.form.nvars()
    }

    /// `(1, a_1, ..., a_d)`.
    pub fn hilbert(&self) -> Vec<usize> {
        self.pieces.iter().map(GradedPiece::dim).collect()
    }

    pub fn dim(&self) -> usize {
        self.pieces.iter().map(GradedPiece::dim).sum()
    }

    pub(crate) fn piece(&self, k: u32) -> Option<&GradedPiece> {
        self.pieces.get(k as usize)
    }

    /// Monomials whose classes form the stored basis of `A_k` (empty above
    /// the socle degree).
    pub fn basis(&self, k: u32) -> Vec<Monomial> {
        self.piece(k)
            .map(|p| p.basis.iter().map(|&i| p.monomials[i].clone()).collect())
            .unwrap_or_default()
    }

    /// The degree-`k` catalecticant matrix (`R_{d-k}` rows, `Q_k` columns).
    pub fn catalecticant(&self, k: u32) -> Option<&ExactMatrix<Rational>> {
        self.piece(k).map(|p| &p.catalecticant)
    }

    /// Dimension of `(Ann_f)_k`, for every `k` including `k > d`.
    pub fn ann_dim(&self, k: u32) -> usize {
        match self.piece(k) {
            Some(p) => p.ann_kernel.len(),
            None => monomials_of_degree(self.nvars(), k).len(),
        }
    }

    /// A basis of `(Ann_f)_k` as operators.
    pub fn ann_basis(&self, k: u32) -> Vec<DiffOperator> {
        let n = self.nvars();
        match self.piece(k) {
            Some(p) => p
                .ann_kernel
                .iter()
                .map(|v| {
                    DiffOperator::new(Polynomial::from_terms(
                        n,
                        p.monomials.iter().cloned().zip(v.iter().cloned()),
                    ))
                })
                .collect(),
            None => monomials_of_degree(n, k)
                .into_iter()
                .map(|m| DiffOperator::new(Polynomial::monomial(m, Rational::from_integer(1.into()))))
                .collect(),
        }
    }

    /// Coordinates in the stored basis of `A_k` of the class of a
    /// homogeneous operator of degree `k`.
    pub fn class_of(&self, op: &DiffOperator, k: u32) -> Vec<Rational> {
        let Some(piece) = self.piece(k) else {
            return Vec::new();
        };
        let mut out = vec![Rational::zero(); piece.dim()];
        for (m, c) in op.poly().terms() {
            assert_eq!(m.degree(), k, "operator is not homogeneous of degree {k}");
            let j = piece.index_of(m);
            for (i, slot) in out.iter_mut().enumerate() {
                *slot += c * piece.coordinates.get(i, j);
            }
        }
        out
    }

    /// Degreewise comparison of the ideal generated by `generators` with
    /// `Ann_f`, in every degree up to `d + 1`.
    pub fn ann_generators_match(&self, generators: &[DiffOperator]) -> bool {
        self.ann_generators_match_up_to(generators, self.socle_degree() + 1)
    }

    /// Checks that the ideal generated by `generators` agrees with `Ann_f` in
    /// every degree up to `max_degree`.
    ///
    /// In degree `k` the span of `m * g` (over generators `g` and monomials
    /// `m` of complementary degree) is compared with `(Ann_f)_k`: every
    /// product must annihilate `f` and the span must have full dimension.
    /// Agreement beyond `max_degree` is not asserted. A generator that is not
    /// homogeneous makes the check fail, since `Ann_f` is a graded ideal and
    /// the comparison is degreewise.
    pub fn ann_generators_match_up_to(&self, generators: &[DiffOperator], max_degree: u32) -> bool {
        let n = self.nvars();
        if generators.iter().any(|g| g.nvars() != n || !g.poly().is_homogeneous()) {
            return false;
        }
        for k in 0..=max_degree {
            let monos = monomials_of_degree(n, k);
            let mut rows: Vec<Vec<Rational>> = Vec::new();
            for g in generators {
                let Some(gd) = g.poly().total_degree() else { continue };
                if gd > k {
                    continue;
                }
                for m in monomials_of_degree(n, k - gd) {
                    let product = &Polynomial::monomial(m, Rational::from_integer(1.into())) * g.poly();
                    if k <= self.socle_degree()
                        && !DiffOperator::new(product.clone()).apply(self.form.poly()).is_zero()
                    {
                        return false;
                    }
                    rows.push(monos.iter().map(|mm| product.coefficient(mm)).collect());
                }
            }
            let span = ExactMatrix::from_rows(monos.len(), rows).rank();
            if span != self.ann_dim(k) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;
    use crate::polyring::parse_operator;

    fn perazzo() -> AGAlgebra {
        AGAlgebra::build(&Form::parse("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5).unwrap())
    }

    #[test]
    fn hilbert_vectors() {
        assert_eq!(perazzo().hilbert(), vec![1, 5, 5, 1]);
        let fermat = AGAlgebra::build(&Form::parse("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", 5).unwrap());
        assert_eq!(fermat.hilbert(), vec![1, 5, 5, 1]);
        let power = AGAlgebra::build(&Form::parse("x0^6", 1).unwrap());
        assert_eq!(power.hilbert(), vec![1; 7]);
        let cone = AGAlgebra::build(&Form::parse("x0^3 + x1^3", 5).unwrap());
        assert_eq!(cone.hilbert(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn perazzo_catalecticant_is_injective_in_degree_one() {
        let a = perazzo();
        assert!(a.ann_basis(1).is_empty());
        assert_eq!(a.catalecticant(1).unwrap().rank(), 5);
        assert_eq!(a.basis(1).len(), 5);
    }

    #[test]
    fn basis_is_lexicographically_first() {
        // X0*X1 kills x0^5 + x1^5, so the degree-2 basis skips it
        let a = AGAlgebra::build(&Form::parse("x0^5 + x1^5", 2).unwrap());
        let b: Vec<String> = a.basis(2).iter().map(|m| m.to_string()).collect();
        assert_eq!(b, vec!["x0^2", "x1^2"]);
    }

    /// The quotient presentation of the non-SLP (1,5,5,1) algebra. `two`
    /// rescales X1; the literal list (`two = 1`) is written for the
    /// contraction action, and `X1 -> 2*X1` carries it to `Ann_f` under
    /// differentiation.
    fn perazzo_annihilator_generators(two: i64) -> Vec<DiffOperator> {
        let mut gens = Vec::new();
        for i in 0..3 {
            for j in i..3 {
                gens.push(format!("X{i}*X{j}"));
            }
        }
        gens.extend(["X0*X4", "X2*X3", "X1*X3 - X2*X4", "X0*X3 - X1*X4"].map(String::from));
        gens.extend(["X3^3", "X3^2*X4", "X3*X4^2", "X4^3"].map(String::from));
        let mut scale = ExactMatrix::identity(5);
        *scale.get_mut(1, 1) = rat(two);
        gens.iter()
            .map(|g| DiffOperator::new(parse_operator(g, 5).unwrap().poly().substitute_linear(&scale)))
            .collect()
    }

    #[test]
    fn perazzo_annihilator_matches_known_generators() {
        let a = perazzo();
        // frozen from the apolarity oracle
        assert!(a.ann_generators_match_up_to(&perazzo_annihilator_generators(2), 4));
        assert!(!a.ann_generators_match_up_to(&perazzo_annihilator_generators(1), 4));
        let killing = perazzo_annihilator_generators(1).iter().filter(|g| g.apply(a.form().poly()).is_zero()).count();
        assert_eq!(killing, 12);
        assert!(!a.ann_generators_match(&[parse_operator("X0", 5).unwrap()]));
        // dropping a generator loses degree-2 span
        let mut fewer = perazzo_annihilator_generators(2);
        fewer.remove(7);
        assert!(!a.ann_generators_match(&fewer));
        // the literal list is Ann of the equivalent form with x1 doubled
        let b = AGAlgebra::build(&Form::parse("x0*x3^2 + 2*x1*x3*x4 + x2*x4^2", 5).unwrap());
        assert!(b.ann_generators_match_up_to(&perazzo_annihilator_generators(1), 4));
    }

    #[test]
    fn self_consistency_with_own_kernel() {
        let a = perazzo();
        let gens: Vec<DiffOperator> = (0..=4).flat_map(|k| a.ann_basis(k)).collect();
        assert!(a.ann_generators_match(&gens)
            && a.ann_generators_match_up_to(&gens, 6));
    }

    #[test]
    fn classes_in_stored_basis() {
        let a = perazzo();
        // 2*X1*X3 = X2*X4 modulo Ann_f; the basis picks the lex-first one
        let x1x3 = a.class_of(&parse_operator("2*X1*X3", 5).unwrap(), 2);
        let x2x4 = a.class_of(&parse_operator("X2*X4", 5).unwrap(), 2);
        assert_eq!(x1x3, x2x4);
        assert_eq!(x1x3.iter().filter(|c| !c.is_zero()).count(), 1);
        assert!(a.class_of(&parse_operator("X0^2", 5).unwrap(), 2).iter().all(Zero::is_zero));
        assert_eq!(a.class_of(&parse_operator("1", 5).unwrap(), 0), vec![rat(1)]);
    }
}
