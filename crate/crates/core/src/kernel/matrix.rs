use std::fmt;

use super::field::{Field, Rationals, Ring};
use super::Rational;

/// Dense row-major matrix. The entry type is unconstrained so the same
/// container holds rationals, number-field elements and polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T> ExactMatrix<T> {
    /// Panics unless `entries.len() == rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must equal rows * cols");
        Self { rows, cols, entries }
    }

    /// Builds a matrix from equal-length rows. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row);
        }
        Self::new(nrows, cols, entries)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T: Clone> ExactMatrix<T> {
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn is_symmetric(&self) -> bool
    where
        T: PartialEq,
    {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl ExactMatrix<Rational> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Rationals.zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rationals.one() } else { Rationals.zero() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&v| super::rat(v)).collect()).collect())
    }

    pub fn rank(&self) -> usize {
        rank(&Rationals, self)
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        kernel_basis(&Rationals, self)
    }

    pub fn det(&self) -> Rational {
        det_bareiss(&Rationals, self)
    }
}

impl<T: fmt::Display> fmt::Display for ExactMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with its pivot columns.
///
/// Pivot columns are chosen greedily from the left, so they index the
/// lexicographically first maximal independent set of columns, and column
/// `j` of the reduced matrix holds the coordinates of the original column `j`
/// in terms of those pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<T> {
    pub matrix: ExactMatrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: Clone> Rref<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Null-space basis read off the reduced form, one vector per free column.
    pub fn kernel_basis<F: Field<Elem = T>>(&self, field: &F) -> Vec<Vec<T>> {
        let cols = self.matrix.cols;
        let mut is_pivot = vec![false; cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![field.zero(); cols];
                v[free] = field.one();
                for (row, &p) in self.pivots.iter().enumerate() {
                    v[p] = field.neg(self.matrix.get(row, free));
                }
                v
            })
            .collect()
    }
}

pub fn rref<F: Field>(field: &F, m: &ExactMatrix<F::Elem>) -> Rref<F::Elem> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(a.get(i, c))) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = field.inv(a.get(r, c)).expect("pivot is nonzero");
        for j in c..cols {
            let v = field.mul(a.get(r, j), &inv);
            *a.get_mut(r, j) = v;
        }
        for i in 0..rows {
            if i == r || field.is_zero(a.get(i, c)) {
                continue;
            }
            let factor = a.get(i, c).clone();
            for j in c..cols {
                let v = field.sub(a.get(i, j), &field.mul(&factor, a.get(r, j)));
                *a.get_mut(i, j) = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { matrix: a, pivots }
}

pub fn rank<F: Field>(field: &F, m: &ExactMatrix<F::Elem>) -> usize {
    rref(field, m).rank()
}

/// Basis of the right null space `{v : Mv = 0}`, one vector per free column.
pub fn kernel_basis<F: Field>(field: &F, m: &ExactMatrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    rref(field, m).kernel_basis(field)
}

pub fn mat_vec<R: Ring>(ring: &R, m: &ExactMatrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(m.cols, v.len(), "dimension mismatch");
    (0..m.rows)
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v)
                .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
        })
        .collect()
}

pub fn mat_mul<R: Ring>(
    ring: &R,
    a: &ExactMatrix<R::Elem>,
    b: &ExactMatrix<R::Elem>,
) -> ExactMatrix<R::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch");
    ExactMatrix::from_fn(a.rows, b.cols, |i, j| {
        (0..a.cols).fold(ring.zero(), |acc, t| ring.add(&acc, &ring.mul(a.get(i, t), b.get(t, j))))
    })
}

/// Determinant over a field by Bareiss elimination. Every intermediate
/// division is exact, so over `Q` the entries stay as small as the minors.
pub fn det_bareiss<F: Field>(field: &F, m: &ExactMatrix<F::Elem>) -> F::Elem {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return field.one();
    }
    let mut a = m.clone();
    let mut sign_flip = false;
    let mut prev = field.one();
    for k in 0..n - 1 {
        if field.is_zero(a.get(k, k)) {
            let Some(p) = (k + 1..n).find(|&i| !field.is_zero(a.get(i, k))) else {
                return field.zero();
            };
            a.swap_rows(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = field.sub(
                    &field.mul(a.get(i, j), a.get(k, k)),
                    &field.mul(a.get(i, k), a.get(k, j)),
                );
                *a.get_mut(i, j) = field.div(&num, &prev).expect("Bareiss pivot is nonzero");
            }
        }
        prev = a.get(k, k).clone();
    }
    let d = a.get(n - 1, n - 1).clone();
    if sign_flip {
        field.neg(&d)
    } else {
        d
    }
}

/// Division-free determinant over any commutative ring.
///
/// Laplace expansion memoized on the set of columns already consumed by the
/// leading rows: `n * 2^n` ring multiplications instead of `n!`. Used for
/// Hessian-type matrices with polynomial entries, which are at most a
/// handful of rows.
pub fn det_fraction_free<R: Ring>(ring: &R, m: &ExactMatrix<R::Elem>) -> R::Elem {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    assert!(n < usize::BITS as usize - 1, "matrix too large for subset expansion");
    if n == 0 {
        return ring.one();
    }
    let full = (1usize << n) - 1;
    let mut partial: Vec<Option<R::Elem>> = vec![None; full + 1];
    partial[0] = Some(ring.one());
    // masks are visited in increasing order, and every successor of a mask
    // is numerically larger, so each value is final when it is read
    for mask in 0..full {
        let Some(acc) = partial[mask].take() else {
            continue;
        };
        if ring.is_zero(&acc) {
            continue;
        }
        let row = mask.count_ones() as usize;
        for c in 0..n {
            if mask & (1 << c) != 0 || ring.is_zero(m.get(row, c)) {
                continue;
            }
            let inversions = (mask >> (c + 1)).count_ones();
            let mut term = ring.mul(&acc, m.get(row, c));
            if inversions % 2 == 1 {
                term = ring.neg(&term);
            }
            let next = mask | (1 << c);
            partial[next] = Some(match partial[next].take() {
                Some(prev) => ring.add(&prev, &term),
                None => term,
            });
        }
    }
    partial[full].take().unwrap_or_else(|| ring.zero())
}
