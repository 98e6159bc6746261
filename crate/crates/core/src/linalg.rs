//! Exact dense linear algebra over a coefficient field: reduced row
//! echelon form, rank, kernel bases, determinants, and linear solving.
//!
//! Pivots are chosen as the first nonzero entry in column order — the
//! field is exact, so there is no conditioning to worry about and the
//! deterministic choice keeps every reported basis reproducible.

use crate::field::Field;

/// A dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<K: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<K>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone)]
pub struct Rref<K: Field> {
    pub matrix: Matrix<K>,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl<K: Field> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> K) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, k: &K) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(K::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
            })
            .collect()
    }

    /// Reduced row echelon form with full normalization per pivot.
    pub fn rref(&self) -> Rref<K> {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // first nonzero entry in this column at or below pivot_row
            let Some(src) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m[(pivot_row, col)].inv().expect("pivot is nonzero");
            for j in col..m.cols {
                m[(pivot_row, j)] = m[(pivot_row, j)].clone() * inv.clone();
            }
            for r in 0..m.rows {
                if r == pivot_row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    let delta = factor.clone() * m[(pivot_row, j)].clone();
                    m[(r, j)] = m[(r, j)].clone() - delta;
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        Rref {
            rank: pivot_cols.len(),
            matrix: m,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Echelon-normalized basis of the right null space: one vector per
    /// free column, carrying a unit in that coordinate.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let Rref { matrix, rank, pivot_cols } = self.rref();
        let mut basis = Vec::with_capacity(self.cols - rank);
        let mut pivot_of_col = vec![None; self.cols];
        for (r, &c) in pivot_cols.iter().enumerate() {
            pivot_of_col[c] = Some(r);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[free] = K::one();
            for (r, &c) in pivot_cols.iter().enumerate() {
                v[c] = -matrix[(r, free)].clone();
            }
            basis.push(v);
        }
        debug_assert_eq!(rank + basis.len(), self.cols, "rank-nullity");
        debug_assert!(basis
            .iter()
            .all(|v| self.mul_vec(v).iter().all(K::is_zero)));
        basis
    }

    /// One exact solution of `self * x = b` if the system is consistent,
    /// with free variables pinned to zero; `None` when inconsistent.
    pub fn solve(&self, b: &[K]) -> Option<Vec<K>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let augmented = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let Rref { matrix, pivot_cols, .. } = augmented.rref();
        if pivot_cols.contains(&self.cols) {
            return None;
        }
        let mut x = vec![K::zero(); self.cols];
        for (r, &c) in pivot_cols.iter().enumerate() {
            x[c] = matrix[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Determinant by Gaussian elimination; square matrices only.
    pub fn determinant(&self) -> K {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = K::one();
        for col in 0..m.cols {
            let Some(src) = (col..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                return K::zero();
            };
            if src != col {
                m.swap_rows(col, src);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = det * pivot.clone();
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone() * inv.clone();
                for j in col..m.cols {
                    let delta = factor.clone() * m[(col, j)].clone();
                    m[(r, j)] = m[(r, j)].clone() - delta;
                }
            }
        }
        det
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

impl<K: Field> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.entries[i * self.cols + j]
    }
}

impl<K: Field> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.entries[i * self.cols + j]
    }
}

impl<K: Field> std::fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let id = Matrix::<Rational>::identity(3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivot_cols, vec![0, 1, 2]);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = mat(&[&[2, 4, -2, 6], &[1, 2, 0, 1], &[3, 6, -2, 7]]);
        let once = m.rref();
        let twice = once.matrix.rref();
        assert_eq!(once.matrix, twice.matrix);
        assert_eq!(once.rank, twice.rank);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let z = Matrix::<Rational>::zero(3, 4);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 4);
    }

    #[test]
    fn kernel_of_row_sum() {
        let m = mat(&[&[1, 1]]);
        assert_eq!(
            m.kernel_basis(),
            vec![vec![Rational::from(-1), Rational::from(1)]]
        );
        let full = mat(&[&[1, 2], &[3, 4]]);
        assert!(full.kernel_basis().is_empty());
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::<Rational>::identity(3);
        let b = vec![Rational::from(4), Rational::from(-1), Rational::from(0)];
        assert_eq!(id.solve(&b), Some(b.clone()));
        // inconsistent
        let m = mat(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            m.solve(&[Rational::from(1), Rational::from(2)]),
            None
        );
        // underdetermined: free variable pinned to zero
        let m = mat(&[&[1, 1]]);
        assert_eq!(
            m.solve(&[Rational::from(5)]),
            Some(vec![Rational::from(5), Rational::from(0)])
        );
        // solutions are exact
        let m = mat(&[&[2, 1], &[1, 3]]);
        let b = vec![Rational::from(1), Rational::from(7)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
    }

    #[test]
    fn determinant_matches_cofactor_values() {
        assert_eq!(mat(&[&[1, 2], &[3, 4]]).determinant(), Rational::from(-2));
        assert_eq!(
            mat(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).determinant(),
            Rational::from(1)
        );
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).determinant(), Rational::from(0));
    }
}
