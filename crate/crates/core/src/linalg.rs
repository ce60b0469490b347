//! Dense exact matrices over [`Scalar`].
//!
//! Matrices act on column vectors. Tensor products use the lexicographic
//! index `(p, q) ↦ p·n₂ + q`, which is exactly what [`Matrix::kron`] builds.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix::from_fn(n, n, |r, c| if r == c { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics unless every row has `cols` entries.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Matrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: n, cols, data }
    }

    /// Integer entries, row by row.
    pub fn from_ints(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
            cols,
        )
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Matrix {
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    /// Permutation matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Matrix {
        let n = perm.len();
        let mut m = Matrix::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, Scalar::one());
        }
        m
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

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> Vector {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::conj).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product, block `(i, j)` being `self[i][j] · other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    /// Block diagonal matrix `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Row-major flattening, the coordinates of the matrix in the basis of
    /// elementary matrices `E_{rc} ↦ r·cols + c`.
    pub fn vectorize(&self) -> Vector {
        self.data.clone()
    }

    pub fn unvectorize(v: &[Scalar], rows: usize, cols: usize) -> Matrix {
        assert_eq!(v.len(), rows * cols, "vector length mismatch");
        Matrix {
            rows,
            cols,
            data: v.to_vec(),
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let pv = m.get(row, c);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c) - &(&f * pv);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space, one vector per free column, normalized so
    /// the free coordinate is 1 and the other free coordinates are 0.
    pub fn kernel(&self) -> Vec<Vector> {
        let Echelon { matrix, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(i, f);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n)).rref();
        if aug.pivots.len() < n || aug.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(aug.matrix.block(0, n, n, n))
    }

    /// Determinant by elimination.
    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let f = m.get(r, col) * &inv;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c) - &(&f * m.get(col, c));
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// Solves `self · x = b`, returning one solution if any exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let rhs = Matrix::from_columns(&[b.to_vec()], self.rows);
        let Echelon { matrix, pivots } = self.hstack(&rhs).rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(i, self.cols).clone();
        }
        Some(x)
    }
}

/// Canonical basis of the span of the given vectors: the nonzero rows of the
/// reduced row echelon form of the matrix having them as rows.
pub fn span_basis(vectors: &[Vector], dim: usize) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec(), dim);
    let e = m.rref();
    (0..e.pivots.len()).map(|r| e.matrix.row(r)).collect()
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[Vector], b: &[Vector], dim: usize) -> bool {
    span_basis(a, dim) == span_basis(b, dim)
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vector], v: &[Scalar], dim: usize) -> bool {
    let before = span_basis(basis, dim).len();
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    span_basis(&all, dim).len() == before
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn vec_conj(a: &[Scalar]) -> Vector {
    a.iter().map(Scalar::conj).collect()
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] += &(a * b);
                }
            }
        }
        out
    }
}

impl Mul<Matrix> for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        &self * &rhs
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_integer_matrix() {
        let m = Matrix::from_ints(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, Matrix::from_ints(&[&[4, -1], &[-7, 2]]));
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = Matrix::from_ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vector(&m.apply(v)));
        }
    }

    #[test]
    fn kron_matches_index_convention() {
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        // Entry ((p,q),(r,s)) = a[p][r]·b[q][s] with (p,q) ↦ 2p+q.
        for p in 0..2 {
            for q in 0..2 {
                for r in 0..2 {
                    for s in 0..2 {
                        assert_eq!(*k.get(2 * p + q, 2 * r + s), a.get(p, r) * b.get(q, s));
                    }
                }
            }
        }
    }

    #[test]
    fn determinant_and_solve() {
        let m = Matrix::from_ints(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(m.determinant(), Scalar::from_int(-2));
        let x = m.solve(&[1.into(), 2.into(), 3.into()]).unwrap();
        assert_eq!(m.apply(&x), vec![1.into(), 2.into(), 3.into()]);
        let singular = Matrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert!(singular.solve(&[0.into(), 1.into()]).is_none());
    }

    #[test]
    fn spans_compare_exactly() {
        let a = vec![vec![1.into(), 1.into()], vec![1.into(), (-1).into()]];
        let b = vec![vec![1.into(), 0.into()], vec![0.into(), 1.into()]];
        assert!(same_span(&a, &b, 2));
        assert!(!same_span(&a[..1], &b[..1], 2));
        assert!(in_span(&b[..1], &[Scalar::from_int(3), Scalar::zero()], 2));
    }
}
