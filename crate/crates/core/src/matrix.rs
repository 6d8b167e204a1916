//! Dense matrices over a [`FiniteField`] and exact Gaussian elimination.
//!
//! Matrices do not own their field; every arithmetic routine takes it as an
//! argument. Vectors are row vectors throughout (`v · M`).

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::field::FiniteField;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>, // row-major
}

impl<E: Copy + PartialEq> Matrix<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data has the wrong length");
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    /// An `rows x cols` matrix with every entry equal to `fill`.
    pub fn filled(rows: usize, cols: usize, fill: E) -> Self {
        Self {
            rows,
            cols,
            data: vec![fill; rows * cols],
        }
    }

    pub fn zeros<F: FiniteField<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, f.zero())
    }

    pub fn identity<F: FiniteField<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m[(i, i)] = f.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)]);
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Sub-matrix made of the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self[(i, j)]);
            }
        }
        Self {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn map<T: Copy>(&self, f: impl Fn(E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&e| f(e)).collect(),
        }
    }

    pub fn mul<F: FiniteField<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, other[(k, j)]));
                }
            }
        }
        Ok(out)
    }

    pub fn add<F: FiniteField<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| f.add(a, b))
    }

    pub fn sub<F: FiniteField<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(E, E) -> E) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }

    pub fn is_zero<F: FiniteField<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|&e| f.is_zero(e))
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref<F: FiniteField<Elem = E>>(&self, f: &F) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m[(i, c)])) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m[(r, c)]).expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = f.mul(inv, m[(r, j)]);
            }
            for i in 0..m.rows {
                let factor = m[(i, c)];
                if i == r || f.is_zero(factor) {
                    continue;
                }
                for j in c..m.cols {
                    m[(i, j)] = f.sub(m[(i, j)], f.mul(factor, m[(r, j)]));
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank<F: FiniteField<Elem = E>>(&self, f: &F) -> usize {
        self.rref(f).1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn determinant<F: FiniteField<Elem = E>>(&self, f: &F) -> Result<E> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !f.is_zero(m[(i, c)])) else {
                return Ok(f.zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = f.neg(det);
            }
            let pivot = m[(c, c)];
            det = f.mul(det, pivot);
            let inv = f.inv(pivot)?;
            for i in c + 1..m.rows {
                let factor = f.mul(m[(i, c)], inv);
                if f.is_zero(factor) {
                    continue;
                }
                for j in c..m.cols {
                    m[(i, j)] = f.sub(m[(i, j)], f.mul(factor, m[(c, j)]));
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan. A singular matrix gives `DivisionByZero`.
    pub fn inverse<F: FiniteField<Elem = E>>(&self, f: &F) -> Result<Self> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: self.cols,
            });
        }
        let mut aug = Self::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = f.one();
        }
        let (red, pivots) = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::DivisionByZero);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(red.select_columns(&cols))
    }

    /// Basis (as rows) of the right kernel `{x : self · xᵀ = 0}`.
    pub fn nullspace<F: FiniteField<Elem = E>>(&self, f: &F) -> Self {
        let (red, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(f, free.len(), self.cols);
        for (r, &fc) in free.iter().enumerate() {
            out[(r, fc)] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                out[(r, pc)] = f.neg(red[(i, fc)]);
            }
        }
        out
    }

    /// Whether both matrices span the same row space.
    pub fn same_row_space<F: FiniteField<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let (a, pa) = self.rref(f);
        let (b, pb) = other.rref(f);
        pa == pb && (0..pa.len()).all(|i| a.row(i) == b.row(i))
    }
}

impl<E> Index<(usize, usize)> for Matrix<E> {
    type Output = E;

    fn index(&self, (i, j): (usize, usize)) -> &E {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<E> IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

/// Row vector times matrix.
pub fn vec_mul<F: FiniteField>(f: &F, v: &[F::Elem], m: &Matrix<F::Elem>) -> Result<Vec<F::Elem>> {
    if v.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            got: v.len(),
        });
    }
    let mut out = vec![f.zero(); m.cols()];
    for (i, &a) in v.iter().enumerate() {
        if f.is_zero(a) {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            *o = f.add(*o, f.mul(a, m[(i, j)]));
        }
    }
    Ok(out)
}

pub fn vec_add<F: FiniteField>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn vec_sub<F: FiniteField>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use proptest::prelude::*;

    fn gf5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn inverse_and_det_gf5() {
        let f = gf5();
        let m = Matrix::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap();
        // det = 4 - 6 = -2 = 3
        assert_eq!(m.determinant(&f).unwrap(), 3);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv).unwrap(), Matrix::identity(&f, 2));

        let singular = Matrix::from_rows(vec![vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(singular.determinant(&f).unwrap(), 0);
        assert_eq!(singular.inverse(&f), Err(Error::DivisionByZero));
    }

    #[test]
    fn nullspace_of_full_rank_square_is_empty() {
        let f = gf5();
        let m = Matrix::<u32>::identity(&f, 3);
        let k = m.nullspace(&f);
        assert_eq!(k.shape(), (0, 3));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Matrix::from_rows(vec![vec![1u32, 2], vec![3]]).is_err());
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(0u32..5, 12)) {
            let f = gf5();
            let m = Matrix::new(3, 4, entries);
            let k = m.nullspace(&f);
            prop_assert_eq!(m.rank(&f) + k.rows(), 4);
            prop_assert!(m.mul(&f, &k.transpose()).unwrap().is_zero(&f));
            prop_assert_eq!(k.rank(&f), k.rows());
        }

        #[test]
        fn det_nonzero_iff_invertible(entries in proptest::collection::vec(0u32..5, 9)) {
            let f = gf5();
            let m = Matrix::new(3, 3, entries);
            let det = m.determinant(&f).unwrap();
            match m.inverse(&f) {
                Ok(inv) => {
                    prop_assert!(det != 0);
                    prop_assert_eq!(inv.mul(&f, &m).unwrap(), Matrix::identity(&f, 3));
                }
                Err(_) => prop_assert_eq!(det, 0),
            }
        }
    }
}
