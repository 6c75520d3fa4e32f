//! Dense linear algebra generic over the scalar field.
//!
//! Exact paths instantiate [`Scalar`] with big rationals, Gaussian rationals or
//! a prime field [`Zp`]; fraction-free integer elimination lives in
//! [`bareiss`].

pub mod bareiss;
pub mod modular;

use std::fmt::Debug;
use std::ops::{Index, IndexMut};

use num_complex::Complex;
use num_traits::{Num, Zero};
use serde::Serialize;

pub use bareiss::bareiss_rank;
pub use modular::{independent_rows_mod_p, modular_rank, Zp, ORACLE_PRIMES};

/// Any field the elimination routines can run over. Equality must be exact.
pub trait Scalar: Num + Clone + Debug {}

impl<T> Scalar for T where T: Num + Clone + Debug {}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from nested rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.row_iter().map(<[T]>::to_vec).collect()
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc + self[(i, k)].clone() * rhs[(k, j)].clone())
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() + rhs[(i, j)].clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() - rhs[(i, j)].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        self.row_iter()
            .map(|r| r.iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect()
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Reduced row echelon form (pivots equal to one) and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = T::one() / m[(r, c)].clone();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let delta = factor.clone() * m[(r, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() - delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self·v = 0}` in reduced echelon form.
    pub fn nullspace(&self) -> KernelBasis<T> {
        let (r, pivots) = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        pivots.iter().for_each(|&c| is_pivot[c] = true);
        let raw: Vec<Vec<T>> = (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![T::zero(); n];
                v[f] = T::one();
                for (i, &c) in pivots.iter().enumerate() {
                    v[c] = T::zero() - r[(i, f)].clone();
                }
                v
            })
            .collect();
        KernelBasis::from_vectors(n, raw)
    }
}

impl<T: Scalar + std::ops::Neg<Output = T>> Matrix<Complex<T>> {
    pub fn conj_transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }
}

/// A kernel basis stored in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KernelBasis<T> {
    pub len: usize,
    pub vectors: Vec<Vec<T>>,
}

impl<T: Scalar> KernelBasis<T> {
    /// Row-reduces `vectors` (all of length `len`) and drops zero rows.
    pub fn from_vectors(len: usize, vectors: Vec<Vec<T>>) -> Self {
        if vectors.is_empty() {
            return KernelBasis { len, vectors };
        }
        let (r, pivots) = Matrix::from_rows(vectors).rref();
        let vectors = r.row_iter().take(pivots.len()).map(<[T]>::to_vec).collect();
        KernelBasis { len, vectors }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}
