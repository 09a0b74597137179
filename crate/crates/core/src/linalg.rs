//! Dense row-major matrices over an arbitrary scalar, with exact and
//! tolerance-based rank computations.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{Num, One, Zero};

use crate::scalar::{ExactRing, Field};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        self.data.chunks(self.cols.max(1)).map(<[T]>::to_vec).take(self.rows).collect()
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }
}

impl<T: Clone + Num> Matrix<T> {
    /// Kronecker product, with `self` on the most significant index.
    pub fn kron(&self, other: &Matrix<T>) -> Matrix<T> {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            let (r1, r2) = (r / other.rows, r % other.rows);
            let (c1, c2) = (c / other.cols, c % other.cols);
            self[(r1, c1)].clone() * other[(r2, c2)].clone()
        })
    }

    pub fn scale(&self, s: &T) -> Matrix<T> {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl<T: Clone + Num> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for t in 0..self.cols {
                let a = &self[(r, t)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = out[(r, c)].clone() + a.clone() * rhs[(t, c)].clone();
                    out[(r, c)] = v;
                }
            }
        }
        out
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Rank by Gaussian elimination with partial pivoting.
///
/// For exact fields `tol` is ignored and pivots are compared against zero.
pub fn rank<T: Field>(m: &Matrix<T>, tol: f64) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows)
            .filter(|&r| !a[r][c].is_negligible(tol))
            .max_by(|&x, &y| {
                if T::EXACT {
                    // smallest row index wins for exact data
                    y.cmp(&x)
                } else {
                    a[x][c].magnitude().total_cmp(&a[y][c].magnitude())
                }
            });
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone() / pivot_row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = x.clone() - factor.clone() * y.clone();
            }
            row[c] = T::zero();
        }
        rank += 1;
    }
    rank
}

/// Exact rank by fraction-free (Bareiss) elimination. Every intermediate
/// entry is a minor of the input, so all divisions are exact.
pub fn rank_fraction_free<T: ExactRing>(m: &Matrix<T>) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = T::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            for j in (c + 1)..cols {
                let num = pivot_row[c].clone() * row[j].clone() - row[c].clone() * pivot_row[j].clone();
                row[j] = num.div_floor(&prev);
            }
            row[c] = T::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn kron_matches_block_layout() {
        let a = Matrix::from_vec(2, 2, vec![1i64, 2, 3, 4]);
        let b = Matrix::from_vec(1, 2, vec![1i64, -1]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 2);
        assert_eq!(k.row(0), &[1, -1, 2, -2]);
        assert_eq!(k.row(1), &[3, -3, 4, -4]);
    }

    #[test]
    fn exact_ranks_agree() {
        let m = Matrix::from_vec(3, 3, vec![4i64, 2, 2, 2, 4, 2, 2, 2, 4]);
        assert_eq!(rank_fraction_free(&m), 3);
        let dependent = Matrix::from_vec(3, 3, vec![1i64, 2, 3, 2, 4, 6, 1, 0, 1]);
        assert_eq!(rank_fraction_free(&dependent), 2);
        let big = dependent.map(|&x| BigInt::from(x));
        assert_eq!(rank_fraction_free(&big), 2);
        let q = dependent.map(|&x| BigRational::from_integer(BigInt::from(x)));
        assert_eq!(rank(&q, 0.0), 2);
        let f = dependent.map(|&x| x as f64);
        assert_eq!(rank(&f, 1e-9), 2);
    }

    #[test]
    fn fraction_free_handles_zero_columns() {
        let m = Matrix::from_vec(2, 3, vec![0i64, 1, 1, 0, 2, 2]);
        assert_eq!(rank_fraction_free(&m), 1);
        assert_eq!(rank_fraction_free(&Matrix::<i64>::zeros(0, 4)), 0);
    }
}
