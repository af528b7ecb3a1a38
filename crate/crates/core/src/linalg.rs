//! Exact dense matrices over the rationals.
//!
//! Elimination is fraction-free: rows are cleared to integers and reduced
//! with Bareiss steps, so intermediate entries stay integral and bounded by
//! minors of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        echelon(self).pivots.len()
    }

    /// Basis of `{v : self · v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let e = echelon(self);
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (r, &p) in e.pivots.iter().enumerate().rev() {
                let row = &e.rows[r];
                let mut acc_q = Scalar::zero();
                for c in p + 1..self.cols {
                    if !row[c].is_zero() && !v[c].is_zero() {
                        acc_q += Scalar::from_integer(row[c].clone()) * &v[c];
                    }
                }
                v[p] = -acc_q / Scalar::from_integer(row[p].clone());
            }
            basis.push(v);
        }
        basis
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// Integer row echelon form by Bareiss elimination.
fn echelon(m: &Matrix) -> Echelon {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows).map(|i| clear_denominators(m.row(i))).collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m.cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                // Bareiss still rescales to keep later divisions exact
                for j in c..m.cols {
                    rows[i][j] = exact_div(&rows[i][j] * &rows[r][c], &prev);
                }
                continue;
            }
            for j in c + 1..m.cols {
                let v = &rows[r][c] * &rows[i][j] - &rows[i][c] * &rows[r][j];
                rows[i][j] = exact_div(v, &prev);
            }
            rows[i][c] = BigInt::zero();
        }
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Echelon { rows, pivots }
}

fn exact_div(n: BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    debug_assert!(r.is_zero(), "inexact Bareiss step");
    q
}

fn clear_denominators(row: &[Scalar]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        let v = Matrix::from_rows(k[0].iter().map(|x| vec![x.clone()]).collect());
        assert!(a.mul(&v).to_rows().iter().flatten().all(Zero::is_zero));
    }

    #[test]
    fn rational_entries() {
        let a = Matrix::from_rows(vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), int(1)]]);
        assert_eq!(a.rank(), 1);
        assert!(Matrix::identity(4).is_invertible());
    }

    #[test]
    fn kron_shapes() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let k = Matrix::identity(2).kron(&a);
        assert_eq!(k.rows(), 4);
        assert_eq!(*k.get(3, 2), int(3));
        assert_eq!(*k.get(0, 2), int(0));
    }

    #[test]
    fn zero_column_then_pivot() {
        let a = m(&[&[0, 1, 2], &[0, 3, 4], &[0, 0, 0]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.kernel(), vec![vec![int(1), int(0), int(0)]]);
    }
}
