//! Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::vector::Vector;
use crate::scalar::{Integer, Rational};

type RMat<T> = Matrix<Rational<T>>;
type RVec<T> = Vector<Rational<T>>;

/// Reduced row echelon form together with the pivot columns.
pub fn rref<T: Integer>(m: &RMat<T>) -> (RMat<T>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        let Some(p) = (r..a.rows()).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a.get(r, c).recip();
        a.scale_row(r, &inv);
        for i in 0..a.rows() {
            if i != r && !a.get(i, c).is_zero() {
                let k = -a.get(i, c).clone();
                a.add_row_multiple(i, r, &k);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<T: Integer>(m: &RMat<T>) -> usize {
    rref(m).1.len()
}

/// Rank of a list of vectors of common length `dim`.
pub fn rank_of<T: Integer>(vs: &[RVec<T>], dim: usize) -> usize {
    if vs.is_empty() {
        return 0;
    }
    rank(&Matrix::from_row_vectors(vs, dim))
}

/// A basis of `{x : m x = 0}`, one vector per free column.
pub fn nullspace<T: Integer>(m: &RMat<T>) -> Vec<RVec<T>> {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); n];
            x[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -r.get(row, f).clone();
            }
            Vector::new(x)
        })
        .collect()
}

/// Some solution of `m x = b`, if one exists.
pub fn solve<T: Integer>(m: &RMat<T>, b: &RVec<T>) -> Option<RVec<T>> {
    assert_eq!(m.rows(), b.len());
    let n = m.cols();
    let mut aug = Matrix::zeros(m.rows(), n + 1);
    for i in 0..m.rows() {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n, b[i].clone());
    }
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, n).clone();
    }
    Some(Vector::new(x))
}

/// Coefficients expressing `target` in terms of `vs`, if it lies in their
/// span. Unique when `vs` is independent.
pub fn solve_combination<T: Integer>(vs: &[RVec<T>], target: &RVec<T>) -> Option<RVec<T>> {
    if vs.is_empty() {
        return target.is_zero().then(|| Vector::new(Vec::new()));
    }
    let m = Matrix::from_column_vectors(vs, target.len());
    solve(&m, target)
}

pub fn inverse<T: Integer>(m: &RMat<T>) -> Option<RMat<T>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, Rational::one());
    }
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.get(i, n + j).clone());
        }
    }
    Some(inv)
}

pub fn determinant<T: Integer>(m: &RMat<T>) -> Rational<T> {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let mut a = m.clone();
    let n = a.rows();
    let mut det: Rational<T> = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap_rows(p, c);
            det = -det;
        }
        let pivot = a.get(c, c).clone();
        det = det * pivot.clone();
        for i in c + 1..n {
            if !a.get(i, c).is_zero() {
                let k = -(a.get(i, c).clone() / pivot.clone());
                a.add_row_multiple(i, c, &k);
            }
        }
    }
    det
}
