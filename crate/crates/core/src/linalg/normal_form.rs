//! Hermite and Smith normal forms with their unimodular transforms.


use super::matrix::Matrix;
use crate::scalar::Integer;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalFormKind {
    Smith,
    Hermite,
}

/// `left * m * right == form`, with `left` and `right` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm<T> {
    pub left: Matrix<T>,
    pub right: Matrix<T>,
    pub form: Matrix<T>,
}

impl<T: Integer> NormalForm<T> {
    /// Number of nonzero rows of a Hermite form, or nonzero diagonal entries
    /// of a Smith form.
    pub fn rank(&self) -> usize {
        (0..self.form.rows())
            .filter(|&i| (0..self.form.cols()).any(|j| !self.form.get(i, j).is_zero()))
            .count()
    }
}

pub fn normal_form<T: Integer>(m: &Matrix<T>, kind: NormalFormKind) -> NormalForm<T> {
    match kind {
        NormalFormKind::Smith => smith(m),
        NormalFormKind::Hermite => hermite(m),
    }
}

/// Row-style Hermite form: `left * m = form`, pivots positive, entries above
/// a pivot reduced into `[0, pivot)`.
pub fn hermite<T: Integer>(m: &Matrix<T>) -> NormalForm<T> {
    let mut h = m.clone();
    let mut u = Matrix::identity(m.rows());
    let mut r = 0;
    for c in 0..h.cols() {
        if r == h.rows() {
            break;
        }
        loop {
            let pivot = (r..h.rows())
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&a, &b| h.get(a, c).abs().cmp(&h.get(b, c).abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..h.rows() {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).div_floor(h.get(r, c));
                let k = -q;
                h.add_row_multiple(i, r, &k);
                u.add_row_multiple(i, r, &k);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            let neg = -T::one();
            h.scale_row(r, &neg);
            u.scale_row(r, &neg);
        }
        for i in 0..r {
            let q = h.get(i, c).div_floor(h.get(r, c));
            if !q.is_zero() {
                let k = -q;
                h.add_row_multiple(i, r, &k);
                u.add_row_multiple(i, r, &k);
            }
        }
        r += 1;
    }
    NormalForm {
        left: u,
        right: Matrix::identity(m.cols()),
        form: h,
    }
}

/// Smith form: `left * m * right` diagonal with each entry dividing the next.
pub fn smith<T: Integer>(m: &Matrix<T>) -> NormalForm<T> {
    let mut d = m.clone();
    let mut u = Matrix::identity(m.rows());
    let mut v = Matrix::identity(m.cols());
    let n = d.rows().min(d.cols());
    let mut t = 0;
    while t < n {
        let smallest = (t..d.rows())
            .flat_map(|i| (t..d.cols()).map(move |j| (i, j)))
            .filter(|&(i, j)| !d.get(i, j).is_zero())
            .min_by(|&(a, b), &(c, e)| d.get(a, b).abs().cmp(&d.get(c, e).abs()));
        let Some((pi, pj)) = smallest else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        let mut clean = true;
        for i in t + 1..d.rows() {
            let q = d.get(i, t).div_floor(d.get(t, t));
            if !q.is_zero() {
                let k = -q;
                d.add_row_multiple(i, t, &k);
                u.add_row_multiple(i, t, &k);
            }
            clean &= d.get(i, t).is_zero();
        }
        for j in t + 1..d.cols() {
            let q = d.get(t, j).div_floor(d.get(t, t));
            if !q.is_zero() {
                let k = -q;
                d.add_col_multiple(j, t, &k);
                v.add_col_multiple(j, t, &k);
            }
            clean &= d.get(t, j).is_zero();
        }
        if !clean {
            continue;
        }
        let pivot = d.get(t, t).clone();
        let bad_row = (t + 1..d.rows())
            .find(|&i| (t + 1..d.cols()).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
        if let Some(i) = bad_row {
            let one = T::one();
            d.add_row_multiple(t, i, &one);
            u.add_row_multiple(t, i, &one);
            continue;
        }
        if pivot.is_negative() {
            let neg = -T::one();
            d.scale_row(t, &neg);
            u.scale_row(t, &neg);
        }
        t += 1;
    }
    NormalForm { left: u, right: v, form: d }
}

/// Diagonal of a Smith form, zeros included.
pub fn invariant_factors<T: Integer>(m: &Matrix<T>) -> Vec<T> {
    let s = smith(m);
    (0..s.form.rows().min(s.form.cols()))
        .map(|i| s.form.get(i, i).clone())
        .collect()
}

pub fn is_unimodular<T: Integer>(m: &Matrix<T>) -> bool {
    m.is_square() && m.determinant().abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn im(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_i64_rows(rows)
    }

    fn check(m: &Matrix<BigInt>, nf: &NormalForm<BigInt>) {
        assert_eq!(nf.left.mul(m).mul(&nf.right), nf.form);
        assert!(is_unimodular(&nf.left));
        assert!(is_unimodular(&nf.right));
    }

    #[test]
    fn smith_sorts_divisibility_chain() {
        let m = im(&[&[4, 0], &[0, 2]]);
        let nf = smith(&m);
        check(&m, &nf);
        assert_eq!(nf.form, im(&[&[2, 0], &[0, 4]]));
        let m = im(&[&[2, 0], &[0, 3]]);
        assert_eq!(smith(&m).form, im(&[&[1, 0], &[0, 6]]));
    }

    #[test]
    fn hermite_is_reduced_echelon() {
        let m = im(&[&[1, 0]]);
        assert_eq!(hermite(&m).form, m);
        let m = im(&[&[2, 3], &[4, 5], &[-6, 1]]);
        let nf = hermite(&m);
        check(&m, &nf);
        assert_eq!(nf.form, im(&[&[2, 0], &[0, 1], &[0, 0]]));
    }

    #[test]
    fn zero_matrix() {
        let m = Matrix::<BigInt>::zeros(2, 3);
        assert!(smith(&m).form.is_zero());
        assert!(hermite(&m).form.is_zero());
    }
}
