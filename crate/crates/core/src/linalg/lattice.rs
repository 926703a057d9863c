use super::matrix::Matrix;
use super::normal_form::{hermite, smith};
use super::rational::solve_combination;
use super::vector::Vector;
use crate::error::{check_dim, Error, Result};
use crate::scalar::{Integer, Rational};

/// A sublattice of `Z^n`, stored by the nonzero rows of its Hermite form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeBasis<T> {
    ambient_rank: usize,
    basis: Vec<Vector<T>>,
    pivots: Vec<usize>,
}

impl<T: Integer> LatticeBasis<T> {
    /// The lattice generated by `generators`; they need not be independent.
    pub fn new(ambient_rank: usize, generators: &[Vector<T>]) -> Result<Self> {
        for g in generators {
            check_dim(ambient_rank, g.len())?;
        }
        if generators.is_empty() {
            return Ok(Self::zero(ambient_rank));
        }
        let h = hermite(&Matrix::from_row_vectors(generators, ambient_rank)).form;
        let basis: Vec<Vector<T>> = h.row_vectors().into_iter().filter(|r| !r.is_zero()).collect();
        let pivots = basis
            .iter()
            .map(|b| b.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect();
        Ok(LatticeBasis {
            ambient_rank,
            basis,
            pivots,
        })
    }

    pub fn standard(n: usize) -> Self {
        LatticeBasis {
            ambient_rank: n,
            basis: (0..n).map(|i| Vector::unit(n, i)).collect(),
            pivots: (0..n).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        LatticeBasis {
            ambient_rank: n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<T>] {
        &self.basis
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_rank
    }

    pub fn member(&self, v: &Vector<T>) -> Result<bool> {
        check_dim(self.ambient_rank, v.len())?;
        Ok(self.coordinates(v).is_some())
    }

    /// Integer coordinates of `v` in the Hermite basis, by forward
    /// substitution along the pivots.
    pub fn coordinates(&self, v: &Vector<T>) -> Option<Vector<T>> {
        if v.len() != self.ambient_rank {
            return None;
        }
        let mut residual = v.clone();
        let mut coords = Vec::with_capacity(self.rank());
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let (q, r) = residual[p].div_rem(&b[p]);
            if !r.is_zero() {
                return None;
            }
            residual = residual.combine(&T::one(), b, &-q.clone());
            coords.push(q);
        }
        residual.is_zero().then(|| Vector::new(coords))
    }

    pub fn combine(&self, coords: &Vector<T>) -> Vector<T> {
        assert_eq!(coords.len(), self.rank());
        self.basis
            .iter()
            .zip(coords.iter())
            .fold(Vector::zeros(self.ambient_rank), |acc, (b, c)| {
                acc.combine(&T::one(), b, c)
            })
    }

    /// Rational coordinates of a vector in the rational span of the lattice.
    pub fn rational_coordinates(&self, v: &Vector<Rational<T>>) -> Option<Vector<Rational<T>>> {
        let basis: Vec<_> = self.basis.iter().map(|b| b.to_rational()).collect();
        solve_combination(&basis, v)
    }

    /// The shortest nonzero lattice point on the ray through `r`.
    pub fn primitive_on_ray(&self, r: &Vector<Rational<T>>) -> Result<Vector<T>> {
        check_dim(self.ambient_rank, r.len())?;
        if r.is_zero() {
            return Err(Error::ZeroRay);
        }
        let c = self.rational_coordinates(r).ok_or(Error::RayMissesLattice)?;
        Ok(self.combine(&c.primitive_integer()))
    }

    /// Index of the sublattice generated by `generators`, or `None` when it
    /// has smaller rank or does not lie in `self`.
    pub fn index_of(&self, generators: &[Vector<T>]) -> Option<T> {
        if self.rank() == 0 {
            return Some(T::one());
        }
        let coords = generators
            .iter()
            .map(|g| self.coordinates(g))
            .collect::<Option<Vec<_>>>()?;
        if coords.is_empty() {
            return None;
        }
        let d = smith(&Matrix::from_row_vectors(&coords, self.rank())).form;
        let mut index = T::one();
        for i in 0..self.rank() {
            if i >= d.rows() || d.get(i, i).is_zero() {
                return None;
            }
            index = index * d.get(i, i).abs();
        }
        Some(index)
    }

    pub fn contains_lattice(&self, other: &LatticeBasis<T>) -> bool {
        other.basis.iter().all(|b| self.coordinates(b).is_some())
    }
}

/// A basis of the lattice `{x in Z^cols : m x = 0}`.
pub fn integer_kernel<T: Integer>(m: &Matrix<T>) -> Vec<Vector<T>> {
    let nf = hermite(&m.transpose());
    (0..nf.form.rows())
        .filter(|&i| nf.form.row(i).is_zero())
        .map(|i| nf.left.row(i))
        .collect()
}

/// The saturation `Z^n ∩ span(generators)`.
pub fn saturation<T: Integer>(n: usize, generators: &[Vector<T>]) -> Result<LatticeBasis<T>> {
    if generators.iter().all(|g| g.is_zero()) {
        return Ok(LatticeBasis::zero(n));
    }
    let m = Matrix::from_row_vectors(generators, n);
    let normals = integer_kernel(&m);
    if normals.is_empty() {
        return Ok(LatticeBasis::standard(n));
    }
    let back = integer_kernel(&Matrix::from_row_vectors(&normals, n));
    LatticeBasis::new(n, &back)
}
