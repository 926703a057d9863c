//! Hilbert bases of `cone ∩ lattice` by triangulation and fundamental
//! parallelepipeds.

use std::collections::BTreeSet;

use super::cone::Cone;
use crate::error::{check_dim, Error, Result};
use crate::linalg::rational::{inverse, rank_of};
use crate::linalg::{integer_kernel, saturation, smith, LatticeBasis, Matrix, Vector};
use crate::scalar::Integer;

/// The unique minimal generating set of a pointed `cone ∩ lattice`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis<T> {
    pub lattice: LatticeBasis<T>,
    pub elements: Vec<Vector<T>>,
}

/// `cone ∩ lattice` rewritten in coordinates of a basis of
/// `lattice ∩ span(cone ∩ lattice)`, where it becomes full dimensional.
struct Frame<T> {
    basis: Matrix<T>,
    cone: Cone<T>,
}

impl<T: Integer> Frame<T> {
    fn new(c: &Cone<T>, lat: &LatticeBasis<T>) -> Result<Self> {
        check_dim(c.ambient_rank(), lat.ambient_rank())?;
        let n = c.ambient_rank();
        let mut basis = if lat.rank() == 0 {
            Matrix::zeros(0, n)
        } else {
            Matrix::from_row_vectors(lat.basis(), n)
        };
        let mut inequalities = c.all_inequalities();
        loop {
            let m = basis.rows();
            let pulled: Vec<Vector<T>> = inequalities.iter().map(|f| basis.apply(f)).collect();
            let cone = Cone::from_inequalities(m, &pulled)?;
            if cone.is_full_dimensional() {
                return Ok(Frame { basis, cone });
            }
            let eq = Matrix::from_row_vectors(cone.equations(), m);
            let kernel = integer_kernel(&eq);
            let k = Matrix::from_row_vectors(&kernel, m);
            basis = if kernel.is_empty() {
                Matrix::zeros(0, n)
            } else {
                k.mul(&basis)
            };
            inequalities = c.all_inequalities();
        }
    }

    fn dim(&self) -> usize {
        self.basis.rows()
    }

    fn lift(&self, z: &Vector<T>) -> Vector<T> {
        if self.dim() == 0 {
            return Vector::zeros(self.basis.cols());
        }
        self.basis.transpose().apply(z)
    }
}

/// A pointed cone after dividing out the lineality space, with the lattice
/// maps relating it to the original.
#[derive(Debug, Clone)]
pub struct LinealityQuotient<T> {
    /// `Z^n ∩ lineality`.
    pub lineality: LatticeBasis<T>,
    /// Quotient map `Z^n -> Z^(n-l)`.
    pub projection: Matrix<T>,
    /// A section of the projection, `Z^(n-l) -> Z^n`.
    pub section: Matrix<T>,
    pub cone: Cone<T>,
}

pub fn quotient_by_lineality<T: Integer>(c: &Cone<T>) -> Result<LinealityQuotient<T>> {
    let n = c.ambient_rank();
    let lineality = saturation(n, c.lineality())?;
    let l = lineality.rank();
    if l == 0 {
        return Ok(LinealityQuotient {
            lineality,
            projection: Matrix::identity(n),
            section: Matrix::identity(n),
            cone: c.clone(),
        });
    }
    let w = Matrix::from_row_vectors(lineality.basis(), n);
    let v = smith(&w).right;
    let v_inv = inverse(&v.to_rational())
        .and_then(|m| m.to_integer())
        .expect("unimodular transform");
    let vt = v.transpose();
    let projection = Matrix::from_row_vectors(&vt.row_vectors()[l..], n);
    let section = Matrix::from_row_vectors(&v_inv.row_vectors()[l..], n).transpose();
    let images: Vec<Vector<T>> = c.generators().iter().map(|g| projection.apply(g)).collect();
    let cone = Cone::from_generators(n - l, &images)?;
    Ok(LinealityQuotient {
        lineality,
        projection,
        section,
        cone,
    })
}

pub fn hilbert_basis<T: Integer>(c: &Cone<T>, lat: &LatticeBasis<T>) -> Result<HilbertBasis<T>> {
    if !c.is_pointed() {
        return Err(Error::NonPointedCone);
    }
    let frame = Frame::new(c, lat)?;
    let mut elements: Vec<Vector<T>> = full_dimensional_basis(&frame.cone)
        .iter()
        .map(|z| frame.lift(z))
        .collect();
    elements.sort();
    Ok(HilbertBasis {
        lattice: lat.clone(),
        elements,
    })
}

/// A finite generating set of the monoid `cone ∩ lattice` for any cone:
/// both signs of a basis of the unit group, plus lifts of the Hilbert basis
/// of the pointed quotient. Minimal when the cone is pointed.
pub fn lattice_generators<T: Integer>(c: &Cone<T>, lat: &LatticeBasis<T>) -> Result<Vec<Vector<T>>> {
    let frame = Frame::new(c, lat)?;
    let q = quotient_by_lineality(&frame.cone)?;
    let mut gens: Vec<Vector<T>> = Vec::new();
    for u in q.lineality.basis() {
        gens.push(frame.lift(u));
        gens.push(frame.lift(&-u));
    }
    for h in full_dimensional_basis(&q.cone) {
        gens.push(frame.lift(&q.section.apply(&h)));
    }
    gens.sort();
    gens.dedup();
    Ok(gens)
}

fn full_dimensional_basis<T: Integer>(c: &Cone<T>) -> Vec<Vector<T>> {
    let m = c.ambient_rank();
    if m == 0 {
        return Vec::new();
    }
    debug_assert!(c.is_pointed() && c.is_full_dimensional());
    let rays = c.rays();
    let mut candidates: BTreeSet<Vector<T>> = rays.iter().cloned().collect();
    for simplex in triangulate(rays, m) {
        let generators: Vec<Vector<T>> = simplex.iter().map(|&i| rays[i].clone()).collect();
        candidates.extend(parallelepiped_points(&generators, m));
    }
    let grading = c
        .facets()
        .iter()
        .fold(Vector::zeros(m), |acc, f| &acc + f);
    let mut graded: Vec<(T, Vector<T>)> = candidates
        .into_iter()
        .filter(|x| !x.is_zero())
        .map(|x| (grading.dot(&x), x))
        .collect();
    graded.sort();
    let mut basis: Vec<(T, Vector<T>)> = Vec::new();
    for (deg, x) in graded {
        let reducible = basis
            .iter()
            .any(|(dh, h)| *dh < deg && c.contains_int(&(&x - h)));
        if !reducible {
            basis.push((deg, x));
        }
    }
    basis.into_iter().map(|(_, x)| x).collect()
}

/// Splits the cone over `rays` into simplicial cones spanned by rays, by
/// pulling the first ray to every facet not containing it.
pub(crate) fn triangulate<T: Integer>(rays: &[Vector<T>], n: usize) -> Vec<Vec<usize>> {
    fn recurse<T: Integer>(idx: Vec<usize>, rays: &[Vector<T>], n: usize) -> Vec<Vec<usize>> {
        let vs: Vec<Vector<T>> = idx.iter().map(|&i| rays[i].clone()).collect();
        let qs: Vec<_> = vs.iter().map(|v| v.to_rational()).collect();
        if rank_of(&qs, n) == idx.len() {
            return vec![idx];
        }
        let cone = Cone::from_generators(n, &vs).expect("dimensions agree");
        let apex = idx[0];
        let mut out = Vec::new();
        for f in cone.facets() {
            if f.dot(&rays[apex]).is_zero() {
                continue;
            }
            let on_facet: Vec<usize> = idx
                .iter()
                .copied()
                .filter(|&i| f.dot(&rays[i]).is_zero())
                .collect();
            for mut s in recurse(on_facet, rays, n) {
                s.insert(0, apex);
                out.push(s);
            }
        }
        out
    }
    if rays.is_empty() {
        return Vec::new();
    }
    recurse((0..rays.len()).collect(), rays, n)
}

/// Lattice points `sum c_i g_i` with every `c_i` in `[0, 1)`, for linearly
/// independent `generators` spanning `Q^n`.
pub(crate) fn parallelepiped_points<T: Integer>(generators: &[Vector<T>], n: usize) -> Vec<Vector<T>> {
    let a = Matrix::from_column_vectors(generators, n);
    let nf = smith(&a);
    let u_inv = inverse(&nf.left.to_rational())
        .and_then(|m| m.to_integer())
        .expect("unimodular transform");
    let a_inv = inverse(&a.to_rational()).expect("independent generators");
    let a_q = a.to_rational();
    let moduli: Vec<T> = (0..n).map(|i| nf.form.get(i, i).abs()).collect();
    let mut points = Vec::new();
    let mut y: Vec<T> = vec![T::zero(); n];
    loop {
        let x = u_inv.apply(&Vector::new(y.clone())).to_rational();
        let c = a_inv.apply(&x);
        let frac: Vector<_> = c.iter().map(|ci| ci - ci.floor()).collect();
        let p = a_q.apply(&frac).to_integer().expect("lattice point");
        points.push(p);
        let mut i = 0;
        loop {
            if i == n {
                return points;
            }
            y[i] = y[i].clone() + T::one();
            if y[i] < moduli[i] {
                break;
            }
            y[i] = T::zero();
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn iv(v: &[i64]) -> Vector<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn cone(gens: &[&[i64]]) -> Cone<BigInt> {
        let n = gens[0].len();
        Cone::from_generators(n, &gens.iter().map(|g| iv(g)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn skew_cone_in_z2() {
        let c = cone(&[&[1, 0], &[1, 2]]);
        let hb = hilbert_basis(&c, &LatticeBasis::standard(2)).unwrap();
        assert_eq!(hb.elements, vec![iv(&[1, 0]), iv(&[1, 1]), iv(&[1, 2])]);
    }

    #[test]
    fn ray_in_even_lattice() {
        let c = cone(&[&[1]]);
        let lat = LatticeBasis::new(1, &[iv(&[2])]).unwrap();
        assert_eq!(hilbert_basis(&c, &lat).unwrap().elements, vec![iv(&[2])]);
    }

    #[test]
    fn parallelepiped_counts_determinant() {
        let pts = parallelepiped_points(&[iv(&[1, 0]), iv(&[1, 3])], 2);
        assert_eq!(pts.len(), 3);
        let set: BTreeSet<_> = pts.into_iter().collect();
        assert_eq!(set, [iv(&[0, 0]), iv(&[1, 1]), iv(&[1, 2])].into_iter().collect());
    }

    #[test]
    fn pyramid_triangulates_into_two_simplices() {
        let c = cone(&[&[1, 1, 1], &[1, -1, 1], &[-1, 1, 1], &[-1, -1, 1]]);
        assert_eq!(triangulate(c.rays(), 3).len(), 2);
        let hb = hilbert_basis(&c, &LatticeBasis::standard(3)).unwrap();
        assert_eq!(hb.elements.len(), 9);
        assert!(hb.elements.contains(&iv(&[0, 0, 1])));
    }

    #[test]
    fn non_pointed_input_is_rejected() {
        let c = cone(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(
            hilbert_basis(&c, &LatticeBasis::standard(2)),
            Err(Error::NonPointedCone)
        );
        let gens = lattice_generators(&c, &LatticeBasis::standard(2)).unwrap();
        assert_eq!(gens, vec![iv(&[-1, 0]), iv(&[0, 1]), iv(&[1, 0])]);
        let q = quotient_by_lineality(&c).unwrap();
        assert_eq!(q.cone.ambient_rank(), 1);
        assert!(q.projection.mul(&q.section).is_identity());
    }

    #[test]
    fn lower_dimensional_cone_in_sublattice() {
        let c = cone(&[&[1, 1, 0], &[1, -1, 0]]);
        let lat = LatticeBasis::new(3, &[iv(&[2, 0, 0]), iv(&[0, 2, 0]), iv(&[0, 0, 1])]).unwrap();
        let hb = hilbert_basis(&c, &lat).unwrap();
        assert_eq!(hb.elements, vec![iv(&[2, -2, 0]), iv(&[2, 0, 0]), iv(&[2, 2, 0])]);
    }
}
