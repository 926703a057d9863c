use std::collections::{HashSet, VecDeque};

use num_traits::{Signed, Zero};

use crate::error::{check_dim, Result};
use crate::linalg::rational::{inverse, rank_of, rref};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{Integer, Rational};

/// A rational polyhedral cone `L + cone(rays)` with `L` its lineality space,
/// kept in both descriptions.
///
/// Rays are primitive integer vectors orthogonal to `L`; facets are primitive
/// inner normals orthogonal to the equations. All lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cone<T> {
    ambient_rank: usize,
    rays: Vec<Vector<T>>,
    lineality: Vec<Vector<T>>,
    facets: Vec<Vector<T>>,
    equations: Vec<Vector<T>>,
}

/// A face, identified by the rays it contains and the facets vanishing on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub dim: usize,
    pub rays: Vec<usize>,
    pub facets: Vec<usize>,
}

impl Face {
    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.rays.iter().all(|r| other.rays.contains(r))
    }
}

/// Zero set of a ray against the inequalities seen so far.
#[derive(Clone, Debug, Default)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn insert(&mut self, i: usize) {
        let w = i / 64;
        if self.0.len() <= w {
            self.0.resize(w + 1, 0);
        }
        self.0[w] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &ZeroSet) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, a)| a & !other.0.get(i).copied().unwrap_or(0) == 0)
    }
}

/// Double description: generators `(lineality, rays)` of `{x : a.x >= 0}`.
pub(crate) fn double_description<T: Integer>(
    inequalities: &[Vector<T>],
    n: usize,
) -> (Vec<Vector<T>>, Vec<Vector<T>>) {
    let mut lineality: Vec<Vector<T>> = (0..n).map(|i| Vector::unit(n, i)).collect();
    let mut rays: Vec<Vector<T>> = Vec::new();
    let mut seen: Vec<&Vector<T>> = Vec::new();

    for a in inequalities.iter().filter(|a| !a.is_zero()) {
        if let Some(k) = lineality.iter().position(|l| !a.dot(l).is_zero()) {
            let mut l = lineality.remove(k);
            let mut al = a.dot(&l);
            if al.is_negative() {
                l = -&l;
                al = -al;
            }
            for v in lineality.iter_mut().chain(rays.iter_mut()) {
                let av = a.dot(v);
                if !av.is_zero() {
                    *v = v.combine(&al, &l, &-av).primitive();
                }
            }
            rays.push(l.primitive());
            seen.push(a);
            continue;
        }

        let values: Vec<T> = rays.iter().map(|r| a.dot(r)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            seen.push(a);
            continue;
        }
        let zero_sets: Vec<ZeroSet> = rays
            .iter()
            .map(|r| {
                let mut z = ZeroSet::default();
                for (i, b) in seen.iter().enumerate() {
                    if b.dot(r).is_zero() {
                        z.insert(i);
                    }
                }
                z
            })
            .collect();
        let mut next: Vec<Vector<T>> = Vec::new();
        for (r, v) in rays.iter().zip(&values) {
            if !v.is_negative() {
                next.push(r.clone());
            }
        }
        for (p, vp) in values.iter().enumerate().filter(|(_, v)| v.is_positive()) {
            for (q, vq) in values.iter().enumerate().filter(|(_, v)| v.is_negative()) {
                let common = zero_sets[p].intersect(&zero_sets[q]);
                let adjacent = (0..rays.len())
                    .filter(|&r| r != p && r != q)
                    .all(|r| !common.is_subset(&zero_sets[r]));
                if adjacent {
                    next.push(rays[q].combine(vp, &rays[p], &-vq.clone()).primitive());
                }
            }
        }
        next.sort();
        next.dedup();
        rays = next;
        seen.push(a);
    }
    (lineality, rays)
}

/// Rational row-reduced basis of a span, each row scaled to a primitive
/// integer vector.
pub(crate) fn canonical_span<T: Integer>(vs: &[Vector<T>], n: usize) -> Vec<Vector<T>> {
    if vs.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_row_vectors(vs, n).to_rational();
    let (r, pivots) = rref(&m);
    (0..pivots.len()).map(|i| r.row(i).primitive_integer()).collect()
}

/// Orthogonal projection onto the complement of `span(basis)`.
fn project_off<T: Integer>(v: &Vector<T>, basis: &[Vector<T>], n: usize) -> Vector<T> {
    if basis.is_empty() {
        return v.primitive();
    }
    let b = Matrix::from_row_vectors(basis, n).to_rational();
    let gram = b.mul(&b.transpose());
    let inv = inverse(&gram).expect("independent basis");
    let vq = v.to_rational();
    let coeffs = inv.apply(&b.apply(&vq));
    let shift = b.transpose().apply(&coeffs);
    (&vq - &shift).primitive_integer()
}

fn canonical_set<T: Integer>(vs: Vec<Vector<T>>) -> Vec<Vector<T>> {
    let mut vs: Vec<Vector<T>> = vs.into_iter().filter(|v| !v.is_zero()).collect();
    vs.sort();
    vs.dedup();
    vs
}

impl<T: Integer> Cone<T> {
    /// The cone spanned by integer generators; zero vectors are ignored.
    pub fn from_generators(n: usize, generators: &[Vector<T>]) -> Result<Self> {
        for g in generators {
            check_dim(n, g.len())?;
        }
        let gens: Vec<Vector<T>> = generators.iter().map(|g| g.primitive()).collect();
        let (dual_lineality, dual_rays) = double_description(&gens, n);
        let equations = canonical_span(&dual_lineality, n);
        let facets = canonical_set(
            dual_rays
                .iter()
                .map(|f| project_off(f, &equations, n))
                .collect(),
        );
        Ok(Self::from_facets_and_equations(n, facets, equations))
    }

    pub fn from_rational_generators(n: usize, generators: &[Vector<Rational<T>>]) -> Result<Self> {
        let gens: Vec<Vector<T>> = generators.iter().map(|g| g.primitive_integer()).collect();
        Self::from_generators(n, &gens)
    }

    /// The cone `{x : a.x >= 0 for every a}`.
    pub fn from_inequalities(n: usize, inequalities: &[Vector<T>]) -> Result<Self> {
        for a in inequalities {
            check_dim(n, a.len())?;
        }
        let (lineality, rays) = double_description(inequalities, n);
        let mut gens = rays;
        for l in &lineality {
            gens.push(l.clone());
            gens.push(-l);
        }
        Self::from_generators(n, &gens)
    }

    fn from_facets_and_equations(
        n: usize,
        facets: Vec<Vector<T>>,
        equations: Vec<Vector<T>>,
    ) -> Self {
        let mut ineqs = facets.clone();
        for e in &equations {
            ineqs.push(e.clone());
            ineqs.push(-e);
        }
        let (lin, rays) = double_description(&ineqs, n);
        let lineality = canonical_span(&lin, n);
        let rays = canonical_set(rays.iter().map(|r| project_off(r, &lineality, n)).collect());
        Cone {
            ambient_rank: n,
            rays,
            lineality,
            facets,
            equations,
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_generators(n, &[]).expect("empty generator list")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rays(&self) -> &[Vector<T>] {
        &self.rays
    }

    pub fn facets(&self) -> &[Vector<T>] {
        &self.facets
    }

    pub fn equations(&self) -> &[Vector<T>] {
        &self.equations
    }

    pub fn lineality(&self) -> &[Vector<T>] {
        &self.lineality
    }

    pub fn dim(&self) -> usize {
        self.ambient_rank - self.equations.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    /// Facets together with both signs of every equation: a complete
    /// inequality description.
    pub fn all_inequalities(&self) -> Vec<Vector<T>> {
        let mut out = self.facets.clone();
        for e in &self.equations {
            out.push(e.clone());
            out.push(-e);
        }
        out.sort();
        out
    }

    /// All generators: rays and both signs of the lineality basis.
    pub fn generators(&self) -> Vec<Vector<T>> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(-l);
        }
        out
    }

    pub fn contains(&self, v: &Vector<Rational<T>>) -> Result<bool> {
        check_dim(self.ambient_rank, v.len())?;
        let ok = self.equations.iter().all(|e| e.to_rational().dot(v).is_zero())
            && self.facets.iter().all(|f| !f.to_rational().dot(v).is_negative());
        Ok(ok)
    }

    pub fn contains_int(&self, v: &Vector<T>) -> bool {
        v.len() == self.ambient_rank
            && self.equations.iter().all(|e| e.dot(v).is_zero())
            && self.facets.iter().all(|f| !f.dot(v).is_negative())
    }

    /// True when `v` lies in the relative interior.
    pub fn contains_relative_interior(&self, v: &Vector<T>) -> bool {
        self.contains_int(v) && self.facets.iter().all(|f| f.dot(v).is_positive())
    }

    pub fn contains_cone(&self, other: &Cone<T>) -> bool {
        other.generators().iter().all(|g| self.contains_int(g))
    }

    pub fn intersect(&self, other: &Cone<T>) -> Result<Self> {
        check_dim(self.ambient_rank, other.ambient_rank)?;
        let mut ineqs = self.all_inequalities();
        ineqs.extend(other.all_inequalities());
        Self::from_inequalities(self.ambient_rank, &ineqs)
    }

    /// The dual cone `{y : y.x >= 0 for all x in self}`.
    pub fn dual(&self) -> Self {
        Self::from_generators(self.ambient_rank, &self.all_inequalities())
            .expect("dimensions agree")
    }

    /// The face cut out by a subset of facets.
    pub fn face_cone(&self, face: &Face) -> Self {
        let mut gens: Vec<Vector<T>> = face.rays.iter().map(|&i| self.rays[i].clone()).collect();
        for l in &self.lineality {
            gens.push(l.clone());
            gens.push(-l);
        }
        Self::from_generators(self.ambient_rank, &gens).expect("dimensions agree")
    }

    fn face_from_rays(&self, rays: Vec<usize>) -> Face {
        let facets = (0..self.facets.len())
            .filter(|&j| rays.iter().all(|&r| self.facets[j].dot(&self.rays[r]).is_zero()))
            .collect();
        let vs: Vec<_> = rays.iter().map(|&r| self.rays[r].to_rational()).collect();
        let dim = self.lineality.len() + rank_of(&vs, self.ambient_rank);
        Face { dim, rays, facets }
    }

    /// The whole face lattice, sorted by dimension and then by ray indices;
    /// this is a linear extension of inclusion.
    pub fn faces(&self) -> Vec<Face> {
        let top = self.face_from_rays((0..self.rays.len()).collect());
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(top.rays.clone());
        let mut queue = VecDeque::from([top]);
        let mut out = Vec::new();
        while let Some(face) = queue.pop_front() {
            for j in 0..self.facets.len() {
                if face.facets.contains(&j) {
                    continue;
                }
                let rays: Vec<usize> = face
                    .rays
                    .iter()
                    .copied()
                    .filter(|&r| self.facets[j].dot(&self.rays[r]).is_zero())
                    .collect();
                if seen.insert(rays.clone()) {
                    queue.push_back(self.face_from_rays(rays));
                }
            }
            out.push(face);
        }
        out.sort();
        out
    }
}

/// The cone spanned by rational generators, with both descriptions.
pub fn dual_description<T: Integer>(n: usize, generators: &[Vector<Rational<T>>]) -> Result<Cone<T>> {
    Cone::from_rational_generators(n, generators)
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
    fn quadrant_is_self_dual() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert_eq!(c.facets(), &[iv(&[0, 1]), iv(&[1, 0])]);
        assert_eq!(c.rays(), &[iv(&[0, 1]), iv(&[1, 0])]);
    }

    #[test]
    fn skew_cone_facets() {
        let c = cone(&[&[1, 0], &[1, 2]]);
        assert_eq!(c.facets(), &[iv(&[0, 1]), iv(&[2, -1])]);
        let q = |a: i64, b: i64| -> Vector<Rational<BigInt>> { iv(&[a, b]).to_rational() };
        assert!(c.contains(&q(1, 1)).unwrap());
        assert!(!c.contains(&q(0, 1)).unwrap());
    }

    #[test]
    fn line_has_two_opposite_inequalities() {
        let c = cone(&[&[1, 0], &[-1, 0]]);
        assert_eq!(c.lineality(), &[iv(&[1, 0])]);
        assert!(c.rays().is_empty());
        assert!(c.facets().is_empty());
        assert_eq!(c.all_inequalities(), vec![iv(&[0, -1]), iv(&[0, 1])]);
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn interior_generator_is_not_a_ray() {
        let c = cone(&[&[1, 0], &[1, 1], &[1, 2]]);
        assert_eq!(c.rays(), &[iv(&[1, 0]), iv(&[1, 2])]);
        let faces = c.faces();
        assert_eq!(faces.len(), 4);
        assert_eq!(faces[0].dim, 0);
        assert_eq!(faces[3].dim, 2);
    }

    #[test]
    fn octant_has_eight_faces() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(c.faces().len(), 8);
    }

    #[test]
    fn square_pyramid() {
        let c = cone(&[&[1, 1, 1], &[1, -1, 1], &[-1, 1, 1], &[-1, -1, 1], &[0, 0, 1]]);
        assert_eq!(c.rays().len(), 4);
        assert_eq!(c.facets().len(), 4);
        assert_eq!(c.faces().len(), 10);
        let again = Cone::from_inequalities(3, c.facets()).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn half_plane_and_lower_dimensional() {
        let c = cone(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(c.facets(), &[iv(&[0, 1])]);
        assert_eq!(c.rays(), &[iv(&[0, 1])]);
        let ray = cone(&[&[1, 1, 0]]);
        assert_eq!(ray.dim(), 1);
        assert_eq!(ray.equations().len(), 2);
        assert_eq!(ray.faces().len(), 2);
        assert!(Cone::<BigInt>::zero(2).faces().len() == 1);
    }
}
