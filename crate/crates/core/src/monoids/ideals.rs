use std::fmt::Write as _;

use num_traits::Zero;

use super::monoid::{ClosednessMode, SphericalMonoid};
use super::down_set_unchecked;
use crate::cones::{Cone, Face};
use crate::error::{Error, Result};
use crate::{Int, IntVec};

/// The prime ideal `L \ F` of a monoid, for a face `F` of its cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIdeal {
    pub face: Face,
    pub face_cone: Cone<Int>,
}

impl PrimeIdeal {
    fn from_face(cone: &Cone<Int>, face: Face) -> Self {
        let face_cone = cone.face_cone(&face);
        Self { face, face_cone }
    }

    /// Membership for elements already known to lie in the monoid.
    pub fn contains(&self, mu: &IntVec) -> bool {
        !self.face_cone.contains_int(mu)
    }

    /// Ray generators of the complementary face.
    pub fn face_rays(&self) -> &[IntVec] {
        self.face_cone.rays()
    }
}

fn require_valid(l: &SphericalMonoid) -> Result<()> {
    if !l.generates_lattice() {
        return Err(Error::InvalidMonoid("does not generate the spherical lattice".into()));
    }
    if !l.is_saturated() {
        return Err(Error::InvalidMonoid("not saturated".into()));
    }
    if !l.is_closed(ClosednessMode::GeneratorDownSets).closed {
        return Err(Error::InvalidMonoid("not closed".into()));
    }
    Ok(())
}

fn in_face(cone: &Cone<Int>, face: &Face, x: &IntVec) -> bool {
    cone.contains_int(x) && face.facets.iter().all(|&j| cone.facets()[j].dot(x).is_zero())
}

/// Nonzero closed prime ideals, one per proper face of `cone(L)` whose
/// ideal is closed on every element of degree at most `bound`.
pub fn closed_prime_ideals(l: &SphericalMonoid, bound: usize) -> Result<Vec<PrimeIdeal>> {
    require_valid(l)?;
    let cone = l.cone();
    let elements = l.elements_up_to(bound);
    let sl = l.spherical_lattice();
    let down_sets: Vec<Vec<IntVec>> = elements.iter().map(|e| down_set_unchecked(sl, e)).collect();
    let top = cone.dim();
    let mut out = Vec::new();
    for face in cone.faces().into_iter().filter(|f| f.dim < top) {
        let closed = elements.iter().zip(&down_sets).all(|(e, ds)| {
            in_face(cone, &face, e) || ds.iter().all(|d| !in_face(cone, &face, d))
        });
        if closed {
            out.push(PrimeIdeal::from_face(cone, face));
        }
    }
    Ok(out)
}

/// Orbit closures of an affine embedding: the closed prime ideals plus the
/// zero ideal of the open orbit, ordered by closure containment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPoset {
    nodes: Vec<PrimeIdeal>,
    bound: usize,
}

pub fn orbit_poset(l: &SphericalMonoid, bound: usize) -> Result<OrbitPoset> {
    let mut nodes = closed_prime_ideals(l, bound)?;
    let cone = l.cone();
    let whole = cone
        .faces()
        .into_iter()
        .find(|f| f.dim == cone.dim())
        .expect("the cone is a face of itself");
    nodes.push(PrimeIdeal::from_face(cone, whole));
    Ok(OrbitPoset { nodes, bound })
}

impl OrbitPoset {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Nodes sorted by face dimension; the open orbit is last.
    pub fn nodes(&self) -> &[PrimeIdeal] {
        &self.nodes
    }

    pub fn open_orbit(&self) -> usize {
        self.nodes.len() - 1
    }

    /// The closure of orbit `a` is contained in the closure of orbit `b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.nodes[a].face.is_subface_of(&self.nodes[b].face)
    }

    /// Covering pairs `(a, b)` with `a < b` and nothing in between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.nodes.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = (0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph orbits {\n  rankdir=BT;\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let rays: Vec<String> = node.face_rays().iter().map(format_vec).collect();
            let label = if i == self.open_orbit() {
                "open".to_string()
            } else {
                format!("dim {}: {}", node.face.dim, rays.join(" "))
            };
            let _ = writeln!(s, "  n{i} [label=\"{label}\"];");
        }
        for (a, b) in self.covers() {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) fn format_vec(v: &IntVec) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn dominant_monoid_has_no_closed_prime_ideals() {
        for name in ["AI.sl.2", "AI.sl.3", "AI.ad.2", "group.A1"] {
            let sl = catalog::spherical(name).unwrap();
            let l = SphericalMonoid::dominant(sl);
            assert!(closed_prime_ideals(&l, 4).unwrap().is_empty(), "{name}");
            let poset = orbit_poset(&l, 4).unwrap();
            assert_eq!(poset.len(), 1);
            assert!(poset.to_dot().contains("open"));
        }
    }

    #[test]
    fn invalid_monoids_are_rejected() {
        let sl = catalog::spherical("AI.sl.2").unwrap();
        let l = SphericalMonoid::new(sl, vec![crate::int_vec(&[4])]).unwrap();
        assert!(closed_prime_ideals(&l, 4).is_err());
    }
}
