use std::fmt::Write as _;

use num_traits::One;

use crate::cones::{lattice_generators, Cone};
use crate::error::{Error, Result};
use crate::satake::SphericalLattice;
use crate::{Int, IntVec};

/// Orbits of the canonical embedding, indexed by subsets of the white
/// representatives, with the chart monoid `C = {mu in X̆ : mu ⪯ 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalEmbedding {
    /// Subsets of node indices, by size and then lexicographically. The
    /// orbit of `J` lies in the closure of the orbit of `J'` iff `J ⊆ J'`;
    /// the full set is the open orbit and the empty set the closed one.
    pub subsets: Vec<Vec<usize>>,
    pub chart_cone: Cone<Int>,
    pub chart_basis: Vec<IntVec>,
    /// Index of the lattice spanned by the spherical roots in `X̆`.
    pub index: Int,
    pub smooth: bool,
}

pub fn canonical_embedding(sl: &SphericalLattice) -> Result<CanonicalEmbedding> {
    if !sl.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let nodes = sl.ird().white_prime();
    let r = nodes.len();
    let mut subsets: Vec<Vec<usize>> = (0..1usize << r)
        .map(|mask| (0..r).filter(|k| mask >> k & 1 == 1).map(|k| nodes[k]).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let neg: Vec<IntVec> = sl.bar_alpha().iter().map(|b| b.scale(&-Int::one())).collect();
    let chart_cone = Cone::from_generators(sl.ambient_rank(), &neg).expect("dimensions agree");
    let chart_basis = lattice_generators(&chart_cone, sl.lattice()).expect("dimensions agree");
    let mut expected: Vec<IntVec> = sl
        .spherical_roots()
        .iter()
        .map(|a| a.scale(&-Int::one()).primitive())
        .collect();
    expected.sort();
    assert_eq!(chart_cone.rays(), expected.as_slice(), "chart rays are the negative spherical roots");

    let index = sl
        .lattice()
        .index_of(sl.spherical_roots())
        .expect("spherical roots span X̆ rationally");
    let smooth = index.is_one();
    Ok(CanonicalEmbedding {
        subsets,
        chart_cone,
        chart_basis,
        index,
        smooth,
    })
}

impl CanonicalEmbedding {
    pub fn orbit_count(&self) -> usize {
        self.subsets.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.subsets[a].iter().all(|x| self.subsets[b].contains(x))
    }

    /// Covering pairs: subsets differing by one node.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.subsets.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.subsets[b].len() == self.subsets[a].len() + 1 && self.leq(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph canonical {\n  rankdir=BT;\n");
        for (i, j) in self.subsets.iter().enumerate() {
            let labels: Vec<String> = j.iter().map(|x| (x + 1).to_string()).collect();
            let _ = writeln!(s, "  n{i} [label=\"{{{}}}\"];", labels.join(","));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::int_vec;

    #[test]
    fn rank_one() {
        let c = canonical_embedding(&catalog::spherical("AI.sl.2").unwrap()).unwrap();
        assert_eq!(c.orbit_count(), 2);
        assert_eq!(c.chart_basis, vec![int_vec(&[-2])]);
        assert!(c.smooth);
    }

    #[test]
    fn split_rank_two() {
        let c = canonical_embedding(&catalog::spherical("AI.sl.3").unwrap()).unwrap();
        assert_eq!(c.orbit_count(), 4);
        assert!(!c.smooth);
        assert_eq!(c.index, Int::from(3));
        assert_eq!(c.chart_basis.len(), 4);
        assert_eq!(c.covers().len(), 4);
        let c = canonical_embedding(&catalog::spherical("AI.ad.2").unwrap()).unwrap();
        assert!(c.smooth);
    }
}
