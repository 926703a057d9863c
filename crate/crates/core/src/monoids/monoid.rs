use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use num_traits::{Signed, Zero};

use super::{down_set_unchecked, elements_up_to};
use crate::cones::{lattice_generators, Cone};
use crate::error::{check_dim, Error, Result};
use crate::satake::SphericalLattice;
use crate::{Int, IntVec, Lattice};

/// A finitely generated submonoid of `X̆⁺`, given by generators in
/// `X`-coordinates.
#[derive(Debug)]
pub struct SphericalMonoid {
    sl: Arc<SphericalLattice>,
    generators: Vec<IntVec>,
    cone: OnceLock<Cone<Int>>,
    saturation: OnceLock<Vec<IntVec>>,
    units: OnceLock<Units>,
    saturated: OnceLock<bool>,
}

/// The unit group and a functional that is positive on every non-unit.
#[derive(Debug)]
struct Units {
    lattice: Lattice,
    non_units: Vec<IntVec>,
    functional: IntVec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosednessMode {
    /// Down-sets of the generators and of the saturation's Hilbert basis
    /// elements lying in the monoid.
    GeneratorDownSets,
    /// Down-sets of every element of generator-degree at most `bound`.
    BruteForce { bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosednessReport {
    pub closed: bool,
    pub mode: ClosednessMode,
    /// A positive verdict only covers the finitely many elements inspected.
    pub caveat: bool,
    /// `(mu, lambda)` with `mu` in the monoid, `lambda <= mu` dominant and
    /// outside it.
    pub witness: Option<(IntVec, IntVec)>,
}

impl SphericalMonoid {
    pub fn new(sl: Arc<SphericalLattice>, generators: Vec<IntVec>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for (k, g) in generators.into_iter().enumerate() {
            check_dim(sl.ambient_rank(), g.len())?;
            if !sl.contains(&g) {
                return Err(Error::InvalidMonoid(format!(
                    "generator {} is not in the spherical lattice",
                    k + 1
                )));
            }
            if !sl.datum().is_dominant(&g) {
                return Err(Error::InvalidMonoid(format!("generator {} is not dominant", k + 1)));
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        gens.sort();
        gens.dedup();
        Ok(Self {
            sl,
            generators: gens,
            cone: OnceLock::new(),
            saturation: OnceLock::new(),
            units: OnceLock::new(),
            saturated: OnceLock::new(),
        })
    }

    /// The whole of `X̆⁺`.
    pub fn dominant(sl: Arc<SphericalLattice>) -> Self {
        let gens = sl.dominant_generators().to_vec();
        Self::new(sl, gens).expect("generators of X̆⁺ are dominant")
    }

    pub fn spherical_lattice(&self) -> &Arc<SphericalLattice> {
        &self.sl
    }

    /// Nonzero generators, sorted and deduplicated.
    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    pub fn ambient_rank(&self) -> usize {
        self.sl.ambient_rank()
    }

    pub fn cone(&self) -> &Cone<Int> {
        self.cone.get_or_init(|| {
            Cone::from_generators(self.ambient_rank(), &self.generators).expect("dimensions agree")
        })
    }

    /// Generators of `cone(L) ∩ X̆`: its Hilbert basis when the cone is
    /// pointed.
    pub fn saturation_basis(&self) -> &[IntVec] {
        self.saturation.get_or_init(|| {
            lattice_generators(self.cone(), self.sl.lattice()).expect("dimensions agree")
        })
    }

    fn units(&self) -> &Units {
        self.units.get_or_init(|| {
            let cone = self.cone();
            let (units, non_units): (Vec<IntVec>, Vec<IntVec>) = self
                .generators
                .iter()
                .cloned()
                .partition(|g| cone.facets().iter().all(|f| f.dot(g).is_zero()));
            let functional = cone
                .facets()
                .iter()
                .fold(IntVec::zeros(self.ambient_rank()), |acc, f| &acc + f);
            Units {
                lattice: Lattice::new(self.ambient_rank(), &units).expect("dimensions agree"),
                non_units,
                functional,
            }
        })
    }

    /// The group of invertible elements.
    pub fn unit_lattice(&self) -> &Lattice {
        &self.units().lattice
    }

    /// Generators that are not units.
    pub fn non_unit_generators(&self) -> &[IntVec] {
        &self.units().non_units
    }

    pub fn member(&self, mu: &IntVec) -> bool {
        if mu.len() != self.ambient_rank() || !self.cone().contains_int(mu) || !self.sl.contains(mu)
        {
            return false;
        }
        if self.is_saturated() {
            return true;
        }
        self.search(mu)
    }

    /// Decides membership by enumerating combinations of the non-unit
    /// generators, bounded by the positive functional, and testing the
    /// remainder against the unit group.
    fn search(&self, mu: &IntVec) -> bool {
        let mut failed = HashSet::new();
        self.search_from(mu.clone(), 0, &mut failed)
    }

    fn search_from(&self, target: IntVec, k: usize, failed: &mut HashSet<(usize, IntVec)>) -> bool {
        let units = self.units();
        if k == units.non_units.len() {
            return if units.lattice.rank() == 0 {
                target.is_zero()
            } else {
                units.lattice.coordinates(&target).is_some()
            };
        }
        if failed.contains(&(k, target.clone())) {
            return false;
        }
        let g = &units.non_units[k];
        let fg = units.functional.dot(g);
        let ft = units.functional.dot(&target);
        let max = if ft.is_negative() { Int::zero() } else { ft / fg };
        let mut c = max;
        loop {
            let rest = target.combine(&Int::from(1), g, &-c.clone());
            if self.cone().contains_int(&rest) && self.search_from(rest, k + 1, failed) {
                return true;
            }
            if c.is_zero() {
                break;
            }
            c -= 1;
        }
        failed.insert((k, target));
        false
    }

    /// The generators span `X̆` as a group.
    pub fn generates_lattice(&self) -> bool {
        self.sl.lattice().index_of(&self.generators) == Some(Int::from(1))
    }

    /// `L = cone(L) ∩ X̆`.
    pub fn is_saturated(&self) -> bool {
        *self
            .saturated
            .get_or_init(|| self.saturation_basis().iter().all(|h| self.search(h)))
    }

    pub fn saturate(&self) -> SphericalMonoid {
        let out = Self::new(self.sl.clone(), self.saturation_basis().to_vec())
            .expect("the saturation lies in X̆⁺");
        let _ = out.saturated.set(true);
        out
    }

    /// Elements of generator-degree at most `bound`, sorted; for saturated
    /// monoids the degree refers to the Hilbert basis.
    pub fn elements_up_to(&self, bound: usize) -> Vec<IntVec> {
        let gens = if self.is_saturated() && self.cone().is_pointed() {
            self.saturation_basis()
        } else {
            &self.generators
        };
        elements_up_to(gens, bound, self.ambient_rank())
    }

    pub fn is_closed(&self, mode: ClosednessMode) -> ClosednessReport {
        let candidates: Vec<IntVec> = match mode {
            ClosednessMode::GeneratorDownSets => {
                let mut c = self.generators.clone();
                c.extend(self.saturation_basis().iter().filter(|h| self.member(h)).cloned());
                c.sort();
                c.dedup();
                c
            }
            ClosednessMode::BruteForce { bound } => self.elements_up_to(bound),
        };
        for mu in &candidates {
            if let Some(lambda) = down_set_unchecked(&self.sl, mu)
                .into_iter()
                .find(|l| !self.member(l))
            {
                return ClosednessReport {
                    closed: false,
                    mode,
                    caveat: false,
                    witness: Some((mu.clone(), lambda)),
                };
            }
        }
        ClosednessReport {
            closed: true,
            mode,
            caveat: true,
            witness: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::int_vec;

    fn rank_one() -> Arc<SphericalLattice> {
        catalog::spherical("AI.sl.2").unwrap()
    }

    #[test]
    fn membership() {
        let l = SphericalMonoid::new(rank_one(), vec![int_vec(&[2])]).unwrap();
        assert!(l.member(&int_vec(&[6])));
        let l = SphericalMonoid::new(rank_one(), vec![int_vec(&[4])]).unwrap();
        assert!(!l.member(&int_vec(&[2])));
        assert!(l.member(&int_vec(&[8])));
        let l = SphericalMonoid::new(rank_one(), vec![int_vec(&[4]), int_vec(&[6])]).unwrap();
        assert!(l.member(&int_vec(&[10])));
        assert!(!l.member(&int_vec(&[2])));
        assert!(l.member(&int_vec(&[0])));
    }

    #[test]
    fn rank_one_predicates() {
        let full = SphericalMonoid::new(rank_one(), vec![int_vec(&[2])]).unwrap();
        assert!(full.generates_lattice());
        assert!(full.is_saturated());
        assert!(full.is_closed(ClosednessMode::GeneratorDownSets).closed);
        assert!(full.is_closed(ClosednessMode::BruteForce { bound: 4 }).closed);

        let sparse = SphericalMonoid::new(rank_one(), vec![int_vec(&[4])]).unwrap();
        assert!(!sparse.generates_lattice());
        assert!(!sparse.is_saturated());
        assert_eq!(sparse.saturate().generators(), &[int_vec(&[2])]);
        let report = sparse.is_closed(ClosednessMode::GeneratorDownSets);
        assert!(!report.closed);
        assert_eq!(report.witness, Some((int_vec(&[4]), int_vec(&[2]))));
    }

    #[test]
    fn rejects_generators_outside_the_dominant_monoid() {
        assert!(SphericalMonoid::new(rank_one(), vec![int_vec(&[1])]).is_err());
        assert!(SphericalMonoid::new(rank_one(), vec![int_vec(&[-2])]).is_err());
    }
}
