use std::collections::BTreeSet;

use num_traits::Zero;

use super::enveloping::EnvelopingMonoid;
use crate::cones::Cone;
use crate::monoids::SphericalMonoid;
use crate::{IntVec, Lattice};

/// The central part `L_Z` of a monoid, its unit group `M_0`, and the order
/// `M1 <=_Z M2` iff `M2 - M1 in L_Z`.
#[derive(Debug)]
pub struct Abelianization<'a> {
    monoid: &'a SphericalMonoid,
    central: Vec<IntVec>,
    non_unit_central: Vec<IntVec>,
    units: Lattice,
}

/// `L_Z` is the face of `L` cut out by the coroot pairings, so it is
/// generated by the generators of `L` lying on it.
pub fn abelianization(monoid: &SphericalMonoid) -> Abelianization<'_> {
    let n = monoid.ambient_rank();
    let datum = monoid.spherical_lattice().datum();
    let central: Vec<IntVec> = monoid
        .generators()
        .iter()
        .filter(|g| datum.pairings(g).iter().all(Zero::is_zero))
        .cloned()
        .collect();
    let cone = Cone::from_generators(n, &central).expect("dimensions agree");
    let (unit_gens, non_unit_central): (Vec<IntVec>, Vec<IntVec>) =
        central.iter().cloned().partition(|g| cone.contains_int(&-g));
    let units = Lattice::new(n, &unit_gens).expect("dimensions agree");
    Abelianization {
        monoid,
        central,
        non_unit_central,
        units,
    }
}

impl Abelianization<'_> {
    pub fn monoid(&self) -> &SphericalMonoid {
        self.monoid
    }

    /// Generators of `L_Z`.
    pub fn central_generators(&self) -> &[IntVec] {
        &self.central
    }

    /// `M_0 = L_Z ∩ -L_Z`.
    pub fn units(&self) -> &Lattice {
        &self.units
    }

    pub fn is_central(&self, mu: &IntVec) -> bool {
        let datum = self.monoid.spherical_lattice().datum();
        datum.pairings(mu).iter().all(Zero::is_zero) && self.monoid.member(mu)
    }

    pub fn le_z(&self, m1: &IntVec, m2: &IntVec) -> bool {
        self.is_central(&(m2 - m1))
    }

    /// Nothing lies strictly below `mu`. Subtracting a non-unit of `L_Z`
    /// always subtracts a non-unit generator, so those suffice.
    pub fn is_minimal(&self, mu: &IntVec) -> bool {
        self.monoid.member(mu) && self.non_unit_central.iter().all(|g| !self.monoid.member(&(mu - g)))
    }

    /// Minimal elements among the sums of at most `bound` generators.
    pub fn minimal_elements(&self, bound: usize) -> Vec<IntVec> {
        self.monoid
            .elements_up_to(bound)
            .into_iter()
            .filter(|m| self.is_minimal(m))
            .collect()
    }

    fn central_elements(&self, bound: usize) -> Vec<IntVec> {
        let n = self.monoid.ambient_rank();
        let mut all = BTreeSet::from([IntVec::zeros(n)]);
        let mut layer = all.clone();
        for _ in 0..bound {
            layer = layer
                .iter()
                .flat_map(|x| self.central.iter().map(move |g| x + g))
                .filter(|x| !all.contains(x))
                .collect();
            all.extend(layer.iter().cloned());
        }
        all.into_iter().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VeryFlatReport {
    pub bound: usize,
    /// The verdict covers only elements of generator-degree at most `bound`.
    pub bounded: bool,
    /// The verdict is certified for the whole monoid.
    pub exact: bool,
    /// `M1 + chi1 = M2 + chi2` forces `M1 ~ M2`.
    pub flat: bool,
    /// The minimal elements form a submonoid.
    pub submonoid: bool,
    pub minimal_count: usize,
    /// `(M1, M2)` with `M2 - M1` a difference of central elements but not a unit.
    pub flat_witness: Option<(IntVec, IntVec)>,
    /// Minimal `(M1, M2)` with non-minimal sum.
    pub submonoid_witness: Option<(IntVec, IntVec)>,
    /// For enveloping monoids: the minimal elements are exactly the diagonal.
    pub diagonal: Option<bool>,
}

impl VeryFlatReport {
    pub fn very_flat(&self) -> bool {
        self.flat && self.submonoid && self.diagonal != Some(false)
    }
}

pub fn is_very_flat(monoid: &SphericalMonoid, bound: usize) -> VeryFlatReport {
    let ab = abelianization(monoid);
    let minimal = ab.minimal_elements(bound);
    let central = ab.central_elements(bound);
    let differences: BTreeSet<IntVec> = central
        .iter()
        .flat_map(|a| central.iter().map(move |b| a - b))
        .collect();

    let mut flat_witness = None;
    let mut submonoid_witness = None;
    let zero_minimal = ab.is_minimal(&IntVec::zeros(monoid.ambient_rank()));
    for (i, m1) in minimal.iter().enumerate() {
        for m2 in &minimal[i..] {
            let d = m2 - m1;
            if flat_witness.is_none()
                && differences.contains(&d)
                && !ab.units().member(&d).expect("dimensions agree")
            {
                flat_witness = Some((m1.clone(), m2.clone()));
            }
            if submonoid_witness.is_none() && !ab.is_minimal(&(m1 + m2)) {
                submonoid_witness = Some((m1.clone(), m2.clone()));
            }
        }
    }
    VeryFlatReport {
        bound,
        bounded: true,
        exact: false,
        flat: flat_witness.is_none(),
        submonoid: zero_minimal && submonoid_witness.is_none(),
        minimal_count: minimal.len(),
        flat_witness,
        submonoid_witness,
        diagonal: None,
    }
}

impl EnvelopingMonoid {
    /// The bounded test, plus the diagonal description of the minimal
    /// elements checked in both directions up to `bound`.
    pub fn very_flat(&self, bound: usize) -> VeryFlatReport {
        let mut report = is_very_flat(self.monoid(), bound);
        let ab = abelianization(self.monoid());
        let is_diagonal = |v: &IntVec| {
            let (a, b) = self.split(v);
            a == b
        };
        let all_diagonal = ab.minimal_elements(bound).iter().all(is_diagonal);
        let diagonal_minimal = crate::monoids::SphericalMonoid::dominant(self.base().clone())
            .elements_up_to(bound)
            .iter()
            .all(|l| ab.is_minimal(&l.concat(l)));
        let diagonal = all_diagonal && diagonal_minimal;
        report.diagonal = Some(diagonal);
        report.exact = diagonal && report.flat && report.submonoid;
        report.bounded = !report.exact;
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::embeddings::enveloping_monoid;
    use crate::int_vec;

    #[test]
    fn dominant_monoid_is_trivially_flat() {
        let sl = catalog::spherical("AI.sl.3").unwrap();
        let l = SphericalMonoid::dominant(sl);
        let ab = abelianization(&l);
        assert!(ab.central_generators().is_empty());
        assert_eq!(ab.units().rank(), 0);
        let r = is_very_flat(&l, 3);
        assert!(r.very_flat());
        assert_eq!(r.minimal_count, l.elements_up_to(3).len());
    }

    #[test]
    fn enveloping_rank_one() {
        let em = enveloping_monoid(&catalog::spherical("AI.sl.2").unwrap()).unwrap();
        let ab = abelianization(em.monoid());
        assert_eq!(ab.central_generators(), &[int_vec(&[0, 2])]);
        assert_eq!(ab.units().rank(), 0);
        assert!(ab.le_z(&int_vec(&[2, 2]), &int_vec(&[2, 6])));
        assert!(!ab.le_z(&int_vec(&[2, 6]), &int_vec(&[2, 2])));
        assert_eq!(
            ab.minimal_elements(4),
            vec![int_vec(&[0, 0]), int_vec(&[2, 2]), int_vec(&[4, 4]), int_vec(&[6, 6]), int_vec(&[8, 8])]
        );
        let r = em.very_flat(4);
        assert!(r.very_flat());
        assert!(r.exact);
        assert!(!r.bounded);
    }
}
