//! Satake data, the induced involution on `X`, and the spherical lattice.
//!
//! Node indices are 0-based in the API; errors and serialized output use
//! 1-based labels.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::cones::{lattice_generators, Cone};
use crate::error::{check_dim, Axiom, Error, Result};
use crate::linalg::rational::{inverse, rank_of};
use crate::linalg::{integer_kernel, Matrix, Vector};
use crate::root_datum::{classify_type, CartanType, RootDatum};
use crate::{Int, IntMat, IntVec, Lattice, Rat, RatMat, RatVec};

/// Black nodes, the diagram involution, and its lift to `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakeData {
    pub black: Vec<usize>,
    pub tau: Vec<usize>,
    pub tau_x: IntMat,
    /// Representatives of the `tau`-orbits on white nodes; smallest index
    /// per orbit when absent.
    pub white_representatives: Option<Vec<usize>>,
}

/// A root datum with Satake data and the derived involution `theta_X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IRootDatum {
    datum: RootDatum,
    satake: SatakeData,
    theta: IntMat,
    w_black: IntMat,
    white: Vec<usize>,
    white_prime: Vec<usize>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSatake(msg.into())
}

pub fn build_iroot_datum(datum: RootDatum, satake: SatakeData) -> Result<IRootDatum> {
    let n = datum.size();
    let rank = datum.rank();
    if satake.tau.len() != n {
        return Err(invalid(format!("tau has {} entries, expected {n}", satake.tau.len())));
    }
    let mut hit = vec![false; n];
    for &t in &satake.tau {
        if t >= n || std::mem::replace(&mut hit[t], true) {
            return Err(invalid("tau is not a permutation of the nodes"));
        }
    }
    if let Some(i) = (0..n).find(|&i| satake.tau[satake.tau[i]] != i) {
        return Err(invalid(format!("tau is not an involution at node {}", i + 1)));
    }
    let mut black = satake.black.clone();
    black.sort();
    black.dedup();
    if let Some(&b) = black.iter().find(|&&b| b >= n) {
        return Err(Error::BadLabel(b + 1));
    }
    if let Some(&b) = black.iter().find(|&&b| !black.contains(&satake.tau[b])) {
        return Err(invalid(format!("tau does not preserve the black nodes at node {}", b + 1)));
    }
    if satake.tau_x.rows() != rank || satake.tau_x.cols() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            found: satake.tau_x.rows(),
        });
    }
    if !satake.tau_x.mul(&satake.tau_x).is_identity() {
        return Err(invalid("tau_X is not an involution"));
    }

    let w_black = datum.parabolic_longest(&black)?;
    let roots = datum.simple_roots();
    for &i in &black {
        if w_black.apply(&roots[i]) != -&roots[satake.tau[i]] {
            return Err(Error::Axiom {
                axiom: Axiom::ParabolicLongest,
                label: i + 1,
            });
        }
    }
    let theta = w_black.mul(&satake.tau_x).scale(&-Int::one());
    for i in 0..n {
        let expected = -&w_black.apply(&roots[satake.tau[i]]);
        if theta.apply(&roots[i]) != expected {
            return Err(Error::Axiom {
                axiom: Axiom::ThetaOnSimpleRoots,
                label: i + 1,
            });
        }
    }
    if !theta.mul(&theta).is_identity() {
        return Err(Error::ThetaNotInvolution);
    }

    let white: Vec<usize> = (0..n).filter(|i| !black.contains(i)).collect();
    let white_prime = match &satake.white_representatives {
        None => white
            .iter()
            .copied()
            .filter(|&i| i <= satake.tau[i])
            .collect(),
        Some(reps) => {
            let mut reps = reps.clone();
            reps.sort();
            for &r in &reps {
                if !white.contains(&r) {
                    return Err(Error::BadLabel(r + 1));
                }
            }
            for &i in &white {
                let count = reps.iter().filter(|&&r| r == i || r == satake.tau[i]).count();
                if count != 1 {
                    return Err(invalid(format!(
                        "white representatives must pick one node per tau-orbit (node {})",
                        i + 1
                    )));
                }
            }
            reps
        }
    };
    let satake = SatakeData { black, ..satake };
    Ok(IRootDatum {
        datum,
        satake,
        theta,
        w_black,
        white,
        white_prime,
    })
}

/// `t_ij` for white `i` and black `j`:
/// `theta(alpha_i) = -alpha_{tau i} - sum_j t_ij alpha_j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TCoeffs {
    pub t: BTreeMap<(usize, usize), Int>,
}

impl TCoeffs {
    pub fn get(&self, i: usize, j: usize) -> Int {
        self.t.get(&(i, j)).cloned().unwrap_or_default()
    }
}

/// Solves for the t-coefficients of an arbitrary candidate involution and
/// checks they are nonnegative integers, symmetric under `tau`.
pub fn t_coefficients_for(
    datum: &RootDatum,
    satake: &SatakeData,
    theta: &IntMat,
) -> Result<TCoeffs> {
    let n = datum.size();
    let roots = datum.simple_roots();
    let white: Vec<usize> = (0..n).filter(|i| !satake.black.contains(i)).collect();
    let mut t = BTreeMap::new();
    for &i in &white {
        let v = -&(&theta.apply(&roots[i]) + &roots[satake.tau[i]]);
        let coeffs = datum.root_coordinates(&v.to_rational()).ok_or_else(|| {
            Error::InvalidTCoefficient {
                i: i + 1,
                j: 0,
                reason: "not in the span of the simple roots".into(),
            }
        })?;
        for (j, c) in coeffs.iter().enumerate() {
            let err = |reason: &str| Error::InvalidTCoefficient {
                i: i + 1,
                j: j + 1,
                reason: reason.into(),
            };
            if !satake.black.contains(&j) {
                if !c.is_zero() {
                    return Err(err("nonzero coefficient on a white node"));
                }
                continue;
            }
            if !c.is_integer() {
                return Err(err("not an integer"));
            }
            if c.is_negative() {
                return Err(err("negative"));
            }
            t.insert((i, j), c.to_integer());
        }
    }
    for (&(i, j), v) in &t {
        let partner = t.get(&(satake.tau[i], j)).cloned().unwrap_or_default();
        if *v != partner {
            return Err(Error::InvalidTCoefficient {
                i: i + 1,
                j: j + 1,
                reason: "not symmetric under tau".into(),
            });
        }
    }
    Ok(TCoeffs { t })
}

impl IRootDatum {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn satake(&self) -> &SatakeData {
        &self.satake
    }

    pub fn theta(&self) -> &IntMat {
        &self.theta
    }

    pub fn w_black(&self) -> &IntMat {
        &self.w_black
    }

    pub fn black(&self) -> &[usize] {
        &self.satake.black
    }

    pub fn tau(&self, i: usize) -> usize {
        self.satake.tau[i]
    }

    pub fn white(&self) -> &[usize] {
        &self.white
    }

    pub fn white_prime(&self) -> &[usize] {
        &self.white_prime
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// `mu - theta_X(mu)`.
    pub fn bar(&self, mu: &IntVec) -> Result<IntVec> {
        check_dim(self.rank(), mu.len())?;
        Ok(mu - &self.theta.apply(mu))
    }

    pub fn bar_rational(&self, mu: &RatVec) -> RatVec {
        mu - &self.theta.to_rational().apply(mu)
    }

    pub fn t_coefficients(&self) -> Result<TCoeffs> {
        t_coefficients_for(&self.datum, &self.satake, &self.theta)
    }

    /// The datum on `X ⊕ X` for `G × T`: roots `(alpha_i, 0)`, the same
    /// Satake nodes, and `tau_X ⊕ (-theta_X)` so that the induced involution
    /// is `theta_X ⊕ theta_X`.
    pub fn doubled(&self) -> Result<IRootDatum> {
        let r = self.rank();
        let pad = |v: &IntVec| v.concat(&Vector::zeros(r));
        let datum = RootDatum::new(
            2 * r,
            self.datum.simple_roots().iter().map(pad).collect(),
            self.datum.simple_coroots().iter().map(pad).collect(),
        )?;
        let tau_x = self
            .satake
            .tau_x
            .direct_sum(&self.theta.scale(&-Int::one()));
        let satake = SatakeData {
            black: self.satake.black.clone(),
            tau: self.satake.tau.clone(),
            tau_x,
            white_representatives: Some(self.white_prime.clone()),
        };
        build_iroot_datum(datum, satake)
    }
}

/// The lattice `{mu - theta_X(mu)}` with its restricted roots.
#[derive(Debug)]
pub struct SphericalLattice {
    ird: IRootDatum,
    lattice: Lattice,
    bar_alpha: Vec<IntVec>,
    spherical_roots: Vec<IntVec>,
    cartan: IntMat,
    cartan_type: CartanType,
    dominant_generators: OnceLock<Vec<IntVec>>,
    root_cone_basis: OnceLock<Vec<IntVec>>,
    cartan_inverse: OnceLock<RatMat>,
}

pub fn spherical_lattice(ird: &IRootDatum) -> Result<SphericalLattice> {
    let r = ird.rank();
    let id_minus_theta = Matrix::identity(r).sub(ird.theta());
    let lattice = Lattice::new(r, &id_minus_theta.column_vectors())?;
    let roots = ird.datum().simple_roots();
    let coroots = ird.datum().simple_coroots();
    let bar_alpha: Vec<IntVec> = ird
        .white_prime()
        .iter()
        .map(|&i| ird.bar(&roots[i]))
        .collect::<Result<_>>()?;
    let qs: Vec<RatVec> = bar_alpha.iter().map(|v| v.to_rational()).collect();
    if rank_of(&qs, r) != bar_alpha.len() {
        return Err(Error::SphericalCartan(
            "restricted simple roots are linearly dependent".into(),
        ));
    }
    let spherical_roots = bar_alpha
        .iter()
        .map(|b| lattice.primitive_on_ray(&b.to_rational()))
        .collect::<Result<Vec<_>>>()?;
    let k = bar_alpha.len();
    let wp = ird.white_prime();
    let cartan = Matrix::from_rows(
        (0..k)
            .map(|i| (0..k).map(|j| coroots[wp[j]].dot(&bar_alpha[i])).collect())
            .collect(),
        k,
    );
    let cartan_type =
        classify_type(&cartan, true).map_err(|e| Error::SphericalCartan(e.to_string()))?;
    Ok(SphericalLattice {
        ird: ird.clone(),
        lattice,
        bar_alpha,
        spherical_roots,
        cartan,
        cartan_type,
        dominant_generators: OnceLock::new(),
        root_cone_basis: OnceLock::new(),
        cartan_inverse: OnceLock::new(),
    })
}

impl SphericalLattice {
    pub fn ird(&self) -> &IRootDatum {
        &self.ird
    }

    pub fn datum(&self) -> &RootDatum {
        self.ird.datum()
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn ambient_rank(&self) -> usize {
        self.ird.rank()
    }

    /// `bar(alpha_i)` for the white representatives, in order.
    pub fn bar_alpha(&self) -> &[IntVec] {
        &self.bar_alpha
    }

    pub fn spherical_roots(&self) -> &[IntVec] {
        &self.spherical_roots
    }

    /// `A_ij = <coroot_j, bar(alpha_i)>` over the white representatives.
    pub fn cartan(&self) -> &IntMat {
        &self.cartan
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    /// Number of white representatives.
    pub fn spherical_rank(&self) -> usize {
        self.bar_alpha.len()
    }

    /// The restricted roots span `X̆` rationally.
    pub fn is_semisimple(&self) -> bool {
        self.rank() == self.spherical_rank()
    }

    pub fn contains(&self, mu: &IntVec) -> bool {
        self.lattice.coordinates(mu).is_some()
    }

    pub fn is_dominant_member(&self, mu: &IntVec) -> bool {
        self.contains(mu) && self.datum().is_dominant(mu)
    }

    /// Inner normals of the rational span of `X̆`, as equations.
    pub fn span_equations(&self) -> Vec<IntVec> {
        if self.lattice.rank() == 0 {
            return (0..self.ambient_rank())
                .map(|i| Vector::unit(self.ambient_rank(), i))
                .collect();
        }
        integer_kernel(&Matrix::from_row_vectors(
            self.lattice.basis(),
            self.ambient_rank(),
        ))
    }

    /// The rational cone spanned by `X̆⁺`.
    pub fn dominant_cone(&self) -> Cone<Int> {
        let mut ineqs: Vec<IntVec> = self.datum().simple_coroots().to_vec();
        for e in self.span_equations() {
            ineqs.push(-&e);
            ineqs.push(e);
        }
        Cone::from_inequalities(self.ambient_rank(), &ineqs).expect("dimensions agree")
    }

    /// The cone spanned by the restricted simple roots.
    pub fn root_cone(&self) -> Cone<Int> {
        Cone::from_generators(self.ambient_rank(), &self.bar_alpha).expect("dimensions agree")
    }

    /// Generators of the monoid `X̆⁺`; its Hilbert basis when pointed.
    pub fn dominant_generators(&self) -> &[IntVec] {
        self.dominant_generators.get_or_init(|| {
            lattice_generators(&self.dominant_cone(), &self.lattice).expect("dimensions agree")
        })
    }

    /// Hilbert basis of `X̆ ∩ cone(bar alpha)`.
    pub fn root_cone_basis(&self) -> &[IntVec] {
        self.root_cone_basis.get_or_init(|| {
            lattice_generators(&self.root_cone(), &self.lattice).expect("dimensions agree")
        })
    }

    fn require_member(&self, mu: &IntVec) -> Result<()> {
        check_dim(self.ambient_rank(), mu.len())?;
        if self.contains(mu) {
            Ok(())
        } else {
            Err(Error::NotInSphericalLattice)
        }
    }

    /// `mu ⪯ lambda`: `lambda - mu` lies in the rational cone of the
    /// restricted roots.
    pub fn preceq(&self, mu: &IntVec, lambda: &IntVec) -> Result<bool> {
        self.require_member(mu)?;
        self.require_member(lambda)?;
        Ok(self.root_cone().contains_int(&(lambda - mu)))
    }

    /// Coefficients `c_i` with `mu - lambda = sum c_i bar(alpha_i)`, keyed by
    /// white representative.
    pub fn decompose_difference(
        &self,
        lambda: &IntVec,
        mu: &IntVec,
    ) -> Result<BTreeMap<usize, Rat>> {
        self.require_member(lambda)?;
        self.require_member(mu)?;
        if !self.datum().dominance_leq(lambda, mu)? {
            return Err(Error::NotComparable);
        }
        let diff = mu - lambda;
        let n = self
            .datum()
            .root_coordinates(&diff.to_rational())
            .ok_or(Error::DecompositionFailed)?;
        let two = Rat::from_integer(Int::from(2));
        let mut out = BTreeMap::new();
        let mut total: RatVec = Vector::zeros(self.ambient_rank());
        for (k, &i) in self.ird.white_prime().iter().enumerate() {
            let c = if self.ird.tau(i) == i {
                n[i].clone() / two.clone()
            } else {
                n[i].clone()
            };
            total = total.combine(&Rat::one(), &self.bar_alpha[k].to_rational(), &c);
            out.insert(i, c);
        }
        if total != diff.to_rational() {
            return Err(Error::DecompositionFailed);
        }
        Ok(out)
    }

    /// Componentwise upper bound on the simple-root coefficients `n` with
    /// `mu - sum n_i alpha_i` dominant.
    pub fn dominance_box(&self, mu: &IntVec) -> Vec<Int> {
        let inv = self.cartan_inverse.get_or_init(|| {
            inverse(&self.datum().cartan().to_rational()).expect("finite type Cartan matrices are invertible")
        });
        let p: RatVec = self.datum().pairings(mu).into_iter().map(Rat::from_integer).collect();
        inv.apply(&p).iter().map(|x| x.floor().to_integer()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int_vec;
    use crate::root_datum::{cartan_matrix, Family};

    fn split(rd: RootDatum) -> IRootDatum {
        let n = rd.size();
        let r = rd.rank();
        build_iroot_datum(
            rd,
            SatakeData {
                black: vec![],
                tau: (0..n).collect(),
                tau_x: Matrix::identity(r),
                white_representatives: None,
            },
        )
        .unwrap()
    }

    fn ai_sc(n: usize) -> IRootDatum {
        split(RootDatum::simply_connected(&cartan_matrix(Family::A, n)).unwrap())
    }

    #[test]
    fn split_rank_one() {
        let ird = ai_sc(1);
        assert_eq!(ird.theta(), &IntMat::from_i64_rows(&[&[-1]]));
        assert_eq!(ird.bar(&int_vec(&[1])).unwrap(), int_vec(&[2]));
        let sl = spherical_lattice(&ird).unwrap();
        assert_eq!(sl.lattice().basis(), &[int_vec(&[2])]);
        assert_eq!(sl.bar_alpha(), &[int_vec(&[4])]);
        assert_eq!(sl.spherical_roots(), &[int_vec(&[2])]);
        assert_eq!(sl.cartan(), &IntMat::from_i64_rows(&[&[4]]));
        assert_eq!(sl.cartan_type().to_string(), "A1");
    }

    #[test]
    fn split_rank_one_adjoint() {
        let ird = split(RootDatum::adjoint(&cartan_matrix(Family::A, 1)).unwrap());
        let sl = spherical_lattice(&ird).unwrap();
        assert_eq!(sl.lattice().basis(), &[int_vec(&[2])]);
        assert_eq!(sl.spherical_roots(), &[int_vec(&[2])]);
        assert_eq!(sl.bar_alpha(), &[int_vec(&[2])]);
    }

    #[test]
    fn split_rank_two() {
        let sl = spherical_lattice(&ai_sc(2)).unwrap();
        assert_eq!(sl.lattice().basis(), &[int_vec(&[2, 0]), int_vec(&[0, 2])]);
        assert_eq!(sl.spherical_roots(), &[int_vec(&[4, -2]), int_vec(&[-2, 4])]);
        assert_eq!(sl.cartan(), &IntMat::from_i64_rows(&[&[4, -2], &[-2, 4]]));
        assert_eq!(sl.cartan_type().to_string(), "A2");
    }

    #[test]
    fn black_nodes_must_be_consistent() {
        let rd = RootDatum::simply_connected(&cartan_matrix(Family::A, 2)).unwrap();
        let err = build_iroot_datum(
            rd,
            SatakeData {
                black: vec![0, 1],
                tau: vec![0, 1],
                tau_x: Matrix::identity(2),
                white_representatives: None,
            },
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::Axiom {
                axiom: Axiom::ParabolicLongest,
                label: 1
            }
        );
    }

    #[test]
    fn group_case_rank_one() {
        let a1 = RootDatum::simply_connected(&cartan_matrix(Family::A, 1)).unwrap();
        let rd = a1.product(&a1).unwrap();
        let ird = build_iroot_datum(
            rd,
            SatakeData {
                black: vec![],
                tau: vec![1, 0],
                tau_x: IntMat::from_i64_rows(&[&[0, 1], &[1, 0]]),
                white_representatives: None,
            },
        )
        .unwrap();
        assert_eq!(ird.theta(), &IntMat::from_i64_rows(&[&[0, -1], &[-1, 0]]));
        assert_eq!(ird.bar(&int_vec(&[1, 0])).unwrap(), int_vec(&[1, 1]));
        assert_eq!(ird.white_prime(), &[0]);
    }

    #[test]
    fn decompositions() {
        let sl = spherical_lattice(&ai_sc(1)).unwrap();
        let c = sl.decompose_difference(&int_vec(&[0]), &int_vec(&[4])).unwrap();
        assert_eq!(c[&0], Rat::one());
        let c = sl.decompose_difference(&int_vec(&[2]), &int_vec(&[2])).unwrap();
        assert!(c[&0].is_zero());
        assert_eq!(
            sl.decompose_difference(&int_vec(&[4]), &int_vec(&[0])),
            Err(Error::NotComparable)
        );
        let sl = spherical_lattice(&ai_sc(2)).unwrap();
        // 2 alpha_1 + 2 alpha_2 = (2, 2) in the weight basis.
        let c = sl.decompose_difference(&int_vec(&[0, 0]), &int_vec(&[2, 2])).unwrap();
        assert_eq!(c.values().cloned().collect::<Vec<_>>(), vec![Rat::one(), Rat::one()]);
    }

    #[test]
    fn rational_order() {
        let sl = spherical_lattice(&ai_sc(1)).unwrap();
        assert!(sl.preceq(&int_vec(&[0]), &int_vec(&[2])).unwrap());
        assert!(sl.preceq(&int_vec(&[2]), &int_vec(&[2])).unwrap());
        assert!(!sl.preceq(&int_vec(&[2]), &int_vec(&[0])).unwrap());
        assert_eq!(
            sl.preceq(&int_vec(&[1]), &int_vec(&[2])),
            Err(Error::NotInSphericalLattice)
        );
    }

    #[test]
    fn t_coefficients_of_split_forms_are_empty() {
        let ird = ai_sc(3);
        assert!(ird.t_coefficients().unwrap().t.is_empty());
        let tampered = ird.theta().scale(&-Int::one());
        assert!(t_coefficients_for(ird.datum(), ird.satake(), &tampered).is_err());
    }
}
