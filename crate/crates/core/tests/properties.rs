use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use symemb::cones::{hilbert_basis, Cone};
use symemb::embeddings::{enveloping_monoid, essential};
use symemb::linalg::{hermite, smith, LatticeBasis, Matrix, Vector};
use symemb::monoids::{closed_prime_ideals, down_set, SphericalMonoid};
use symemb::satake::SphericalLattice;
use symemb::{catalog, Int, IntMat, IntVec, Rat};

fn space() -> impl Strategy<Value = Arc<SphericalLattice>> {
    prop::sample::select(catalog::names()).prop_map(|n| catalog::spherical(n).unwrap())
}

fn small_matrix() -> impl Strategy<Value = IntMat> {
    (1usize..4, 1usize..4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-6i64..=6, c), r).prop_map(move |rows| {
            Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(Int::from).collect()).collect(), c)
        })
    })
}

fn det_is_unit(m: &IntMat) -> bool {
    m.determinant().abs().is_one()
}

/// A lattice element from small coordinates in the basis.
fn lattice_point(sl: &SphericalLattice, coords: &[i64]) -> IntVec {
    let mut v = IntVec::zeros(sl.ambient_rank());
    for (b, c) in sl.lattice().basis().iter().zip(coords) {
        v = v.combine(&Int::one(), b, &Int::from(*c));
    }
    v
}

/// A dominant element from small coefficients on the Hilbert basis.
fn dominant_point(sl: &SphericalLattice, coeffs: &[u8]) -> IntVec {
    let mut v = IntVec::zeros(sl.ambient_rank());
    for (g, c) in sl.dominant_generators().iter().zip(coeffs) {
        v = v.combine(&Int::one(), g, &Int::from(*c));
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_forms_use_unimodular_transforms(m in small_matrix()) {
        let h = hermite(&m);
        prop_assert!(det_is_unit(&h.left));
        prop_assert_eq!(h.left.mul(&m), h.form.clone());
        let s = smith(&m);
        prop_assert!(det_is_unit(&s.left) && det_is_unit(&s.right));
        prop_assert_eq!(s.left.mul(&m).mul(&s.right), s.form.clone());
        for i in 1..s.form.rows().min(s.form.cols()) {
            let (a, b) = (s.form.get(i - 1, i - 1), s.form.get(i, i));
            prop_assert!(b.is_zero() || (!a.is_zero() && (b % a).is_zero()));
        }
        prop_assert_eq!(h.rank(), s.rank());
    }

    #[test]
    fn lattice_membership_and_coordinates(m in small_matrix(), coeffs in prop::collection::vec(-4i64..=4, 3)) {
        let gens = m.row_vectors();
        let lat = LatticeBasis::new(m.cols(), &gens).unwrap();
        let mut v = IntVec::zeros(m.cols());
        for (g, c) in gens.iter().zip(&coeffs) {
            v = v.combine(&Int::one(), g, &Int::from(*c));
        }
        prop_assert!(lat.member(&v).unwrap());
        let c = lat.coordinates(&v).unwrap();
        prop_assert_eq!(lat.combine(&c), v);
    }

    #[test]
    fn cone_duality_round_trip(rays in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 1..5)) {
        let gens: Vec<Vector<i64>> = rays.into_iter().map(Vector::new).collect();
        let c = Cone::from_generators(3, &gens).unwrap();
        prop_assert_eq!(c.dual().dual(), c.clone());
        for g in &gens {
            prop_assert!(c.contains_int(g));
            prop_assert!(c.all_inequalities().iter().all(|a| a.dot(g) >= 0));
        }
        for f in c.faces() {
            let face = c.face_cone(&f);
            prop_assert!(c.contains_cone(&face));
            prop_assert_eq!(face.dim(), f.dim);
        }
    }

    #[test]
    fn hilbert_elements_are_irreducible(rays in prop::collection::vec(prop::collection::vec(-4i64..=4, 2), 2..4)) {
        let gens: Vec<Vector<i64>> = rays.into_iter().map(Vector::new).collect();
        let c = Cone::from_generators(2, &gens).unwrap();
        prop_assume!(c.is_pointed());
        let hb = hilbert_basis(&c, &LatticeBasis::standard(2)).unwrap().elements;
        let mut sorted = hb.clone();
        sorted.sort();
        prop_assert_eq!(&sorted, &hb);
        for h in &hb {
            prop_assert!(c.contains_int(h) && !h.is_zero());
            for g in &hb {
                let d = h - g;
                prop_assert!(d.is_zero() || !c.contains_int(&d));
            }
        }
        for r in c.rays() {
            prop_assert!(hb.contains(r));
        }
    }

    #[test]
    fn involution_is_compatible(sl in space()) {
        let ird = sl.ird();
        let theta = ird.theta();
        prop_assert!(theta.mul(theta).is_identity());
        for &i in ird.black() {
            prop_assert_eq!(theta.apply(&ird.datum().simple_roots()[i]), ird.datum().simple_roots()[i].clone());
        }
    }

    #[test]
    fn bar_maps_dominant_weights_into_the_dominant_cone(sl in space(), coeffs in prop::collection::vec(0i64..5, 4)) {
        let n = sl.ambient_rank();
        let mu: IntVec = (0..n).map(|k| Int::from(coeffs[k % coeffs.len()])).collect();
        prop_assume!(sl.datum().is_dominant(&mu));
        let b = sl.ird().bar(&mu).unwrap();
        prop_assert!(sl.is_dominant_member(&b));
    }

    #[test]
    fn dominance_is_a_partial_order(sl in space(), a in prop::collection::vec(-3i64..=3, 3), b in prop::collection::vec(-3i64..=3, 3), c in prop::collection::vec(-3i64..=3, 3)) {
        let (x, y, z) = (lattice_point(&sl, &a), lattice_point(&sl, &b), lattice_point(&sl, &c));
        let d = sl.datum();
        prop_assert!(d.dominance_leq(&x, &x).unwrap());
        if d.dominance_leq(&x, &y).unwrap() && d.dominance_leq(&y, &x).unwrap() {
            prop_assert_eq!(&x, &y);
        }
        if d.dominance_leq(&x, &y).unwrap() && d.dominance_leq(&y, &z).unwrap() {
            prop_assert!(d.dominance_leq(&x, &z).unwrap());
        }
        if d.dominance_leq(&x, &y).unwrap() {
            prop_assert!(sl.preceq(&x, &y).unwrap());
        }
        prop_assert!(sl.preceq(&x, &x).unwrap());
    }

    #[test]
    fn decompositions_reconstruct(sl in space(), a in prop::collection::vec(-3i64..=3, 3), ks in prop::collection::vec(0i64..4, 3)) {
        let lambda = lattice_point(&sl, &a);
        let mut mu = lambda.clone();
        for (r, k) in sl.spherical_roots().iter().zip(&ks) {
            mu = mu.combine(&Int::one(), r, &Int::from(*k));
        }
        prop_assume!(sl.datum().dominance_leq(&lambda, &mu).unwrap());
        let c = sl.decompose_difference(&lambda, &mu).unwrap();
        let mut total = Vector::<Rat>::zeros(sl.ambient_rank());
        for (idx, i) in sl.ird().white_prime().iter().enumerate() {
            prop_assert!(!c[i].is_negative());
            total = total.combine(&Rat::one(), &sl.bar_alpha()[idx].to_rational(), &c[i]);
        }
        prop_assert_eq!(total, (&mu - &lambda).to_rational());
    }

    #[test]
    fn down_sets_are_transitive(sl in space(), coeffs in prop::collection::vec(0u8..3, 4)) {
        let mu = dominant_point(&sl, &coeffs);
        let below = down_set(&sl, &mu).unwrap();
        prop_assert!(below.contains(&mu));
        for lambda in below.iter().take(6) {
            prop_assert!(sl.datum().dominance_leq(lambda, &mu).unwrap());
            for nu in down_set(&sl, lambda).unwrap() {
                prop_assert!(below.contains(&nu));
            }
        }
    }

    #[test]
    fn saturation_is_idempotent(sl in space(), picks in prop::collection::vec(1u8..4, 4)) {
        let gens: Vec<IntVec> = sl
            .dominant_generators()
            .iter()
            .zip(&picks)
            .map(|(g, p)| g.scale(&Int::from(*p)))
            .collect();
        let m = SphericalMonoid::new(sl.clone(), gens).unwrap();
        let once = m.saturate();
        let twice = once.saturate();
        prop_assert_eq!(once.generators(), twice.generators());
        prop_assert!(once.is_saturated());
        for g in m.generators() {
            prop_assert!(once.member(g));
        }
    }

    #[test]
    fn full_pair_is_always_essential(sl in space(), mask in 0usize..8) {
        let nodes = sl.ird().white_prime();
        let j2: Vec<usize> = nodes.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect();
        prop_assert!(essential(&sl, nodes, &j2).unwrap().essential);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn enveloping_membership_matches_its_description(
        name in prop::sample::select(vec!["AI.sl.2", "AI.sl.3", "AI.ad.2", "AIII.sl.4", "group.A1"]),
        a in prop::collection::vec(0u8..3, 3),
        b in prop::collection::vec(-2i64..=3, 3),
    ) {
        let sl = catalog::spherical(name).unwrap();
        let em = enveloping_monoid(&sl).unwrap();
        let mu = dominant_point(&sl, &a);
        let lambda = &mu + &lattice_point(&sl, &b);
        let v = mu.concat(&lambda);
        let expected = sl.preceq(&mu, &lambda).unwrap();
        prop_assert_eq!(em.monoid().member(&v), expected);
        let (x, y) = em.split(&em.psi(&v));
        prop_assert_eq!(x, mu);
        prop_assert_eq!(y, &lambda - &em.split(&v).0);
    }

    #[test]
    fn prime_ideals_absorb(name in prop::sample::select(vec!["AI.sl.2", "AI.sl.3", "AIII.sl.4"]), picks in prop::collection::vec(0u8..3, 6)) {
        let sl = catalog::spherical(name).unwrap();
        let em = enveloping_monoid(&sl).unwrap();
        let l = em.monoid();
        let mut x = IntVec::zeros(l.ambient_rank());
        for (g, p) in l.generators().iter().zip(&picks) {
            x = x.combine(&Int::one(), g, &Int::from(*p));
        }
        for ideal in closed_prime_ideals(l, 3).unwrap() {
            if ideal.contains(&x) {
                for g in l.generators() {
                    prop_assert!(ideal.contains(&(&x + g)));
                }
            }
        }
    }
}

#[test]
fn closed_ideal_normals_meet_the_valuation_cone() {
    for name in ["AI.sl.2", "AI.sl.3", "AI.ad.2", "AIII.sl.4", "group.A2"] {
        let em = enveloping_monoid(&catalog::spherical(name).unwrap()).unwrap();
        let l = em.monoid();
        let n = l.ambient_rank();
        let cone = l.cone();
        let negated: Vec<IntVec> = l.spherical_lattice().bar_alpha().iter().map(|b| -b).collect();
        let valuations = Cone::from_inequalities(n, &negated).unwrap();
        for ideal in closed_prime_ideals(l, 4).unwrap() {
            let normals: Vec<IntVec> = ideal.face.facets.iter().map(|&j| cone.facets()[j].clone()).collect();
            let meet = Cone::from_generators(n, &normals).unwrap().intersect(&valuations).unwrap();
            let mut v = IntVec::zeros(n);
            for r in meet.rays() {
                v = &v + r;
            }
            for (k, r) in cone.rays().iter().enumerate() {
                let on_face = ideal.face.rays.contains(&k);
                assert_eq!(v.dot(r).is_zero(), on_face, "{name}: {v:?} at ray {r:?}");
            }
        }
    }
}
