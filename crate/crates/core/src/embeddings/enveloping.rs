use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};

use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::monoids::{closed_prime_ideals, down_set_unchecked, ClosednessMode, SphericalMonoid};
use crate::satake::{spherical_lattice, SphericalLattice};
use crate::{Int, IntVec, Rat, RatVec};

/// `{(mu, lambda) in X̆⁺ × X̆ : mu ⪯ lambda}` as a monoid over the doubled
/// datum, generated through `(mu, lambda) -> (mu, lambda - mu)`.
#[derive(Debug)]
pub struct EnvelopingMonoid {
    base: Arc<SphericalLattice>,
    monoid: SphericalMonoid,
}

pub fn enveloping_monoid(sl: &Arc<SphericalLattice>) -> Result<EnvelopingMonoid> {
    if !sl.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let doubled = Arc::new(spherical_lattice(&sl.ird().doubled()?)?);
    let n = sl.ambient_rank();
    let zero = IntVec::zeros(n);
    let mut generators: Vec<IntVec> = sl.dominant_generators().iter().map(|g| g.concat(g)).collect();
    generators.extend(sl.root_cone_basis().iter().map(|h| zero.concat(h)));
    let monoid = SphericalMonoid::new(doubled, generators)?;
    let em = EnvelopingMonoid {
        base: sl.clone(),
        monoid,
    };
    let m = &em.monoid;
    let closed = m.is_closed(ClosednessMode::GeneratorDownSets).closed;
    if !(closed && m.is_saturated() && m.generates_lattice()) {
        return Err(Error::NotAnEmbedding("enveloping monoid failed validation".into()));
    }
    Ok(em)
}

impl EnvelopingMonoid {
    pub fn base(&self) -> &Arc<SphericalLattice> {
        &self.base
    }

    pub fn monoid(&self) -> &SphericalMonoid {
        &self.monoid
    }

    /// The two `X`-components of a point of `X × X`.
    pub fn split(&self, v: &IntVec) -> (IntVec, IntVec) {
        let n = self.base.ambient_rank();
        (v.as_slice()[..n].iter().cloned().collect(), v.as_slice()[n..].iter().cloned().collect())
    }

    /// `(mu, lambda) -> (mu, lambda - mu)`.
    pub fn psi(&self, v: &IntVec) -> IntVec {
        let (mu, lambda) = self.split(v);
        mu.concat(&(&lambda - &mu))
    }

    pub fn ideal_checker(&self, bound: usize) -> IdealChecker<'_> {
        IdealChecker::new(self, bound)
    }
}

/// A pair `(J1, J2)` of sets of white representatives.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EssentialPair {
    pub j1: Vec<usize>,
    pub j2: Vec<usize>,
    pub essential: bool,
}

fn normalize(sl: &SphericalLattice, j: &[usize]) -> Result<Vec<usize>> {
    let mut j = j.to_vec();
    j.sort();
    j.dedup();
    if let Some(&bad) = j.iter().find(|x| !sl.ird().white_prime().contains(x)) {
        return Err(Error::BadLabel(bad + 1));
    }
    Ok(j)
}

/// No connected component of the complement of `J1` in the spherical
/// Dynkin diagram lies inside `J2`.
pub fn essential(sl: &SphericalLattice, j1: &[usize], j2: &[usize]) -> Result<EssentialPair> {
    let j1 = normalize(sl, j1)?;
    let j2 = normalize(sl, j2)?;
    let nodes = sl.ird().white_prime();
    let a = sl.cartan();
    let outside: Vec<usize> = (0..nodes.len()).filter(|&k| !j1.contains(&nodes[k])).collect();
    let mut seen = vec![false; nodes.len()];
    let mut essential = true;
    for &start in &outside {
        if seen[start] {
            continue;
        }
        let mut component = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(k) = stack.pop() {
            for &l in &outside {
                let joined = !a.get(k, l).is_zero() || !a.get(l, k).is_zero();
                if !seen[l] && joined {
                    seen[l] = true;
                    component.push(l);
                    stack.push(l);
                }
            }
        }
        if component.iter().all(|&k| j2.contains(&nodes[k])) {
            essential = false;
        }
    }
    Ok(EssentialPair { j1, j2, essential })
}

/// All `4^r` pairs, `J1` major, subsets ordered by bitmask.
pub fn essential_pairs(sl: &SphericalLattice) -> Vec<EssentialPair> {
    let nodes = sl.ird().white_prime();
    let r = nodes.len();
    let subset = |mask: usize| -> Vec<usize> {
        (0..r).filter(|k| mask >> k & 1 == 1).map(|k| nodes[k]).collect()
    };
    let mut out = Vec::with_capacity(1 << (2 * r));
    for m1 in 0..1usize << r {
        for m2 in 0..1usize << r {
            out.push(essential(sl, &subset(m1), &subset(m2)).expect("subsets of the white representatives"));
        }
    }
    out
}

/// The ideal of the enveloping monoid whose complement is
/// `cone{(bar omega_j, bar omega_j) : j in J1} + cone{(0, bar alpha_j) : j in J2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnvelopingIdeal {
    pub j1: Vec<usize>,
    pub j2: Vec<usize>,
    pub complement: Cone<Int>,
    /// The complement is a face of the monoid's cone.
    pub prime: bool,
    /// Closed under the integral dominance order, on elements of degree at
    /// most the bound.
    pub closed: bool,
    /// The same test with the rational order `⪯` on the first component.
    pub closed_rational: bool,
    /// The complement is everything.
    pub empty: bool,
    /// `(mu, lambda)` with `mu` in the ideal and `lambda <= mu` outside it.
    pub witness: Option<(IntVec, IntVec)>,
}

impl EnvelopingIdeal {
    pub fn is_closed_prime(&self) -> bool {
        self.prime && self.closed
    }
}

fn small(v: &IntVec) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("coordinates fit in i64")).collect()
}

fn big(v: &[i64]) -> IntVec {
    v.iter().map(|&x| Int::from(x)).collect()
}

/// Shared data for testing many ideals: the elements of degree at most
/// `bound` and the down-sets of their first components in both orders.
#[derive(Debug)]
pub struct IdealChecker<'a> {
    em: &'a EnvelopingMonoid,
    bound: usize,
    elements: Vec<(usize, Vec<i64>)>,
    tops: Vec<Vec<i64>>,
    down: Vec<Vec<Vec<i64>>>,
    down_rational: Vec<Vec<Vec<i64>>>,
    face_cones: Vec<Cone<Int>>,
}

impl<'a> IdealChecker<'a> {
    fn new(em: &'a EnvelopingMonoid, bound: usize) -> Self {
        let base = &em.base;
        let n = base.ambient_rank();
        let mut firsts: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut down = Vec::new();
        let mut down_rational = Vec::new();
        let mut elements = Vec::new();
        let mut tops = Vec::new();
        for e in em.monoid.elements_up_to(bound) {
            let (mu, gamma) = em.split(&e);
            let key = small(&mu);
            let idx = *firsts.entry(key.clone()).or_insert_with(|| {
                tops.push(key);
                down.push(down_set_unchecked(base, &mu).iter().map(small).collect());
                down_rational.push(rational_down_set(base, &mu));
                down.len() - 1
            });
            elements.push((idx, small(&gamma)));
        }
        debug_assert!(elements.iter().all(|(_, g)| g.len() == n));
        let cone = em.monoid.cone();
        let face_cones = cone.faces().iter().map(|f| cone.face_cone(f)).collect();
        Self {
            em,
            bound,
            elements,
            tops,
            down,
            down_rational,
            face_cones,
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn ideal(&self, j1: &[usize], j2: &[usize]) -> Result<EnvelopingIdeal> {
        let base = &self.em.base;
        let j1 = normalize(base, j1)?;
        let j2 = normalize(base, j2)?;
        let n = base.ambient_rank();
        let weights = base.datum().fundamental_weights();
        let roots = base.datum().simple_roots();
        let zero: RatVec = Vector::zeros(n);
        let mut gens: Vec<RatVec> = j1
            .iter()
            .map(|&j| {
                let w = base.ird().bar_rational(&weights[j]);
                w.concat(&w)
            })
            .collect();
        gens.extend(j2.iter().map(|&j| {
            let b: RatVec = base.ird().bar(&roots[j]).expect("dimensions agree").to_rational();
            zero.concat(&b)
        }));
        let complement = Cone::from_rational_generators(2 * n, &gens)?;
        let same = |c: &Cone<Int>| c.rays() == complement.rays() && c.lineality() == complement.lineality();
        let prime = self.face_cones.iter().any(same);
        let empty = same(self.em.monoid.cone());

        let ineqs: Vec<Vec<i64>> = complement.all_inequalities().iter().map(small).collect();
        let in_k = |x: &[i64], g: &[i64]| {
            ineqs.iter().all(|a| {
                let s: i64 = a[..n].iter().zip(x).map(|(p, q)| p * q).sum::<i64>()
                    + a[n..].iter().zip(g).map(|(p, q)| p * q).sum::<i64>();
                s >= 0
            })
        };
        let violation = |downs: &Vec<Vec<Vec<i64>>>| {
            self.elements.iter().find_map(|(idx, g)| {
                let ds = &downs[*idx];
                let top = &self.tops[*idx];
                if in_k(top, g) {
                    return None;
                }
                ds.iter().find(|d| in_k(d, g)).map(|d| {
                    let mut e = top.clone();
                    e.extend_from_slice(g);
                    let mut w = d.clone();
                    w.extend_from_slice(g);
                    (big(&e), big(&w))
                })
            })
        };
        let witness = violation(&self.down);
        let closed_rational = violation(&self.down_rational).is_none();
        Ok(EnvelopingIdeal {
            j1,
            j2,
            complement,
            prime,
            closed: witness.is_none(),
            closed_rational,
            empty,
            witness,
        })
    }
}

/// `{x in X̆⁺ : mu - x in cone(bar alpha)}`, sorted.
fn rational_down_set(sl: &SphericalLattice, mu: &IntVec) -> Vec<Vec<i64>> {
    let datum = sl.datum();
    let primes = sl.spherical_roots();
    let d = sl
        .lattice()
        .index_of(primes)
        .expect("spherical roots span X̆ rationally")
        .to_i64()
        .expect("small index");
    let coords = |v: &IntVec| datum.root_coordinates(&v.to_rational()).expect("semisimple");
    let top = coords(mu);
    let limits: Vec<i64> = primes
        .iter()
        .zip(sl.ird().white_prime())
        .map(|(p, &i)| {
            let c: Rat = top[i].clone() / coords(p)[i].clone() * Rat::from_integer(Int::from(d));
            c.floor().to_integer().to_i64().expect("small bound")
        })
        .collect();
    let scaled: Vec<Vec<i64>> = primes.iter().map(small).collect();
    let base = small(mu);
    let mut out = Vec::new();
    let mut a = vec![0i64; limits.len()];
    loop {
        let x: Vec<i64> = (0..base.len())
            .map(|k| d * base[k] - a.iter().zip(&scaled).map(|(c, p)| c * p[k]).sum::<i64>())
            .collect();
        if x.iter().all(|v| v % d == 0) {
            let x: Vec<i64> = x.iter().map(|v| v / d).collect();
            let bx = big(&x);
            if datum.is_dominant(&bx) && sl.contains(&bx) {
                out.push(x);
            }
        }
        let mut k = 0;
        loop {
            if k == a.len() {
                out.sort();
                return out;
            }
            if a[k] < limits[k] {
                a[k] += 1;
                break;
            }
            a[k] = 0;
            k += 1;
        }
    }
}

pub fn enveloping_ideal(
    em: &EnvelopingMonoid,
    j1: &[usize],
    j2: &[usize],
    bound: usize,
) -> Result<EnvelopingIdeal> {
    em.ideal_checker(bound).ideal(j1, j2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckRow {
    pub pair: EssentialPair,
    pub ideal: EnvelopingIdeal,
    pub agrees: bool,
    pub agrees_rational: bool,
}

/// Pairwise comparison of the essential predicate with the closed prime
/// ideal test, and of the resulting count with the face enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub bound: usize,
    pub rows: Vec<CrossCheckRow>,
    pub essential_count: usize,
    /// Essential pairs whose ideal is nonempty.
    pub nonzero_essential_count: usize,
    /// Nonzero closed prime ideals found from the faces of the cone.
    pub face_ideal_count: usize,
}

impl CrossCheck {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agrees)
    }

    pub fn all_agree_rational(&self) -> bool {
        self.rows.iter().all(|r| r.agrees_rational)
    }

    pub fn counts_agree(&self) -> bool {
        self.face_ideal_count == self.nonzero_essential_count
    }
}

pub fn cross_check(em: &EnvelopingMonoid, bound: usize) -> Result<CrossCheck> {
    let checker = em.ideal_checker(bound);
    let mut rows = Vec::new();
    for pair in essential_pairs(&em.base) {
        let ideal = checker.ideal(&pair.j1, &pair.j2)?;
        rows.push(CrossCheckRow {
            agrees: ideal.is_closed_prime() == pair.essential,
            agrees_rational: (ideal.prime && ideal.closed_rational) == pair.essential,
            pair,
            ideal,
        });
    }
    let essential_count = rows.iter().filter(|r| r.pair.essential).count();
    let nonzero_essential_count = rows
        .iter()
        .filter(|r| r.pair.essential && !r.ideal.empty)
        .count();
    let face_ideal_count = closed_prime_ideals(&em.monoid, bound)?.len();
    Ok(CrossCheck {
        bound,
        rows,
        essential_count,
        nonzero_essential_count,
        face_ideal_count,
    })
}
