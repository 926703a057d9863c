//! Finitely generated submonoids of `X̆⁺` and their prime ideals.

mod ideals;
mod monoid;

use std::collections::BTreeSet;

pub use ideals::{closed_prime_ideals, orbit_poset, OrbitPoset, PrimeIdeal};
pub use monoid::{ClosednessMode, ClosednessReport, SphericalMonoid};

use crate::error::{Error, Result};
use crate::satake::SphericalLattice;
use crate::{Int, IntVec};

/// `{lambda in X̆⁺ : lambda <= mu}` under the integral dominance order,
/// sorted.
pub fn down_set(sl: &SphericalLattice, mu: &IntVec) -> Result<Vec<IntVec>> {
    crate::error::check_dim(sl.ambient_rank(), mu.len())?;
    if !sl.contains(mu) {
        return Err(Error::NotInSphericalLattice);
    }
    if !sl.datum().is_dominant(mu) {
        return Err(Error::NotDominant);
    }
    Ok(down_set_unchecked(sl, mu))
}

pub(crate) fn down_set_unchecked(sl: &SphericalLattice, mu: &IntVec) -> Vec<IntVec> {
    let bounds = sl.dominance_box(mu);
    let roots = sl.datum().simple_roots();
    let mut out = Vec::new();
    let mut n = vec![Int::from(0); bounds.len()];
    let mut current = mu.clone();
    loop {
        if sl.datum().is_dominant(&current) && sl.contains(&current) {
            out.push(current.clone());
        }
        // Odometer step over the box, keeping `current = mu - sum n_i alpha_i`.
        let mut k = 0;
        loop {
            if k == n.len() {
                out.sort();
                return out;
            }
            if n[k] < bounds[k] {
                n[k] += 1;
                current = &current - &roots[k];
                break;
            }
            current = current.combine(&Int::from(1), &roots[k], &n[k]);
            n[k] = Int::from(0);
            k += 1;
        }
    }
}

/// Every sum of at most `bound` generators, sorted, including zero.
pub(crate) fn elements_up_to(generators: &[IntVec], bound: usize, n: usize) -> Vec<IntVec> {
    let mut all: BTreeSet<IntVec> = BTreeSet::new();
    let mut layer: BTreeSet<IntVec> = BTreeSet::from([IntVec::zeros(n)]);
    all.extend(layer.iter().cloned());
    for _ in 0..bound {
        layer = layer
            .iter()
            .flat_map(|x| generators.iter().map(move |g| x + g))
            .filter(|x| !all.contains(x))
            .collect();
        if layer.is_empty() {
            break;
        }
        all.extend(layer.iter().cloned());
    }
    all.into_iter().collect()
}
