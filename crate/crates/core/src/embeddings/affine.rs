use std::sync::Arc;

use num_traits::One;

use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::monoids::{ClosednessMode, ClosednessReport, SphericalMonoid};
use crate::satake::SphericalLattice;
use crate::{Int, IntVec};

/// The three predicates singling out monoids of affine embeddings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub closed: ClosednessReport,
    pub saturated: bool,
    pub generates: bool,
}

impl EmbeddingReport {
    pub fn is_valid(&self) -> bool {
        self.closed.closed && self.saturated && self.generates
    }

    /// Names of the predicates that fail.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.closed.closed {
            out.push("not closed");
        }
        if !self.saturated {
            out.push("not saturated");
        }
        if !self.generates {
            out.push("does not generate the spherical lattice");
        }
        out
    }
}

/// A monoid that passed all three predicates.
#[derive(Debug)]
pub struct AffineEmbedding {
    pub monoid: SphericalMonoid,
    pub report: EmbeddingReport,
}

pub fn check_embedding(monoid: &SphericalMonoid) -> EmbeddingReport {
    EmbeddingReport {
        closed: monoid.is_closed(ClosednessMode::GeneratorDownSets),
        saturated: monoid.is_saturated(),
        generates: monoid.generates_lattice(),
    }
}

pub fn validate_embedding(
    sl: Arc<SphericalLattice>,
    generators: Vec<IntVec>,
) -> Result<AffineEmbedding> {
    let monoid = SphericalMonoid::new(sl, generators)?;
    let report = check_embedding(&monoid);
    if !report.is_valid() {
        return Err(Error::NotAnEmbedding(report.failures().join(", ")));
    }
    Ok(AffineEmbedding { monoid, report })
}

/// `{t : t(bar alpha_i) <= 0}` in coordinates dual to the basis of `X̆`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationCone {
    pub cone: Cone<Int>,
    /// Inner normals `-bar alpha_i`, one per white representative.
    pub normals: Vec<IntVec>,
}

pub fn valuation_cone(sl: &SphericalLattice) -> ValuationCone {
    let k = sl.rank();
    let normals: Vec<IntVec> = sl
        .bar_alpha()
        .iter()
        .map(|b| {
            let c = sl.lattice().coordinates(b).expect("bar alpha lies in X̆");
            c.scale(&-Int::one())
        })
        .collect();
    let cone = Cone::from_inequalities(k, &normals).expect("dimensions agree");
    ValuationCone { cone, normals }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::int_vec;

    #[test]
    fn rank_one_embeddings() {
        let sl = catalog::spherical("AI.sl.2").unwrap();
        assert!(validate_embedding(sl.clone(), vec![int_vec(&[2])]).is_ok());
        let err = validate_embedding(sl, vec![int_vec(&[4])]).unwrap_err();
        assert_eq!(
            err,
            Error::NotAnEmbedding(
                "not closed, not saturated, does not generate the spherical lattice".into()
            )
        );
    }

    #[test]
    fn valuation_cones() {
        let sl = catalog::spherical("AI.sl.2").unwrap();
        let v = valuation_cone(&sl);
        assert_eq!(v.cone.rays(), &[int_vec(&[-1])]);

        let sl = catalog::spherical("AI.sl.3").unwrap();
        let v = valuation_cone(&sl);
        assert_eq!(v.cone.facets().len(), 2);
        assert_eq!(v.cone.rays().len(), 2);
        assert!(v.cone.is_pointed());
    }
}
