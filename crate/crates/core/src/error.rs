use std::fmt;

use thiserror::Error;

/// The two structural axioms relating `w_bullet`, `tau` and `theta_X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `w_bullet(alpha_i) = -alpha_{tau i}` for every black node `i`.
    ParabolicLongest,
    /// `theta_X(alpha_i) = -w_bullet(alpha_{tau i})` for every node `i`.
    ThetaOnSimpleRoots,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::ParabolicLongest => f.write_str("(i)"),
            Axiom::ThetaOnSimpleRoots => f.write_str("(ii)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero vector does not span a ray")]
    ZeroRay,
    #[error("the ray meets the lattice only at the origin")]
    RayMissesLattice,
    #[error("the cone has a nontrivial lineality space; quotient it first")]
    NonPointedCone,
    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("non-crystallographic after normalization (row {row})")]
    NonCrystallographic { row: usize },
    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),
    #[error("invalid Satake data: {0}")]
    InvalidSatake(String),
    #[error("axiom {axiom} fails at node {label}")]
    Axiom { axiom: Axiom, label: usize },
    #[error("theta_X is not an involution")]
    ThetaNotInvolution,
    #[error("t-coefficient t[{i}][{j}] is invalid: {reason}")]
    InvalidTCoefficient { i: usize, j: usize, reason: String },
    #[error("spherical Cartan matrix is not of finite type: {0}")]
    SphericalCartan(String),
    #[error("weight is not in the spherical lattice")]
    NotInSphericalLattice,
    #[error("weight is not dominant")]
    NotDominant,
    #[error("weights are not comparable in the dominance order")]
    NotComparable,
    #[error("difference has no decomposition into restricted simple roots")]
    DecompositionFailed,
    #[error("the root datum is not semisimple")]
    NotSemisimple,
    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),
    #[error("node label {0} is out of range")]
    BadLabel(usize),
    #[error("not an affine embedding: {0}")]
    NotAnEmbedding(String),
    #[error("unknown symmetric space '{0}'")]
    UnknownSpace(String),
    #[error("malformed input: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
