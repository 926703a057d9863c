//! Exact computations with symmetric-space embeddings: root data with
//! Satake involutions, spherical lattices, affine monoids, and the orbit
//! combinatorics of the resulting embeddings.
//!
//! The lattice and cone layers are generic over an [`scalar::Integer`]
//! type. Everything above them works with arbitrary precision through the
//! aliases below.

pub mod catalog;
pub mod cones;
pub mod embeddings;
pub mod error;
pub mod linalg;
pub mod monoids;
pub mod root_datum;
pub mod satake;
pub mod scalar;
pub mod schema;

pub use error::{Error, Result};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;
pub type IntVec = linalg::Vector<Int>;
pub type RatVec = linalg::Vector<Rat>;
pub type IntMat = linalg::Matrix<Int>;
pub type RatMat = linalg::Matrix<Rat>;
pub type Lattice = linalg::LatticeBasis<Int>;
pub type IntCone = cones::Cone<Int>;

/// Builds an integer vector from machine integers.
pub fn int_vec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| Int::from(x)).collect()
}
