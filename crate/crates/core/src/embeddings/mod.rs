//! Embedding-level objects assembled from monoids.

mod abelianization;
mod affine;
mod canonical;
mod enveloping;

pub use abelianization::{abelianization, is_very_flat, Abelianization, VeryFlatReport};
pub use affine::{
    check_embedding, validate_embedding, valuation_cone, AffineEmbedding, EmbeddingReport,
    ValuationCone,
};
pub use canonical::{canonical_embedding, CanonicalEmbedding};
pub use enveloping::{
    cross_check, enveloping_ideal, enveloping_monoid, essential, essential_pairs, CrossCheck,
    CrossCheckRow, EnvelopingIdeal, EnvelopingMonoid, EssentialPair, IdealChecker,
};
