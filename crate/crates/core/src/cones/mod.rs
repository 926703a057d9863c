//! Rational polyhedral cones, their faces, and Hilbert bases.

pub mod cone;
pub mod hilbert;

pub use cone::{dual_description, Cone, Face};
pub use hilbert::{hilbert_basis, lattice_generators, quotient_by_lineality, HilbertBasis, LinealityQuotient};
