//! Exact integer and rational linear algebra.

pub mod lattice;
pub mod matrix;
pub mod normal_form;
pub mod rational;
pub mod vector;

pub use lattice::{integer_kernel, saturation, LatticeBasis};
pub use matrix::Matrix;
pub use normal_form::{hermite, normal_form, smith, NormalForm, NormalFormKind};
pub use vector::Vector;
