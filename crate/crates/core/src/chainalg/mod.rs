//! Exact linear algebra over ℤ, ℚ and ℤ/p.

pub mod boundary;
pub mod field;
pub mod integer;
pub mod matrix;
pub mod ring;
pub mod subspace;

pub use boundary::{boundary_matrix, Ambient};
pub use field::LinearSolver;
pub use integer::{column_hnf, integer_kernel, smith_normal_form, ColumnHnf, SnfResult};
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use ring::{CoefficientRing, Field};
pub use subspace::{kernel_basis, lattice_intersection, quotient_structure, ChainSubspace};
