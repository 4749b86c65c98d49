//! Exact arithmetic over `Q` and `Q[i]`, and the linear algebra every check
//! reduces to: row reduction, kernels, span membership and constrained
//! preimages.

mod float_oracle;
mod gaussian;
mod matrix;
mod rational;
pub mod sparse;

pub use float_oracle::{float_rank_oracle, float_rank_sparse_columns, DEFAULT_RANK_TOL};
pub use gaussian::GaussianRational;
pub use matrix::{
    canonical_basis, complexify_vector, constrained_preimage, determinant, independent_subset,
    inverse, kernel_basis, membership, realify_vector, rref, ComplexMatrix, Field, Matrix,
    RationalMatrix, Rref,
};
pub use rational::Rational;
pub use sparse::{sparse_kernel, Echelon, SparseVec};
