//! Bigraded polynomial spaces `S^{k,l}(V*)`, `W`-valued holomorphic forms, the
//! pairing `<H, Pbar>` and the subspace `S_1` of multiples of the Hermitian
//! generator.

mod form;
mod json;
mod monomial;
mod poly;
mod s1;

pub use form::{check_positive_definite, pairing, GramPair, VectorForm};
pub use monomial::{binomial, exponent_vectors, space_basis, space_dim, Monomial};
pub use poly::HermitianPoly;
pub use s1::{s1_decompose, s1_generator, s1_spanning_polys, s1_subspace, Division, S1Reducer};
