//! Exact-arithmetic engine for Bochner rigidity and Weyl rigidity of
//! vector-valued polynomial forms, fundamental forms of explicit polynomial
//! embeddings (Plücker, Whitney), and the algebraic identities around them.
//!
//! Everything is computed over the Gaussian rationals `Q[i]` with
//! arbitrary-precision integers; there are no tolerances anywhere except in
//! the floating-point rank oracle used to cross-check exact ranks.

pub mod embed;
pub mod error;
pub mod exactnum;
pub mod polyalg;
pub mod rigidity;

pub use error::{Error, Result};
pub use exactnum::{GaussianRational, Rational};
pub use polyalg::{GramPair, HermitianPoly, Monomial, VectorForm};
pub use rigidity::{RigidityVerdict, Status};
