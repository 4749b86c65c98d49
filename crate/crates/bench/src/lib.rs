//! Shared fixtures for benchmarks.

use bochner_core::embed::{minor_forms, random_points};
use bochner_core::polyalg::space_basis;
use bochner_core::{HermitianPoly, VectorForm};

/// The `2 x 2` minors of an `n x 2` matrix, a rigid quadratic form in `2n`
/// variables.
pub fn grassmann_quadric(n: usize) -> VectorForm {
    minor_forms(n, 2, 2).expect("n >= 2")
}

/// A form with seeded random Gaussian-rational coefficients.
pub fn random_form(n: usize, k: usize, r: usize, seed: u64) -> VectorForm {
    let basis = space_basis(n, k, 0);
    let coeffs = random_points(basis.len() * r, 1, seed).remove(0);
    let comps = coeffs
        .chunks(basis.len())
        .map(|c| HermitianPoly::from_terms(n, k, 0, basis.iter().cloned().zip(c.iter().cloned())).expect("degree k"))
        .collect();
    VectorForm::new(n, k, comps).expect("consistent shape")
}
