//! Decision procedures: Bochner rigidity and its companions (nondegeneracy,
//! skew recovery, the degree-one lemma, flatness, Iwatani conditions) and the
//! real Weyl-rigidity analogue.

mod bochner;
mod curvature;
mod iwatani;
mod system;
mod verdict;
mod weyl;

pub use bochner::{
    bochner_flat, bochner_rigid, bochner_system, gamma, lemma1_solve, nondegenerate, recover_mixing,
    recover_skew, recover_skew_gram, trivial_mixings, BochnerSystem, Lemma1Solution, SkewHermitian,
};
pub use curvature::{curvature_space_basis, kulkarni_nomizu, ricci_and_weyl, CurvatureElement};
pub use iwatani::{iwatani_check, iwatani_normal_form, IwataniReport};
pub use verdict::{RigidityVerdict, Status, SystemDims, VerdictJson};
pub use weyl::{gauss_gamma, weyl_rigid, weyl_system, RealSymForm};
