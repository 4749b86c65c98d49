use serde::{Deserialize, Serialize};

use crate::exactnum::Rational;
use crate::polyalg::VectorForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Rigid,
    NotRigid,
    Degenerate,
}

/// Sizes of the real linear systems solved for a verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDims {
    /// Real unknowns (realified domain).
    pub unknowns: usize,
    /// Real equations of the kernel system.
    pub kernel_equations: usize,
    /// Real equations of the reduced (modulo `S_1`, or Weyl-projected) system.
    pub reduced_equations: usize,
    pub kernel_rank: usize,
    pub reduced_rank: usize,
}

/// Outcome of a rigidity decision.
///
/// `NOT_RIGID` always carries a witness; `RIGID` means the solution space and
/// the kernel coincide; `DEGENERATE` is reserved for the zero form.
#[derive(Clone, Debug, PartialEq)]
pub struct RigidityVerdict {
    pub status: Status,
    pub witness: Option<VectorForm>,
    /// Real basis of the solution space (`γ(H,P) ∈ S_1`, or `γ(H,P)^W = 0`).
    pub solution_space: Vec<Vec<Rational>>,
    /// Real basis of the trivial solutions (`γ(H,P) = 0`, or skew mixing).
    pub gamma_kernel: Vec<Vec<Rational>>,
    pub dims: SystemDims,
}

impl RigidityVerdict {
    pub fn is_rigid(&self) -> bool {
        self.status == Status::Rigid
    }

    pub fn solution_dim(&self) -> usize {
        self.solution_space.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.gamma_kernel.len()
    }

    /// The serialized view: status, witness, and the two dimensions.
    pub fn to_json(&self) -> VerdictJson {
        VerdictJson {
            status: self.status,
            witness: self.witness.clone(),
            solution_dim: self.solution_dim(),
            kernel_dim: self.kernel_dim(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub status: Status,
    pub witness: Option<VectorForm>,
    pub solution_dim: usize,
    pub kernel_dim: usize,
}
