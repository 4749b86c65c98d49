use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or inconsistent input; exit code 1.
    #[error("input error: {0}")]
    Input(String),
    /// Anything that is not the caller's fault; exit code 2.
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl From<bochner_core::Error> for CliError {
    fn from(e: bochner_core::Error) -> Self {
        use bochner_core::Error as E;
        match e {
            E::DimensionMismatch { .. }
            | E::InvalidParams(_)
            | E::UnknownEmbedding(_)
            | E::OutsideChart(_)
            | E::NonGeneric(_)
            | E::NotNormalForm(_)
            | E::NotPositiveDefinite(_)
            | E::CurvatureSymmetry(_)
            | E::Precondition(_)
            | E::Parse(_) => CliError::Input(e.to_string()),
        }
    }
}
