use thiserror::Error;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unknown embedding `{0}`")]
    UnknownEmbedding(String),

    #[error("point lies outside the good locus of the chart: {0}")]
    OutsideChart(String),

    #[error("non-generic point: {0}")]
    NonGeneric(String),

    #[error("form is not in the Iwatani normal form: {0}")]
    NotNormalForm(String),

    #[error("Gram matrix is not Hermitian positive-definite: {0}")]
    NotPositiveDefinite(String),

    #[error("tensor violates curvature symmetries: {0}")]
    CurvatureSymmetry(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}
