//! Error taxonomy shared by all analysis modules.

use num_complex::Complex64;
use thiserror::Error;

use crate::spectral::SectorClass;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Parameters outside the supported ranges (e.g. alpha, beta).
    #[error("domain error: {0}")]
    Domain(String),

    /// A requested tolerance cannot be met by the implemented regimes.
    /// `achieved` is the honest error bound the evaluator can commit to.
    #[error("requested tolerance {requested:.3e} unreachable ({context}); achievable bound {achieved:.3e}")]
    Precision {
        requested: f64,
        achieved: f64,
        context: String,
    },

    /// The matrix is defective beyond the supported derivative depth, or
    /// defective without user-declared block structure.
    #[error("defective matrix: {0}")]
    DefectiveMatrix(String),

    /// Eigenvector basis too ill-conditioned to trust.
    #[error("eigenvector matrix ill-conditioned (cond = {cond:.3e} > {limit:.3e}); if the matrix is defective, declare its Jordan blocks in the input")]
    IllConditioned { cond: f64, limit: f64 },

    /// Operation requires the hyperbolicity condition.
    #[error("spectrum not hyperbolic: offending eigenvalues {0:?}")]
    NotHyperbolic(Vec<Complex64>),

    /// An eigenvalue lies in the wrong sector for the requested operation.
    #[error("eigenvalue {lambda} classified {class:?}, expected {expected}")]
    Sector {
        lambda: Complex64,
        class: SectorClass,
        expected: &'static str,
    },

    /// Table-backed forcing without a declared sup-norm bound.
    #[error("forcing has no declared sup-norm bound; required for tail truncation")]
    MissingSupNorm,

    /// A stated precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
