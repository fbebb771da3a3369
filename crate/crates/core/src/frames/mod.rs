//! Residuated frames `W_{A,B}` and their Galois algebras.

use thiserror::Error;

use crate::analyze::AnalyzeError;

pub mod embed;
pub mod frame;
pub mod galois;

pub use embed::{
    check_fep_embedding, check_preservation, embedding_report, EmbeddingInstance, EmbeddingReport,
    IdentitySpec,
};
pub use frame::{galois_closure, generate_submonoid, Frame};
pub use galois::{build_galois_algebra, GaloisAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FramesError {
    #[error("element {0} is out of range")]
    OutOfRange(usize),
    #[error("set {0} is not Galois-closed")]
    NotClosed(String),
    #[error("Galois algebra is not residuated: {0}")]
    Residual(String),
    #[error("division tables disagree with the derived residuals")]
    DivisionMismatch,
    #[error("embedding failure: {0}")]
    EmbeddingFailure(String),
    #[error(transparent)]
    Identity(#[from] AnalyzeError),
}
