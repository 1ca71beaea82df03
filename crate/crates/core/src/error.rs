use thiserror::Error;

use crate::chains::ChainError;
use crate::fieldlin::LinAlgError;
use crate::hypercore::{HypergraphError, MorphismViolation};
use crate::io::IoError;
use crate::metric::MetricError;
use crate::persist::PersistError;

/// Any error raised by this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Morphism(#[from] MorphismViolation),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Persist(#[from] PersistError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Io(#[from] IoError),
}

impl Error {
    /// Malformed input text, as opposed to well-formed input that fails validation.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Io(e) if e.is_parse())
    }
}
