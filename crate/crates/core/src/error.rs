use thiserror::Error;

use crate::gf2::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("{0}")]
    InvalidMonomial(String),
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("invalid support: {0}")]
    InvalidSupport(String),
    #[error("not a derivation: {0}")]
    NotADerivation(String),
    #[error("not a semidirect product: {0}")]
    NotSemidirect(String),
    #[error("degree {degree} exceeds the limit {limit}")]
    DegreeTooLarge { degree: usize, limit: usize },
    #[error("degree {0} is outside the supported range")]
    DegreeOutOfRange(usize),
}
