//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid simple type: {0}")]
    InvalidType(String),

    #[error("the string through a root along itself is degenerate")]
    DegenerateString,

    #[error("elements belong to different root systems")]
    MixedSystems,

    #[error("root {0} is not in the characteristic set; valid choices: {1}")]
    NotCharacteristic(String, String),

    #[error("matrix is not Hermitian")]
    NotHermitian,

    #[error("gamma is not real for this conjugation")]
    GammaNotReal,

    #[error("the CR algebra is not fundamental; the real-root criterion does not apply")]
    NotFundamental,

    #[error("the closed-form table excludes split forms (non-fundamental)")]
    TableInapplicable,

    #[error("no conjugation constants satisfy the constraints for {form}: {detail}")]
    RealStructure { form: String, detail: String },

    #[error("unknown algebra name: {0}")]
    UnknownAlgebra(String),

    #[error("bad simple-root index {index}: rank is {rank}")]
    BadPhiIndex { index: usize, rank: usize },

    #[error("{0}")]
    BadRequest(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
