use thiserror::Error;

use crate::hamiltonicity::{StitchState, StitchStep};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),

    #[error("{what}: n = {n} exceeds the cap of {cap} vertices")]
    ResourceLimit {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("unsupported partition {partition}: {reason}")]
    UnsupportedPartition { partition: String, reason: String },

    #[error("case {case} is not applicable: {reason}")]
    CaseNotApplicable { case: String, reason: String },

    #[error("graph file: {0}")]
    GraphFormat(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("extremal construction failed at {step}")]
    ConstructionFailed {
        step: StitchStep,
        trace: Box<StitchState>,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArguments(msg.into())
    }
}
