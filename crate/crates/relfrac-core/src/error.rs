use alloc::string::String;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    SizeLimit { what: &'static str, actual: usize, limit: usize },
    #[error("timeout{}", lower_bound.as_ref().map(|b| alloc::format!(" (best lower bound {b})")).unwrap_or_default())]
    Timeout { lower_bound: Option<Rational> },
    #[error("search cap of {nodes} nodes exhausted: {what}")]
    SearchCap { what: &'static str, nodes: u64 },
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("cutting plane did not converge within {0} iterations")]
    NonConvergence(usize),
    #[error("graph is not vertex-transitive")]
    NotVertexTransitive,
    #[error("script error at step {step}: {reason}")]
    Script { step: usize, reason: String },
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = core::result::Result<T, Error>;
