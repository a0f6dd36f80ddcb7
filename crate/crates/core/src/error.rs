use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank n={n} is below the minimum {min} for family {family}")]
    RankTooSmall { family: String, n: usize, min: usize },

    #[error("index {index} is outside I = {{1..{n}}}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("sequence is not usable: {0}")]
    BadSequence(String),

    #[error("sequence is not adapted: {0}")]
    NotAdapted(String),

    #[error("P is only defined for t >= {k} on this branch (got t = {t})")]
    PBranch { k: i64, t: i64 },

    #[error("pi' is only defined for l >= 1 (got {0})")]
    PiPrimeDomain(i64),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("closure did not converge within {cap} visits")]
    NoConvergence { cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
