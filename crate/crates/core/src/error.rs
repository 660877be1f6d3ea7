use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("m must be at least 1 (got m = 0)")]
    ZeroSubscript,
    #[error("k must be at least 1 (got k = 0)")]
    ZeroPower,
    #[error("k must satisfy k <= m (got m = {m}, k = {k})")]
    PowerExceedsSubscript { m: usize, k: usize },
    #[error("no closed-form template for m - k = {0}; templates exist for 0..=5")]
    NoTemplate(usize),
    #[error("template for m - k = {j} needs m >= {}, got m = {m}", j + 1)]
    TemplateTooSmall { j: usize, m: usize },
    #[error("evaluation context too short: need {needed} {what}, have {have}")]
    ContextTooShort {
        what: &'static str,
        needed: usize,
        have: usize,
    },
    #[error("A_0 = F(u0) requires the value F(u0) in the evaluation context")]
    MissingBaseValue,
    #[error("derivative oracle failed: {0}")]
    Oracle(String),
    #[error("invalid pendulum problem: {0}")]
    InvalidProblem(String),
    #[error("count overflowed 128 bits at m = {m}, k = {k}")]
    CountOverflow { m: usize, k: usize },
    #[error("malformed polynomial data: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
