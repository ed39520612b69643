use thiserror::Error;

use crate::graph::Vertex;

/// Which of the two endpoint separators of an instance an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetName {
    A,
    B,
}

impl std::fmt::Display for SetName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SetName::A => f.write_str("A"),
            SetName::B => f.write_str("B"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("terminals s and t are adjacent")]
    TerminalsAdjacent,

    #[error("invalid vertex set: {0}")]
    InvalidSet(String),

    #[error("set {0} does not separate s from t")]
    NotSeparator(SetName),

    #[error("set {which} has {size} vertices but a minimum s-t separator has {min}")]
    NotMinimum {
        which: SetName,
        size: usize,
        min: usize,
    },

    #[error("vertex {0} of A or B lies on no canonical path")]
    SeparatorOffPath(Vertex),

    #[error("vertex set meets canonical path {path} in {hits} vertices instead of one")]
    NotOnePerPath { path: usize, hits: usize },

    #[error("state space of {states} configurations exceeds the cap of {cap}")]
    StateSpaceExceeded { states: u128, cap: u64 },

    #[error("{what} too large: {size} exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("move {step} is not a forward jump")]
    NotForward { step: usize },

    #[error("could not generate a valid instance after {0} attempts")]
    GenerationFailed(usize),

    #[error("composed instances disagree: {0}")]
    MismatchedSizes(String),
}

impl Error {
    /// True for the errors raised by size guards rather than by bad input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            Error::StateSpaceExceeded { .. } | Error::TooLarge { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
