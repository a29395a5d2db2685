use thiserror::Error;

use crate::loop_erasure::Cut;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("walk must contain at least one vertex")]
    EmptyWalk,

    #[error("index range ({start},{end}) is invalid for a walk of length {len}")]
    BadRange { start: usize, end: usize, len: usize },

    #[error("cut {0} is not closed (its endpoints carry different vertices)")]
    OpenCut(Cut),

    #[error("cuts {0} and {1} overlap")]
    OverlappingCuts(Cut, Cut),

    #[error("cut {0} is not a loop-erased section of the walk")]
    NotLoopErased(Cut),

    #[error("cut {0} is not an admissible cut of the walk")]
    NotAdmissible(Cut),

    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("walk is not a corolla")]
    NotCorolla,

    #[error("brace component index must be at least 1")]
    ZeroBraceIndex,

    #[error("invalid digraph: {0}")]
    InvalidGraph(String),

    #[error("walk is not a walk of the given digraph")]
    NotOnGraph,

    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),
}
