use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} is outside the supported range 2..={max}", max = crate::perm::MAX_N)]
    Dimension(usize),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("swap ({i},{j}) out of range for n = {n}")]
    SwapOutOfRange { i: usize, j: usize, n: usize },

    #[error("rank {rank} out of range for n = {n}")]
    RankOutOfRange { rank: u64, n: usize },

    #[error("malformed permutation {0:?}: {1}")]
    Parse(String, &'static str),

    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(Permutation, Permutation),

    #[error("{0} is not in subgraph {1}")]
    WrongSubgraph(Permutation, u8),

    #[error("edge {0}:{1} does not lie inside a single subgraph")]
    CrossEdge(Permutation, Permutation),

    #[error("arithmetic overflow computing {0} for n = {1}")]
    Overflow(&'static str, usize),

    #[error("invalid length {length} for n = {n}: must be even with 4 <= length <= n!")]
    Length { n: usize, length: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no admissible bridge edge into subgraph {0}")]
    BridgeExhausted(u8),

    #[error("only {found} distinct cycles of length {length} found, {required} required")]
    Insufficient {
        length: usize,
        found: usize,
        required: usize,
    },

    #[error("internal validation failure: {0}")]
    Validation(String),

    #[error("enumeration of length {length} in BS_{n} exceeds the tractability guard")]
    Intractable { n: usize, length: usize },

    #[error("fixture {0}: {1}")]
    Fixture(String, String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
