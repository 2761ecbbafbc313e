use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The complement of a gap set is not closed under addition.
    #[error("gap set is not closed under addition: {a} + {b} = {} is a gap", a + b)]
    ClosureViolation { a: u32, b: u32 },

    #[error("invalid gap set: {0}")]
    InvalidGaps(String),

    #[error("malformed node: {0}")]
    MalformedNode(String),

    #[error("{offset} is not an order-zero seed offset of a node with multiplicity {multiplicity}")]
    NotASeed { offset: u32, multiplicity: u32 },

    #[error("genus {genus} needs {needed} bits but the bit vectors hold at most {available}")]
    GenusTooLarge {
        genus: u32,
        needed: usize,
        available: usize,
    },

    #[error("target genus {target} is below the start node's genus {start}")]
    GenusBelowStart { target: u32, start: u32 },

    #[error("conductor {conductor} does not fit in {available} bits")]
    CapacityExceeded { conductor: u32, available: usize },

    #[error(
        "count mismatch at genus {genus}: {first_algorithm} gave {first_count}, \
         {other_algorithm} gave {other_count}"
    )]
    CountMismatch {
        genus: u32,
        first_algorithm: String,
        first_count: u64,
        other_algorithm: String,
        other_count: u64,
    },

    #[error("unknown algorithm {0:?}")]
    UnknownAlgorithm(String),

    #[error("invalid benchmark request: {0}")]
    InvalidBenchmark(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
