use thiserror::Error;

use crate::grid::LatinViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order must be at least 1")]
    ZeroOrder,

    #[error("expected {expected} cells for order {order}, found {found}")]
    CellCount {
        order: usize,
        expected: usize,
        found: usize,
    },

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("value {value} outside {min}..={max}")]
    ValueOutOfRange { value: i64, min: i64, max: i64 },

    #[error("not a Latin square: {0}")]
    NotLatin(LatinViolation),

    #[error("not a Graeco-Latin square: {0}")]
    NotGraecoLatin(String),

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("{0:?} is not a permutation of 1..={1}")]
    InvalidPermutation(Vec<usize>, usize),

    #[error("shift {shift} outside 0..{order}")]
    InvalidShift { shift: usize, order: usize },

    #[error("rectangle swap rejected: {0}")]
    RectangleSwap(String),

    #[error("cells do not hold every value 1..={max} exactly once")]
    ValueMultiset { max: i64 },

    #[error("order {order} is not divisible by march width {width}")]
    MarchWidth { order: usize, width: usize },

    #[error("order {0} must be odd")]
    EvenOrder(usize),

    #[error("median band {band} does not separate distinct letters at ({row}, {col})")]
    BandInvariant {
        band: String,
        row: usize,
        col: usize,
    },

    #[error("reflected letters do not pair every latin letter with every greek letter")]
    IncompletePairing,

    #[error("invalid directrix: {0}")]
    InvalidDirectrix(String),

    #[error("order {order} exceeds the enumeration limit {limit}")]
    OrderLimit { order: usize, limit: usize },

    #[error("unknown identifier {0:?}")]
    UnknownIdentifier(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
