use thiserror::Error;

/// Errors raised while building or analysing racks, lattices and diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must be nonempty")]
    EmptyCarrier,

    #[error("table row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },

    #[error("table entry {a}▷{b} = {value} is outside the carrier 0..{n}")]
    EntryOutOfRange {
        a: usize,
        b: usize,
        value: usize,
        n: usize,
    },

    #[error("self-distributivity fails at a={a}, b={b}, c={c}")]
    NotSelfDistributive { a: usize, b: usize, c: usize },

    #[error("left translation by {a} is not a bijection")]
    RowNotBijective { a: usize },

    #[error("parameter violation: {0}")]
    ParameterViolation(String),

    #[error("element {element} is outside the carrier 0..{n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("subrack count exceeded cap of {0}")]
    CapExceeded(usize),

    #[error("subracks belong to different racks")]
    ParentMismatch,

    #[error("class operation depends on representatives: {x}▷{y} and {a}▷{b}")]
    WellDefinednessViolation {
        a: usize,
        b: usize,
        x: usize,
        y: usize,
    },

    #[error("operation table is not a quandle (a▷a ≠ a at a={0})")]
    NotAQuandle(usize),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("arc {arc}: {reason}")]
    ArcConsistencyViolation { arc: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::MalformedInput(e.to_string())
    }
}
