use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex index was not below the vertex count.
    VertexOutOfRange { vertex: usize, n: usize },
    /// A graph (or product) would exceed the supported vertex count.
    TooLarge { n: usize, max: usize },
    /// An operation required a vertex to belong to a set.
    NotInSet { vertex: usize },
    /// Two vertex sets over different universes were combined.
    UniverseMismatch { left: usize, right: usize },
    /// Invalid argument for an operation, with a short description.
    InvalidArgument(&'static str),
    /// Family parameters outside the family's domain.
    InvalidFamily(alloc::string::String),
    Graph6(Graph6Error),
    /// A bound construction produced a set that failed verification.
    RuleFailed { rule: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// Byte outside the printable graph6 range `63..=126`.
    BadByte { offset: usize, byte: u8 },
    /// The adjacency payload ended early.
    Truncated { offset: usize },
    /// Bytes remained after the adjacency payload.
    TrailingData { offset: usize },
    /// Encoded vertex count above the supported maximum.
    SizeOverflow { offset: usize, n: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            Error::TooLarge { n, max } => write!(f, "{n} vertices exceeds the limit of {max}"),
            Error::NotInSet { vertex } => write!(f, "vertex {vertex} is not in the set"),
            Error::UniverseMismatch { left, right } => {
                write!(f, "vertex sets over different universes ({left} vs {right})")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::InvalidFamily(msg) => write!(f, "invalid family: {msg}"),
            Error::Graph6(e) => write!(f, "graph6: {e}"),
            Error::RuleFailed { rule } => {
                write!(f, "construction for rule `{rule}` did not produce a dominating set")
            }
        }
    }
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty input"),
            Graph6Error::BadByte { offset, byte } => {
                write!(f, "invalid byte 0x{byte:02x} at offset {offset}")
            }
            Graph6Error::Truncated { offset } => write!(f, "truncated payload at offset {offset}"),
            Graph6Error::TrailingData { offset } => {
                write!(f, "unexpected trailing data at offset {offset}")
            }
            Graph6Error::SizeOverflow { offset, n } => {
                write!(f, "vertex count {n} at offset {offset} is too large")
            }
        }
    }
}

impl From<Graph6Error> for Error {
    fn from(e: Graph6Error) -> Self {
        Error::Graph6(e)
    }
}

impl core::error::Error for Error {}
impl core::error::Error for Graph6Error {}
