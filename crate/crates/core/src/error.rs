use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors reported by the operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge `{u, v}` with `u == v` or an endpoint outside the vertex range.
    InvalidEdge { u: usize, v: usize, n_vertices: usize },
    /// The same edge was given twice.
    DuplicateEdge { u: usize, v: usize },
    /// Some vertex has degree two or more.
    NotMatching { vertex: usize },
    /// The matching is not a perfect matching between the two halves of `[2n]`.
    NotBipartiteMatching,
    /// The image sequence is not a bijection on `[n]`.
    InvalidPermutation,
    /// Interval cut positions are not increasing or do not cover the range.
    InvalidPartition,
    /// An embedding that is not strictly increasing or leaves the host range.
    InvalidEmbedding,
    /// Parameters outside the domain of a construction or check.
    InvalidParameters(String),
    /// A scanned row would fall outside the color matrix.
    RowOverflow { needed: usize, available: usize },
    /// Thread index out of range.
    InvalidThread(usize),
    /// The thread found a red copy, so it has no segments.
    ThreadSucceeded(usize),
    /// Brute force refused on an input that is too large.
    TooLarge { n: usize, max: usize },
    /// The exhaustive search ran out of its node budget.
    BudgetExceeded { n: usize, nodes_explored: u64 },
    /// A log-space quantity left the representable range.
    NumericInstability(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidEdge { u, v, n_vertices } => write!(
                f,
                "invalid edge {{{u}, {v}}} on {n_vertices} vertices (zero-based)"
            ),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            Error::NotMatching { vertex } => {
                write!(f, "vertex {vertex} is incident to more than one edge")
            }
            Error::NotBipartiteMatching => f.write_str(
                "not a perfect matching between the left and right halves of the vertex set",
            ),
            Error::InvalidPermutation => f.write_str("images do not form a permutation"),
            Error::InvalidPartition => f.write_str("interval partition is malformed"),
            Error::InvalidEmbedding => {
                f.write_str("embedding is not order-preserving or leaves the host range")
            }
            Error::InvalidParameters(msg) => write!(f, "invalid parameters: {msg}"),
            Error::RowOverflow { needed, available } => write!(
                f,
                "scanning needs {needed} rows but the matrix has only {available}"
            ),
            Error::InvalidThread(t) => write!(f, "thread {t} does not exist"),
            Error::ThreadSucceeded(t) => {
                write!(f, "thread {t} found a red copy and has no segments")
            }
            Error::TooLarge { n, max } => write!(f, "input size {n} exceeds the limit {max}"),
            Error::BudgetExceeded { n, nodes_explored } => write!(
                f,
                "search budget exhausted at N = {n} after {nodes_explored} nodes"
            ),
            Error::NumericInstability(term) => {
                write!(f, "numeric instability while evaluating {term}")
            }
        }
    }
}

impl core::error::Error for Error {}
