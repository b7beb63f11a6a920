//! Error type shared by every module of the crate.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Failures reported by poset construction, labelings, families and I/O.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The cover digraph contains a directed cycle.
    #[error("cover relation contains a cycle")]
    CycleDetected,
    /// A cover pair is implied by transitivity of the other pairs.
    #[error("cover ({0}, {1}) is implied by other covers")]
    RedundantCover(String, String),
    /// The poset does not have a unique minimum and a unique maximum.
    #[error("poset is not bounded (needs exactly one minimal and one maximal element)")]
    NotBounded,
    /// Two elements were required to satisfy x <= y but do not.
    #[error("elements {0} and {1} are not comparable as x <= y")]
    NotComparable(String, String),
    /// A cover has no label (for the given root, in the chain-edge case).
    #[error("no label for cover ({0}, {1})")]
    MissingLabel(String, String),
    /// The element is not a descent of the chain.
    #[error("element {0} is not a descent of the chain")]
    NotADescent(String),
    /// The pair is not a polygon move, or the move is a cover relation.
    #[error("the move is a cover relation, not a non-cover move")]
    NotANonCover,
    /// Some pair of elements lacks a join or a meet.
    #[error("poset is not a lattice")]
    NotALattice,
    /// The sequence is not a linear extension of the poset.
    #[error("sequence is not a linear extension")]
    NotALinearExtension,
    /// A tableau or shape does not fit the requested diagram.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// A chain in the partition lattice does not start at the bottom element.
    #[error("chain does not start at the bottom element")]
    NotFromBottom,
    /// The fixture name is not known.
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    /// An element name does not belong to the poset.
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    /// An element name was declared twice.
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    /// A chain is not a saturated or maximal chain of the poset.
    #[error("not a valid chain: {0}")]
    InvalidChain(String),
    /// Malformed JSON input, with the JSON path and byte offset of the failure.
    #[error("malformed JSON at path `{path}` (line {line}, column {column}, byte offset {offset}): {message}")]
    Json {
        /// JSON path to the offending value, e.g. `covers[3][1]`.
        path: String,
        /// One-based line number.
        line: usize,
        /// One-based column number.
        column: usize,
        /// Zero-based byte offset into the input.
        offset: usize,
        /// Parser message.
        message: String,
    },
    /// Any other invalid argument.
    #[error("invalid input: {0}")]
    Invalid(String),
}
