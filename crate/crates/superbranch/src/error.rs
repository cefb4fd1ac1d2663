use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed arc token {0:?}: expected \"i-j\" with decimal endpoints")]
    MalformedToken(String),
    #[error("arc {left}-{right} needs left < right")]
    NotIncreasing { left: usize, right: usize },
    #[error("arc {left}-{right} does not fit on {n} nodes")]
    OutOfRange { left: usize, right: usize, n: usize },
    #[error("arcs {0} and {1} share a left endpoint")]
    ConflictingLeft(String, String),
    #[error("arcs {0} and {1} share a right endpoint")]
    ConflictingRight(String, String),
    #[error("ground sets differ: {0} vs {1} nodes")]
    GroundMismatch(usize, usize),
    #[error("node {0} is already a left endpoint")]
    LeftEndpointTaken(usize),
    #[error("anchor {i}-{l} is not a valid arc on {n} nodes")]
    BadAnchor { i: usize, l: usize, n: usize },
    #[error("{mu} is not in the shell set of {lambda} with anchor {i}-{l}")]
    NotInShellSet {
        lambda: String,
        mu: String,
        i: usize,
        l: usize,
    },
    #[error("{0} and {1} are the same arc")]
    IdenticalArcs(String, String),
    #[error("internal consistency: {0} has a negative power of q")]
    NegativeExponent(String),
    #[error("ground set of size {0} is too small for this operation")]
    GroundTooSmall(usize),
    #[error("vertex {partition:?} is not at level {level} of the diagram")]
    VertexAbsent { partition: String, level: usize },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("size guard: {0}")]
    GuardExceeded(String),
    #[error("q = {0} is not a supported prime")]
    UnsupportedField(u64),
    #[error("oracle value {0} is not an integer")]
    NonIntegral(String),
    #[error("diagram file: {0}")]
    DiagramFile(String),
}
