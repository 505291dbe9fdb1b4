use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex index {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph must be connected for this operation")]
    Disconnected,

    #[error("malformed word: {0}")]
    MalformedWord(String),

    #[error("vertices {0:?} do not form a strictly increasing chain of classes")]
    NotAChain(Vec<String>),

    #[error("{v} <= {w} holds but none of the three cases applies (disconnected graph?)")]
    LeqCaseMismatch { v: String, w: String },

    #[error("class {0} is not an equivalence class of this graph")]
    ForeignClass(String),

    #[error("class {0} is not maximal")]
    NotMaximal(String),

    #[error("classes {0} and {1} are not adjacent maximal classes")]
    NotAdjacent(String, String),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("automorphism graph hash mismatch: expected {expected}, found {found}")]
    GraphMismatch { expected: String, found: String },

    #[error("automorphism check failed: {0}")]
    NotAnAutomorphism(String),

    #[error("element is not in the kernel of the restriction map: {0}")]
    NotInKernel(String),

    #[error("could not reconcile conjugators: {0}")]
    Irreconcilable(String),

    #[error("the graph of maximal classes is a single vertex")]
    SingletonGammaZero,

    #[error("the graph of maximal classes has {0} vertices, expected exactly one")]
    NotSingleton(usize),

    #[error("structural check failed: {0}")]
    Internal(String),
}
