use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("{0} vertices exceeds the 64-vertex limit")]
    TooManyVertices(usize),
    #[error("loop at vertex {0}")]
    Loop(u32),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(u32),
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(u32),
    #[error("adjacency rows are not symmetric")]
    Asymmetric,
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("vertex set is not contained in the host graph")]
    NotASubset,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("enumeration is limited to n <= 8 (asked for {0})")]
    EnumerationTooLarge(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("alternation needs two distinct letters (got {0} twice)")]
    SameLetter(u32),
    #[error("malformed word at byte {0}")]
    Malformed(usize),
    #[error("uniform word search is limited to 7 vertices and k <= 3")]
    BoundsExceeded,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrientationError {
    #[error("orientation leaves edge {0}-{1} unoriented")]
    Incomplete(u32, u32),
    #[error("orientation contains a directed cycle")]
    Cyclic,
    #[error("{0}-{1} is not an edge of the host graph")]
    NotAnEdge(u32, u32),
    #[error("edge {0}-{1} is oriented both ways")]
    Contradictory(u32, u32),
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("naive enumeration is limited to 24 edges (graph has {0})")]
    TooManyEdges(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TranscriptError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown instruction `{token}`")]
    UnknownInstruction { line: usize, token: String },
    #[error("line {line}: malformed vertex token `{token}`")]
    BadVertex { line: usize, token: String },
    #[error("line {line}: copy {copy} was never created")]
    UnresolvedCopy { line: usize, copy: u32 },
    #[error("line {line}: copy {copy} is consumed twice")]
    DuplicateConsumption { line: usize, copy: u32 },
    #[error("copy {0} is created but never visited")]
    UnvisitedCopy(u32),
    #[error("line {line}: shortcut sequence needs at least 4 vertices")]
    ShortSequence { line: usize },
    #[error("refutation requested but the graph has a semi-transitive orientation")]
    NothingToRefute,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("m must be in 1..=4 (got {0})")]
    BadM(usize),
    #[error("unknown named graph `{0}`")]
    UnknownGraph(String),
    #[error("deletion spec: {0}")]
    DeletionSpec(String),
    #[error("asset `{name}`: {msg}")]
    Asset { name: String, msg: String },
    #[error("sweep host has {vertices} vertices; the limit is {limit}")]
    SweepTooLarge { vertices: usize, limit: usize },
    #[error("sweep: {0}")]
    Sweep(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
