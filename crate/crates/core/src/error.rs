use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{at}: a graph needs at least one vertex")]
    NoVertices { at: String },
    #[error("line {line}: malformed header: {msg}")]
    Header { line: usize, msg: String },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{at}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { at: String, vertex: usize, n: usize },
    #[error("{at}: self-loop at vertex {vertex}")]
    SelfLoop { at: String, vertex: usize },
    #[error("{at}: duplicate edge {{{u},{v}}}")]
    DuplicateEdge { at: String, u: usize, v: usize },
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
    #[error("invalid graph JSON: {0}")]
    Json(String),
    #[error("maximum subgraph density is undefined for an edgeless graph")]
    Edgeless,
    #[error("n = {n} exceeds the limit of {limit} vertices")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("degenerate ambient: complementary edge ideals need n >= 3, got n = {n}")]
    DegenerateAmbient { n: usize },
    #[error("unit ideal: a generator has empty support")]
    UnitIdeal,
    #[error("{0}: not defined for the zero ideal")]
    ZeroIdeal(&'static str),
    #[error("ambient n = {n} exceeds the squarefree support limit of {limit}")]
    AmbientTooLarge { n: usize, limit: usize },
    #[error("ambient mismatch: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },
    #[error("variable {var} out of range 1..={n}")]
    VariableOutOfRange { var: usize, n: usize },
    #[error("degree {d} out of range 1..={n}")]
    InvalidDegree { d: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("n = {n} exceeds the homology oracle limit of {limit} variables")]
    TooLarge { n: usize, limit: usize },
    #[error("Betti table has no nonzero entries")]
    EmptyTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("degenerate graph (n = {n}, {edges} edges): need n >= 3 and at least one edge")]
    Degenerate { n: usize, edges: usize },
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExperimentError {
    #[error("experiments need n >= 3, got n = {n}")]
    TooFewVertices { n: usize },
    #[error("invalid edge probability {0}: must be a finite number >= 0")]
    InvalidProbability(f64),
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("a sweep needs at least one c value")]
    EmptySweep,
}
