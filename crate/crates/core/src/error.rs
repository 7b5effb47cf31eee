use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} lies outside [1, {m}]")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("vertex {vertex} of [{m}] is not a face (ghost vertex)")]
    GhostVertex { vertex: usize, m: usize },

    #[error("ambient vertex count must be between 1 and {max}, got {m}")]
    AmbientSize { m: usize, max: usize },

    #[error("operation requires a nonempty vertex subset")]
    EmptySubset,

    #[error("boundary of a simplex needs at least two vertices, got {size}")]
    BoundaryTooSmall { size: usize },

    #[error("subset enumeration refused for m = {m} (limit {max})")]
    EnumerationGuard { m: usize, max: usize },

    #[error("complex is not shifted")]
    NotShifted,

    #[error("complex has no vertices")]
    EmptyComplex,

    #[error("{f} is not a subset of {i}")]
    NotSubset { f: String, i: String },

    #[error("c = {c} is outside [{lo}, {hi}]")]
    OutOfInterval { c: usize, lo: usize, hi: usize },

    #[error("index {index} out of range: {reason}")]
    IndexOutOfRange { index: usize, reason: String },

    #[error("({i}, {f}) is not a wedge summand of the complex")]
    NotASummand { i: String, f: String },

    #[error("sphere assignment: {0}")]
    SphereAssignment(String),

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("malformed expression: {0}")]
    MalformedExpr(String),

    #[error("degree mismatch for summand ({i}, {f}): expression {expr}, summand {summand}")]
    DegreeMismatch { i: String, f: String, expr: i64, summand: i64 },

    #[error("inhomogeneous tensor element")]
    Inhomogeneous,

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("torsion coefficient does not fit in 64 bits")]
    TorsionOverflow,

    #[error("only {found} distinct complexes available after {attempts} draws (wanted {wanted})")]
    CorpusExhausted { found: usize, wanted: usize, attempts: usize },

    #[error("input: {0}")]
    Input(String),
}
