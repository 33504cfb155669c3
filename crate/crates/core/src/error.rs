use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("ground set of {m} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { m: usize, max: usize },
    #[error("the void complex is not representable; a complex always contains the empty face")]
    VoidComplex,
    #[error("{what} is not an antichain: {a} is contained in {b}")]
    NotAntichain {
        what: &'static str,
        a: String,
        b: String,
    },
    #[error(
        "operation needs a nonempty family of minimal non-faces (the complex is a full simplex)"
    )]
    EmptySystem,
    #[error("set system member {member} must be a proper nonempty subset of the ground set")]
    ImproperMember { member: String },
    #[error(
        "complex has ghost vertices {ghosts:?}; this operation requires every vertex to be a face"
    )]
    GhostVertices { ghosts: Vec<usize> },
    #[error("skeleton dimension must be nonnegative, got {0}")]
    NegativeSkeleton(i64),
    #[error("enumeration over all 2^{m} subsets is capped at m <= {max}")]
    SubsetEnumerationTooLarge { m: usize, max: usize },
    #[error("{0} vectors cannot be unimodularly independent in rank {1}")]
    RankTooLarge(usize, usize),
    #[error("vector width {width} exceeds 64")]
    WidthTooLarge { width: usize },
    #[error("characteristic map assigns a zero vector to vertex {vertex}")]
    ZeroVector { vertex: usize },
    #[error("characteristic map assigns a non-primitive vector to vertex {vertex}")]
    NonPrimitiveVector { vertex: usize },
    #[error("characteristic map covers {got} vertices but the complex has {want}")]
    MapSizeMismatch { got: usize, want: usize },
    #[error("{0} is not a prime usable as a field characteristic")]
    InvalidPrime(u64),
    #[error("matrix of {rows} x {cols} is too large for dense elimination")]
    MatrixTooLarge { rows: usize, cols: usize },
    #[error("search budget of {budget} nodes exhausted; rerun with a larger --budget")]
    BudgetExhausted { budget: u64 },
    #[error("Taylor complex of {n} minimal non-faces exceeds the supported maximum of {max}")]
    TooManyNonfaces { n: usize, max: usize },
    #[error("the Taylor resolution of this complex is not minimal")]
    NotMinimal,
    #[error("universal complex rank {n} outside the supported range {lo}..={hi}")]
    RankOutOfRange { n: usize, lo: usize, hi: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad complex file: {0}")]
    BadFormat(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
