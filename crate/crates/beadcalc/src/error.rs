use thiserror::Error;

/// Structural problems detected while building or parsing a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("vertex {vertex} has valence {valence}, expected {expected}")]
    BadValence {
        vertex: usize,
        valence: usize,
        expected: usize,
    },
    #[error("edge {edge} references vertex {vertex}, but there are only {vertices} vertices")]
    BadEdge {
        edge: usize,
        vertex: usize,
        vertices: usize,
    },
    #[error("trivalent vertex {vertex} has a missing or inconsistent cyclic order")]
    IncompleteCyclicOrder { vertex: usize },
    #[error("duplicate leg label `{label}`")]
    DuplicateLegLabel { label: String },
    #[error("`*` is reserved for unlabeled hair legs")]
    ReservedLegLabel,
    #[error("diagram too large: {count} {what} exceeds the encoding limit of 65535")]
    TooLarge { what: &'static str, count: usize },
    #[error("bead attached to edge {edge}, but there are only {edges} edges")]
    BadBeadEdge { edge: usize, edges: usize },
    #[error("could not parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
}

/// Errors raised by the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("degree {requested} exceeds the configured cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("term does not live in the stated sector: {detail}")]
    DegreeMismatch { detail: String },
    #[error("term has nonzero bead degree")]
    NonzeroBeadDegree,
    #[error("coordinate {value} is not divisible by {divisor}")]
    NotDivisible { value: i64, divisor: i64 },
    #[error("input is not homogeneous of bead degree {expected}")]
    WrongDegree { expected: i64 },
    #[error("term is not a connected diagram with legs 1,2,3 and a trivalent vertex")]
    NotInF3,
    #[error("vertex {vertex} is not a trivalent vertex of the diagram")]
    NotTrivalent { vertex: usize },
    #[error("truncation degree {truncation} is below the diagram degree {degree}")]
    TruncationTooSmall { truncation: usize, degree: usize },
    #[error("operation requires a closed diagram (no legs)")]
    NotClosed,
    #[error("antisymmetry certificate failed for leg permutation {permutation}")]
    NotAntisymmetric { permutation: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
