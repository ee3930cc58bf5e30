use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::rational::Rational;
use crate::structure::KstarWitness;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports. Parse and validity problems carry
/// positions; hypothesis failures carry the witness that falsifies them.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{}{message}", .line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    InvalidGraph { line: Option<usize>, message: String },

    #[error("invalid embedding: {message}")]
    InvalidEmbedding { message: String },

    #[error("embedding fails Euler check: {vertices} - {edges} + {faces} != 2")]
    EulerCheckFailed {
        vertices: usize,
        edges: usize,
        faces: usize,
    },

    #[error("operation requires a nonempty graph")]
    EmptyGraph,

    #[error("not a forest: vertex {cycle_vertex} lies on a cycle")]
    NotAForest { cycle_vertex: VertexId },

    #[error("graph has {vertices} vertices, exceeding the exact-search limit {limit}")]
    TooLarge { vertices: usize, limit: usize },

    #[error("coloring is not total: vertex {vertex} is uncolored")]
    IncompleteColoring { vertex: VertexId },

    #[error("vertex {vertex} has color {color}, outside palette 1..={palette}")]
    ColorOutOfRange {
        vertex: VertexId,
        color: u32,
        palette: u32,
    },

    #[error("contains a 1-subdivision of K{k}: branch vertices {:?}", .witness.branch)]
    KstarSubgraph { k: u32, witness: KstarWitness },

    #[error("maximum average degree {value} exceeds bound {bound} (witness {witness:?})")]
    MadExceedsBound {
        bound: Rational,
        value: Rational,
        witness: BTreeSet<VertexId>,
    },

    #[error("contains an induced 5-cycle {cycle:?}")]
    InducedC5 { cycle: [VertexId; 5] },

    #[error("girth {found} is below the required {required}")]
    GirthBelow { required: usize, found: usize },

    #[error("Brooks precondition violated: {message} (component {component:?})")]
    BrooksPrecondition {
        message: String,
        component: BTreeSet<VertexId>,
    },

    #[error("extension procedure failed at step {step}")]
    ExtensionFailed { step: String },

    #[error("no reducible configuration and no terminal case on {} vertices / {} edges", .residual.n_vertices(), .residual.n_edges())]
    Stuck { residual: Graph },

    #[error("{message}")]
    RuleSetMismatch { message: String },

    #[error("{message}")]
    UnsatisfiableParameters { message: String },
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn invalid(line: Option<usize>, message: impl Into<String>) -> Self {
        Error::InvalidGraph {
            line,
            message: message.into(),
        }
    }

    pub fn extension(step: impl Into<String>) -> Self {
        Error::ExtensionFailed { step: step.into() }
    }

    pub fn embedding(message: impl Into<String>) -> Self {
        Error::InvalidEmbedding {
            message: message.into(),
        }
    }
}
