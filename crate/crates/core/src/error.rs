use thiserror::Error;

use crate::graph::Vertex;
use crate::planarity::KuratowskiWitness;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("edge ({0}, {1}) is not an edge of the graph")]
    NotAnEdge(Vertex, Vertex),

    #[error("edge set is not a matching: edges ({0}, {1}) and ({2}, {3}) share an endpoint")]
    NotAMatching(Vertex, Vertex, Vertex, Vertex),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex sequence is not a cycle of the graph: {0}")]
    NotACycle(String),

    #[error("cycle does not span all vertices")]
    NotSpanningCycle,

    #[error("graph is not planar")]
    NonPlanar {
        kuratowski: Option<KuratowskiWitness>,
    },

    #[error("embedding is inconsistent with the graph: {0}")]
    BadEmbedding(String),

    #[error("matching budget exhausted after examining {examined} matchings{}", context.as_deref().map(|c| format!(" ({c})")).unwrap_or_default())]
    BudgetExhausted {
        examined: u64,
        context: Option<String>,
    },

    #[error("graph has maximum degree {0}, expected at most 3")]
    NotSubcubic(u32),

    #[error("unknown graph family: {0}")]
    UnknownFamily(String),

    #[error("invalid family parameters: {0}")]
    BadFamilyParams(String),

    #[error("LCF spec produces a loop or parallel edge (jump {0} at vertex {1})")]
    LcfInvalid(i64, Vertex),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("witness search for i = {0} exceeds the search budget (max supported i = {1})")]
    HiSearchTooLarge(usize, usize),

    #[error("could not construct a valid string representation: {0}")]
    RepresentationFailed(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
