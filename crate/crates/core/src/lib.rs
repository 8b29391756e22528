//! Recognition and certification toolkit for subcubic string graphs.
//!
//! A subcubic graph is a string graph exactly when some matching of cubic
//! edges contracts to a planar graph. This crate implements that
//! characterization end to end: graph plumbing, planarity testing with
//! embedding extraction, the matching-contraction search with certificates,
//! generators for the named graph families involved, minimal-obstacle
//! certification in the induced-minor order, and construction of explicit
//! geometric string representations with exact rational coordinates.

pub mod error;
pub mod families;
pub mod graph;
pub mod obstacles;
pub mod planarity;
pub mod recognition;
pub mod representation;

pub use error::Error;
pub use graph::{Graph, Matching, Vertex};
pub use planarity::{is_planar, planar_embedding, PlanarEmbedding};
pub use recognition::{recognize, Status, Verdict};

/// Default cap on the number of matchings a single search may examine.
pub const DEFAULT_BUDGET: u64 = 10_000_000;
