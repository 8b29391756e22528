//! Geometric string representations with exact rational coordinates.
//!
//! `build_representation` follows the constructive direction of the
//! matching characterization: draw the contracted graph, expand every
//! contracted vertex into a private region where its two strings cross
//! once, and trace every other vertex around its half-edges so that all
//! remaining adjacencies become endpoint contacts near the edge midpoints.
//! `validate_representation` checks the result against the source graph
//! with zero tolerance.

pub mod exact;

mod drawing;
mod gadgets;
mod svg;
mod validate;

pub use drawing::straight_line_drawing;
pub use exact::{Pt, Q};
pub use svg::svg_string;
pub use validate::ValidationReport;

use crate::error::Error;
use crate::graph::{contract_matching, contraction_map, Graph, Matching};
use crate::planarity::PlanarEmbedding;

#[derive(Clone, Debug)]
pub struct StringRepresentation {
    /// One polyline per vertex of the source graph. A single point stands
    /// for a degenerate (point) string.
    pub strings: Vec<Vec<Pt>>,
    /// Proper crossings, by string pair.
    pub crossings: Vec<((usize, usize), Pt)>,
    /// Endpoint contacts, by string pair.
    pub contacts: Vec<((usize, usize), Pt)>,
}

impl StringRepresentation {
    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        let set: std::collections::BTreeSet<(usize, usize)> =
            self.crossings.iter().map(|c| c.0).collect();
        set.into_iter().collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let qstr = |v: &Q| format!("{v}");
        serde_json::json!({
            "strings": self.strings.iter().map(|poly| {
                poly.iter().map(|p| vec![qstr(&p.x), qstr(&p.y)]).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "crossings": self.crossings.iter().map(|((i, j), p)| {
                serde_json::json!({"strings": [i, j], "at": [qstr(&p.x), qstr(&p.y)]})
            }).collect::<Vec<_>>(),
            "contacts": self.contacts.iter().map(|((i, j), p)| {
                serde_json::json!({"strings": [i, j], "at": [qstr(&p.x), qstr(&p.y)]})
            }).collect::<Vec<_>>(),
        })
    }
}

/// Validates an embedding against the graph it claims to embed.
fn check_embedding(h: &Graph, emb: &PlanarEmbedding) -> Result<(), Error> {
    if emb.rotation().len() != h.n() {
        return Err(Error::BadEmbedding(format!(
            "rotation covers {} vertices, graph has {}",
            emb.rotation().len(),
            h.n()
        )));
    }
    for v in h.vertices() {
        let mut rot = emb.neighbors_cyclic(v).to_vec();
        rot.sort_unstable();
        if rot != h.neighbors(v) {
            return Err(Error::BadEmbedding(format!(
                "rotation at vertex {v} does not match its neighborhood"
            )));
        }
    }
    if !emb.euler_valid(h) {
        return Err(Error::BadEmbedding("face count violates Euler's formula".into()));
    }
    Ok(())
}

const BUILD_ATTEMPTS: i64 = 8;

/// Builds a validated string representation of `g` from a planarizing
/// matching and an embedding of the contraction.
pub fn build_representation(
    g: &Graph,
    m: &Matching,
    emb: &PlanarEmbedding,
) -> Result<StringRepresentation, Error> {
    let m = Matching::new(g, m.edges().iter().copied())?;
    let h = contract_matching(g, &m)?;
    check_embedding(&h, emb)?;
    let vmap = contraction_map(g, &m);
    let pos = drawing::straight_line_drawing(&h)?;

    let mut last = String::from("no attempt made");
    for attempt in 0..BUILD_ATTEMPTS {
        let params = gadgets::Params { attempt };
        let strings = match gadgets::build_strings(g, &m, &h, &vmap, &pos, &params) {
            Ok(s) => s,
            Err(Error::RepresentationFailed(msg)) => {
                last = msg;
                continue;
            }
            Err(e) => return Err(e),
        };
        let report = validate::validate_against(&strings, g);
        if report.ok {
            return Ok(StringRepresentation {
                strings,
                crossings: report.crossings,
                contacts: report.contacts,
            });
        }
        last = report.violation.unwrap_or_else(|| "unknown violation".into());
    }
    Err(Error::RepresentationFailed(last))
}

/// Exact validation of any representation against a graph.
pub fn validate_representation(rep: &StringRepresentation, g: &Graph) -> ValidationReport {
    validate::validate_against(&rep.strings, g)
}

/// Renders the representation to an SVG file.
pub fn export_svg(
    rep: &StringRepresentation,
    g: &Graph,
    path: impl AsRef<std::path::Path>,
) -> Result<(), Error> {
    std::fs::write(path, svg_string(rep, g))?;
    Ok(())
}
