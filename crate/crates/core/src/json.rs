//! The wire formats shared by the CLI and the Python bindings.
//!
//! Graphs travel as `{"n": int, "edges": [[u,v],...], "embedding":
//! [[edge ids per vertex],...]?}`; edge ids in embeddings refer to
//! positions in `edges`. Orientations are `[[tail,head],...]` indexed by
//! edge id. Polynomials are plain integer arrays, index = degree.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};
use crate::orient::Orientation;
use crate::planar::RotationEmbedding;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<Vec<usize>>>,
}

/// Parses the graph format, validating any supplied embedding against the
/// graph.
pub fn graph_from_json(s: &str) -> Result<(Graph, Option<RotationEmbedding>)> {
    let parsed: GraphJson =
        serde_json::from_str(s).map_err(|e| Error::InvalidJson(e.to_string()))?;
    let g = build_graph(parsed.n, &parsed.edges)?;
    let emb = match parsed.embedding {
        Some(rotation) => Some(RotationEmbedding::from_rotation(&g, rotation)?),
        None => None,
    };
    Ok((g, emb))
}

pub fn graph_to_json(g: &Graph, emb: Option<&RotationEmbedding>) -> String {
    let doc = GraphJson {
        n: g.n(),
        edges: g.edges().to_vec(),
        embedding: emb.map(|e| e.rotation().to_vec()),
    };
    serde_json::to_string(&doc).expect("graph JSON serialization cannot fail")
}

pub fn orientation_from_json(g: &Graph, s: &str) -> Result<Orientation> {
    let pairs: Vec<(usize, usize)> =
        serde_json::from_str(s).map_err(|e| Error::InvalidJson(e.to_string()))?;
    Orientation::new(g, pairs)
}

pub fn orientation_to_json(o: &Orientation) -> String {
    serde_json::to_string(&o.directions().to_vec())
        .expect("orientation JSON serialization cannot fail")
}
