//! Canonical JSON documents for labelings.
//!
//! Field order is fixed (`n`, `m`, `method`, `vertices`, `edges`), vertices
//! are listed in line-major order with 1-based indices, and serialization
//! is byte-identical across runs, so documents double as test fixtures.

use crate::edges::induce_edge_labels;
use crate::error::{Error, Result};
use crate::graph::TensorGraph;
use crate::labeling::{Labeling, LabelingMethod};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VertexEntry {
    pub i: u32,
    pub j: u32,
    pub label: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub from: [u32; 2],
    pub to: [u32; 2],
    pub label: u64,
}

/// On-disk form of a labeling. `edges` is optional; when present it must
/// mirror the canonical edge list with the induced labels.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelingDocument {
    pub n: u32,
    pub m: u32,
    pub method: LabelingMethod,
    pub vertices: Vec<VertexEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<EdgeEntry>>,
}

impl LabelingDocument {
    pub fn from_labeling(f: &Labeling, include_edges: bool) -> Result<Self> {
        let vertices = f
            .iter()
            .map(|(v, label)| VertexEntry {
                i: v.i,
                j: v.j,
                label,
            })
            .collect();
        let edges = if include_edges {
            let g = TensorGraph::build(f.n(), f.m())?;
            let induced = induce_edge_labels(&g, f)?;
            Some(
                induced
                    .entries()
                    .iter()
                    .map(|&((u, v), label)| EdgeEntry {
                        from: [u.i, u.j],
                        to: [v.i, v.j],
                        label,
                    })
                    .collect(),
            )
        } else {
            None
        };
        Ok(Self {
            n: f.n(),
            m: f.m(),
            method: f.method(),
            vertices,
            edges,
        })
    }

    /// Validates coverage and edge consistency, then builds the labeling.
    pub fn to_labeling(&self) -> Result<Labeling> {
        let (n, m) = (self.n, self.m);
        if n < 2 || m < 2 {
            return Err(Error::DimensionTooSmall { n, m });
        }
        let expected = u64::from(n) * u64::from(m);
        if self.vertices.len() as u64 != expected {
            return Err(Error::Semantic(format!(
                "document declares a {n} x {m} grid ({expected} vertices) but lists {}",
                self.vertices.len()
            )));
        }

        let mut labels = vec![None; self.vertices.len()];
        for entry in &self.vertices {
            if entry.i < 1 || entry.i > n || entry.j < 1 || entry.j > m {
                return Err(Error::Semantic(format!(
                    "vertex ({}, {}) out of range for a {n} x {m} grid",
                    entry.i, entry.j
                )));
            }
            let idx = (entry.j - 1) as usize * n as usize + (entry.i - 1) as usize;
            if labels[idx].is_some() {
                return Err(Error::Semantic(format!(
                    "vertex ({}, {}) listed more than once",
                    entry.i, entry.j
                )));
            }
            labels[idx] = Some(entry.label);
        }
        // full length + no duplicates means every position is covered
        let labels: Vec<u64> = labels.into_iter().map(|l| l.unwrap()).collect();
        let labeling = Labeling::from_vertex_labels(n, m, self.method, labels)?;

        if let Some(edges) = &self.edges {
            let g = TensorGraph::build(n, m)?;
            let induced = induce_edge_labels(&g, &labeling)?;
            if edges.len() != induced.entries().len() {
                return Err(Error::Semantic(format!(
                    "document lists {} edges, canonical edge list has {}",
                    edges.len(),
                    induced.entries().len()
                )));
            }
            for (entry, &((u, v), label)) in edges.iter().zip(induced.entries()) {
                if entry.from != [u.i, u.j] || entry.to != [v.i, v.j] {
                    return Err(Error::Semantic(format!(
                        "edge {:?} -> {:?} out of canonical order (expected {u} -> {v})",
                        entry.from, entry.to
                    )));
                }
                if entry.label != label {
                    return Err(Error::Semantic(format!(
                        "edge {u} -> {v} declares label {} but the vertex labels induce {label}",
                        entry.label
                    )));
                }
            }
        }

        Ok(labeling)
    }
}

/// Renders `f` as the canonical document text.
pub fn serialize_labeling(f: &Labeling, include_edges: bool) -> Result<String> {
    let doc = LabelingDocument::from_labeling(f, include_edges)?;
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    Ok(text)
}

/// Parses document text back into a labeling.
pub fn parse_labeling(text: &str) -> Result<Labeling> {
    let doc: LabelingDocument = serde_json::from_str(text)?;
    doc.to_labeling()
}
