//! The tensor product of two paths, laid out as a grid of `m` parallel
//! lines with `n` vertices each.
//!
//! Vertices are addressed 1-based: row `i` (1..=n) on line `j` (1..=m).
//! Every edge joins a vertex to a diagonal neighbour on the next line,
//! so the graph has `n * m` vertices and `2(n-1)(m-1)` edges. It is
//! bipartite between odd and even lines, and splits into two connected
//! components (by the parity of `i + j`); labelings always cover the
//! whole vertex and edge set.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A vertex of the grid: row `i` on line `j`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridVertex {
    pub i: u32,
    pub j: u32,
}

impl GridVertex {
    pub const fn new(i: u32, j: u32) -> Self {
        Self { i, j }
    }
}

impl fmt::Display for GridVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// An edge in canonical orientation: always from line `j` to line `j + 1`.
pub type Edge = (GridVertex, GridVertex);

/// The tensor product of the paths on `n` and `m` vertices.
///
/// The edge list is canonical: ascending line `j`, then ascending row `i`,
/// and for each source vertex the `(i, j) -> (i+1, j+1)` edge precedes the
/// `(i, j) -> (i-1, j+1)` edge. Rebuilding from the same dimensions always
/// reproduces an identical structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorGraph {
    n: u32,
    m: u32,
    edges: Vec<Edge>,
}

impl TensorGraph {
    /// Builds the graph for paths of `n` and `m` vertices.
    ///
    /// Fails for `n < 2` or `m < 2` (the label codomain `{0, .., 2q-1}`
    /// would be empty) and when `4(n-1)(m-1)` overflows `u64`.
    pub fn build(n: u32, m: u32) -> Result<Self> {
        if n < 2 || m < 2 {
            return Err(Error::DimensionTooSmall { n, m });
        }
        let double_q = 4u128 * u128::from(n - 1) * u128::from(m - 1);
        if double_q > u128::from(u64::MAX) {
            return Err(Error::DimensionOverflow { n, m });
        }

        let q = (double_q / 2) as usize;
        let mut edges = Vec::with_capacity(q);
        for j in 1..m {
            for i in 1..=n {
                if i < n {
                    edges.push((GridVertex::new(i, j), GridVertex::new(i + 1, j + 1)));
                }
                if i > 1 {
                    edges.push((GridVertex::new(i, j), GridVertex::new(i - 1, j + 1)));
                }
            }
        }
        debug_assert_eq!(edges.len(), q);

        Ok(Self { n, m, edges })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn vertex_count(&self) -> u64 {
        u64::from(self.n) * u64::from(self.m)
    }

    /// The edge count `q = 2(n-1)(m-1)`.
    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, v: GridVertex) -> bool {
        (1..=self.n).contains(&v.i) && (1..=self.m).contains(&v.j)
    }

    /// Vertices in line-major order: line 1 rows 1..=n, then line 2, ...
    pub fn vertices(&self) -> impl Iterator<Item = GridVertex> + '_ {
        (1..=self.m).flat_map(move |j| (1..=self.n).map(move |i| GridVertex::new(i, j)))
    }

    /// The in-range vertices among `(i-1, j-1)`, `(i+1, j-1)`, `(i-1, j+1)`,
    /// `(i+1, j+1)`, in that order.
    pub fn neighbors_of(&self, v: GridVertex) -> Result<Vec<GridVertex>> {
        if !self.contains(v) {
            return Err(Error::VertexOutOfRange {
                i: v.i,
                j: v.j,
                n: self.n,
                m: self.m,
            });
        }
        let candidates = [
            (v.i.wrapping_sub(1), v.j.wrapping_sub(1)),
            (v.i + 1, v.j.wrapping_sub(1)),
            (v.i.wrapping_sub(1), v.j + 1),
            (v.i + 1, v.j + 1),
        ];
        Ok(candidates
            .into_iter()
            .map(|(i, j)| GridVertex::new(i, j))
            .filter(|&u| self.contains(u))
            .collect())
    }
}
