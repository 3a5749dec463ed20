// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Immutable simple graphs with dense, stable edge ids.

use std::collections::HashSet;

use thiserror::Error;

/// Vertex id, `0..n`.
pub type VertexId = u32;
/// Edge id, `0..m`, assigned in input order.
pub type EdgeId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} ({u},{v}) is a self-loop")]
    SelfLoop {
        index: usize,
        u: VertexId,
        v: VertexId,
    },
    #[error("edge {index} ({u},{v}) duplicates an earlier edge")]
    Duplicate {
        index: usize,
        u: VertexId,
        v: VertexId,
    },
    #[error("edge {index} ({u},{v}) has an endpoint outside 0..{n}")]
    OutOfRange {
        index: usize,
        u: VertexId,
        v: VertexId,
        n: usize,
    },
    #[error("vertex count {0} does not fit in a 32-bit id")]
    TooLarge(usize),
}

/// A simple undirected graph. Frozen after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    // CSR adjacency: neighbors of v are adj[offsets[v]..offsets[v + 1]].
    offsets: Vec<usize>,
    adj: Vec<(VertexId, EdgeId)>,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph on vertices `0..n`. Edge ids follow the order of `edge_list`.
    pub fn new(n: usize, edge_list: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        if n > u32::MAX as usize || edge_list.len() > u32::MAX as usize {
            return Err(GraphError::TooLarge(n));
        }
        let mut seen = HashSet::with_capacity(edge_list.len());
        let mut degree = vec![0usize; n];
        for (index, &(u, v)) in edge_list.iter().enumerate() {
            if u as usize >= n || v as usize >= n {
                return Err(GraphError::OutOfRange { index, u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, u, v });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::Duplicate { index, u, v });
            }
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        Ok(Self::from_validated(n, edge_list.to_vec(), degree))
    }

    fn from_validated(n: usize, edges: Vec<(VertexId, VertexId)>, degree: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut adj = vec![(0, 0); 2 * edges.len()];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[fill[u as usize]] = (v, id as EdgeId);
            fill[u as usize] += 1;
            adj[fill[v as usize]] = (u, id as EdgeId);
            fill[v as usize] += 1;
        }
        let max_degree = degree.iter().copied().max().unwrap_or(0);
        Graph {
            n,
            edges,
            offsets,
            adj,
            max_degree,
        }
    }

    /// Subgraph on the same vertex set keeping the listed edges, renumbered
    /// `0..edge_ids.len()` in the given order.
    pub fn edge_subgraph(&self, edge_ids: &[EdgeId]) -> Graph {
        let mut degree = vec![0usize; self.n];
        let edges: Vec<_> = edge_ids
            .iter()
            .map(|&e| {
                let (u, v) = self.edges[e as usize];
                degree[u as usize] += 1;
                degree[v as usize] += 1;
                (u, v)
            })
            .collect();
        Graph::from_validated(self.n, edges, degree)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Δ(G).
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e as usize]
    }

    /// The endpoint of `e` that is not `v`.
    #[inline]
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e as usize];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `(neighbor, edge id)` pairs incident to `v`.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Linear scan of the smaller adjacency list.
    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a)
            .iter()
            .find(|&&(w, _)| w == b)
            .map(|&(_, e)| e)
    }
}
