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

//! Independent checks over plain edge-color vectors.
//!
//! Nothing here reads the missing-color index of [`PartialColoring`]; every
//! answer is recomputed from the graph and the per-edge colors, so these
//! functions can serve as oracles for the fast paths.
//!
//! [`PartialColoring`]: crate::coloring::PartialColoring

use std::fmt;

use crate::coloring::{Color, BLANK};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two edges at `vertex` share `color`.
    Conflict {
        first: EdgeId,
        second: EdgeId,
        vertex: VertexId,
        color: Color,
    },
    /// An uncolored edge where a complete coloring was required.
    Blank { edge: EdgeId },
    /// The color vector does not have one entry per edge.
    LengthMismatch { expected: usize, found: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Conflict {
                first,
                second,
                vertex,
                color,
            } => write!(
                f,
                "edges {first} and {second} share color {color} at vertex {vertex}"
            ),
            Violation::Blank { edge } => write!(f, "edge {edge} is uncolored"),
            Violation::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} edge colors, found {found}")
            }
        }
    }
}

/// Checks that no two edges sharing an endpoint have the same color and,
/// with `require_complete`, that no edge is blank. Reports the first
/// violation in vertex order.
pub fn verify_proper(g: &Graph, colors: &[Color], require_complete: bool) -> Result<(), Violation> {
    if colors.len() != g.edge_count() {
        return Err(Violation::LengthMismatch {
            expected: g.edge_count(),
            found: colors.len(),
        });
    }
    let max_color = colors.iter().copied().max().unwrap_or(0) as usize;
    // (vertex + 1, edge) of the last sighting of each color.
    let mut seen: Vec<(u32, EdgeId)> = vec![(0, 0); max_color + 1];
    for x in 0..g.vertex_count() as VertexId {
        for &(_, e) in g.neighbors(x) {
            let color = colors[e as usize];
            if color == BLANK {
                continue;
            }
            let slot = &mut seen[color as usize];
            if slot.0 == x + 1 {
                return Err(Violation::Conflict {
                    first: slot.1,
                    second: e,
                    vertex: x,
                    color,
                });
            }
            *slot = (x + 1, e);
        }
    }
    if require_complete {
        if let Some(e) = colors.iter().position(|&c| c == BLANK) {
            return Err(Violation::Blank { edge: e as EdgeId });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PaletteReport {
    pub distinct: usize,
    pub max_color: Option<Color>,
}

pub fn palette_report(colors: &[Color]) -> PaletteReport {
    let mut used: Vec<Color> = colors.iter().copied().filter(|&c| c != BLANK).collect();
    used.sort_unstable();
    used.dedup();
    PaletteReport {
        distinct: used.len(),
        max_color: used.last().copied(),
    }
}

/// Vertex degrees counting only blank edges.
pub fn blank_degrees(g: &Graph, colors: &[Color]) -> Vec<usize> {
    let mut deg = vec![0; g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if colors[e] == BLANK {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
    }
    deg
}

// ---------------------------------------------------------------------------
// Reference transcriptions of fan and chain construction. Missing sets are
// recomputed by scanning adjacency lists on every query.

fn scan_missing(g: &Graph, colors: &[Color], z: VertexId, color: Color) -> bool {
    g.neighbors(z)
        .iter()
        .all(|&(_, e)| colors[e as usize] != color)
}

fn scan_partner(g: &Graph, colors: &[Color], x: VertexId, color: Color) -> Option<VertexId> {
    g.neighbors(x)
        .iter()
        .find(|&&(_, e)| colors[e as usize] == color)
        .map(|&(y, _)| y)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveFan {
    pub pivot: VertexId,
    pub leaves: Vec<VertexId>,
    pub alpha: Color,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NaiveFanOutcome {
    Built(NaiveFan),
    Fail,
}

/// Fan construction with full rescans and a linear membership test.
/// `e` must be blank with `x` as an endpoint; `palette` sorted ascending.
pub fn naive_make_fan(
    g: &Graph,
    colors: &[Color],
    e: EdgeId,
    x: VertexId,
    palette: &[Color],
) -> NaiveFanOutcome {
    let (a, b) = g.endpoints(e);
    let y = if a == x { b } else { a };
    let mut leaves = vec![y];
    let mut z = y;
    loop {
        let Some(eta) = palette
            .iter()
            .copied()
            .filter(|&c| scan_missing(g, colors, z, c))
            .min()
        else {
            return NaiveFanOutcome::Fail;
        };
        match scan_partner(g, colors, x, eta) {
            None => {
                let k = leaves.len();
                return NaiveFanOutcome::Built(NaiveFan {
                    pivot: x,
                    leaves,
                    alpha: eta,
                    j: k,
                });
            }
            Some(next) => {
                if let Some(j) = leaves.iter().position(|&w| w == next) {
                    return NaiveFanOutcome::Built(NaiveFan {
                        pivot: x,
                        leaves,
                        alpha: eta,
                        j,
                    });
                }
                leaves.push(next);
                z = next;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveChain {
    pub fan: NaiveFan,
    pub path: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NaiveChainOutcome {
    Built(NaiveChain),
    FailFan,
    FailBeta,
}

/// Chain construction on top of [`naive_make_fan`], path walked by rescans.
pub fn naive_vizing_chain(
    g: &Graph,
    colors: &[Color],
    e: EdgeId,
    x: VertexId,
    palette: &[Color],
    path_cap: usize,
) -> NaiveChainOutcome {
    let fan = match naive_make_fan(g, colors, e, x, palette) {
        NaiveFanOutcome::Fail => return NaiveChainOutcome::FailFan,
        NaiveFanOutcome::Built(f) => f,
    };
    if fan.j == fan.leaves.len() {
        return NaiveChainOutcome::Built(NaiveChain { fan, path: vec![x] });
    }
    let Some(beta) = palette
        .iter()
        .copied()
        .filter(|&c| scan_missing(g, colors, x, c))
        .min()
    else {
        return NaiveChainOutcome::FailBeta;
    };
    let mut path = vec![x];
    let mut want = [fan.alpha, beta];
    while path.len() <= path_cap {
        match scan_partner(g, colors, *path.last().unwrap(), want[0]) {
            Some(next) => path.push(next),
            None => break,
        }
        want.swap(0, 1);
    }
    NaiveChainOutcome::Built(NaiveChain { fan, path })
}
