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

//! Randomized greedy edge coloring by rejection sampling.
//!
//! Edges are taken in id order. For each edge a color is drawn uniformly
//! from `1..=q` until one is free at both endpoints. With `q >= 2Δ - 1`
//! such a color always exists.

use rand::Rng;
use thiserror::Error;

use crate::coloring::{ColoringError, PartialColoring};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreedyError {
    #[error("palette {q} is below 2*Delta-1 = {needed}")]
    PaletteTooSmall { q: u32, needed: usize },
    #[error("edge {edge} ({u},{v}) found no free color in {attempts} draws")]
    AttemptCapExceeded {
        edge: EdgeId,
        u: VertexId,
        v: VertexId,
        attempts: u64,
    },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GreedyReport {
    /// Color draws over all edges.
    pub attempts_total: u64,
    /// Largest number of draws spent on one edge.
    pub attempts_max_per_edge: u64,
    /// Distinct colors in the result.
    pub colors_used: usize,
}

impl GreedyReport {
    pub fn mean_attempts(&self, m: usize) -> f64 {
        if m == 0 {
            0.0
        } else {
            self.attempts_total as f64 / m as f64
        }
    }
}

/// Per-edge draw budget before giving up: `10 q ln(max(n, 2))`.
pub fn attempt_cap(q: u32, n: usize) -> u64 {
    (10.0 * q as f64 * (n.max(2) as f64).ln()).ceil() as u64
}

/// Colors every edge of `g` with colors in `1..=q`.
pub fn greedy_color<'g, R: Rng + ?Sized>(
    g: &'g Graph,
    q: u32,
    rng: &mut R,
) -> Result<(PartialColoring<'g>, GreedyReport), GreedyError> {
    let needed = (2 * g.max_degree()).saturating_sub(1);
    if g.edge_count() > 0 && (q as usize) < needed {
        return Err(GreedyError::PaletteTooSmall { q, needed });
    }
    greedy_color_unchecked(g, q, rng)
}

/// As [`greedy_color`] without the palette check; an edge with no free
/// color fails after [`attempt_cap`] draws.
pub fn greedy_color_unchecked<'g, R: Rng + ?Sized>(
    g: &'g Graph,
    q: u32,
    rng: &mut R,
) -> Result<(PartialColoring<'g>, GreedyReport), GreedyError> {
    let mut c = PartialColoring::new(g, q)?;
    let cap = attempt_cap(q, g.vertex_count());
    let mut report = GreedyReport::default();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut attempts = 0u64;
        loop {
            if attempts == cap {
                return Err(GreedyError::AttemptCapExceeded {
                    edge: e as EdgeId,
                    u,
                    v,
                    attempts,
                });
            }
            attempts += 1;
            let alpha = rng.random_range(1..=q);
            if c.is_missing(u, alpha) && c.is_missing(v, alpha) {
                c.set_color(e as EdgeId, alpha)?;
                break;
            }
        }
        report.attempts_total += attempts;
        report.attempts_max_per_edge = report.attempts_max_per_edge.max(attempts);
    }
    let mut used = vec![false; q as usize + 1];
    for &col in c.colors() {
        used[col as usize] = true;
    }
    report.colors_used = used[1..].iter().filter(|&&b| b).count();
    Ok((c, report))
}
