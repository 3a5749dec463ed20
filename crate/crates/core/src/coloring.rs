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

//! Proper partial edge colorings with a per-vertex missing-color index.
//!
//! Colors are `1..=q`; [`BLANK`] (zero) marks an uncolored edge. For every
//! vertex `x` the coloring keeps a `q`-slot array whose slot `α` holds the
//! edge at `x` colored `α`, so "which neighbor of `x` uses `α`" and "is `α`
//! missing at `x`" are both single array reads.

use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};

pub type Color = u32;

/// The uncolored sentinel. Never a valid color.
pub const BLANK: Color = 0;

const NO_EDGE: EdgeId = EdgeId::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("palette size must be at least 1")]
    EmptyPalette,
    #[error("palette of {0} colors is too large for the vertex count")]
    PaletteTooLarge(usize),
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("color {color} is outside 1..={q}")]
    ColorOutOfRange { color: Color, q: u32 },
    #[error("edge {0} is already colored")]
    AlreadyColored(EdgeId),
    #[error("edge {0} is already blank")]
    AlreadyBlank(EdgeId),
    #[error("color {color} is not missing at vertex {vertex} (edge {edge})")]
    NotMissing {
        edge: EdgeId,
        color: Color,
        vertex: VertexId,
    },
}

/// Mutable edge coloring of a borrowed [`Graph`], proper at all times.
#[derive(Debug, Clone)]
pub struct PartialColoring<'g> {
    graph: &'g Graph,
    q: u32,
    color_of: Vec<Color>,
    slots: Vec<EdgeId>,
    colored: usize,
    version: u64,
}

impl<'g> PartialColoring<'g> {
    /// All edges blank, every color missing everywhere.
    pub fn new(graph: &'g Graph, q: u32) -> Result<Self, ColoringError> {
        if q == 0 {
            return Err(ColoringError::EmptyPalette);
        }
        let len = graph
            .vertex_count()
            .checked_mul(q as usize)
            .ok_or(ColoringError::PaletteTooLarge(q as usize))?;
        Ok(PartialColoring {
            graph,
            q,
            color_of: vec![BLANK; graph.edge_count()],
            slots: vec![NO_EDGE; len],
            colored: 0,
            version: 0,
        })
    }

    /// Builds a coloring from an edge-indexed color vector, rejecting any
    /// assignment that is not proper.
    pub fn from_colors(graph: &'g Graph, q: u32, colors: &[Color]) -> Result<Self, ColoringError> {
        let mut c = Self::new(graph, q)?;
        for (e, &color) in colors.iter().enumerate() {
            if color != BLANK {
                c.set_color(e as EdgeId, color)?;
            }
        }
        Ok(c)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Palette size `q`.
    pub fn palette(&self) -> u32 {
        self.q
    }

    /// Bumped on every mutation.
    pub fn version(&self) -> u64 {
        self.version
    }

    pub fn colored_count(&self) -> usize {
        self.colored
    }

    pub fn blank_count(&self) -> usize {
        self.color_of.len() - self.colored
    }

    /// Edge-indexed colors, [`BLANK`] for uncolored edges.
    pub fn colors(&self) -> &[Color] {
        &self.color_of
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.color_of
    }

    /// Color of `e`, or `None` if blank.
    #[inline]
    pub fn color(&self, e: EdgeId) -> Option<Color> {
        match self.color_of[e as usize] {
            BLANK => None,
            c => Some(c),
        }
    }

    #[inline]
    fn slot(&self, x: VertexId, color: Color) -> usize {
        x as usize * self.q as usize + (color - 1) as usize
    }

    /// The edge at `x` colored `color`, if any. `color` must be in `1..=q`.
    #[inline]
    pub fn edge_with_color(&self, x: VertexId, color: Color) -> Option<EdgeId> {
        debug_assert!(color >= 1 && color <= self.q);
        match self.slots[self.slot(x, color)] {
            NO_EDGE => None,
            e => Some(e),
        }
    }

    /// The neighbor `y` with `φ(xy) = color`, or `None` when `color` is
    /// missing at `x`.
    #[inline]
    pub fn missing_lookup(&self, x: VertexId, color: Color) -> Option<VertexId> {
        self.edge_with_color(x, color)
            .map(|e| self.graph.opposite(e, x))
    }

    #[inline]
    pub fn is_missing(&self, x: VertexId, color: Color) -> bool {
        self.slots[self.slot(x, color)] == NO_EDGE
    }

    /// Colors missing at `x`, ascending. O(q).
    pub fn missing_colors(&self, x: VertexId) -> impl Iterator<Item = Color> + '_ {
        (1..=self.q).filter(move |&c| self.is_missing(x, c))
    }

    fn check_color(&self, color: Color) -> Result<(), ColoringError> {
        if color == BLANK || color > self.q {
            Err(ColoringError::ColorOutOfRange { color, q: self.q })
        } else {
            Ok(())
        }
    }

    /// Colors the blank edge `e` with `color`, which must be missing at
    /// both endpoints.
    pub fn set_color(&mut self, e: EdgeId, color: Color) -> Result<(), ColoringError> {
        if e as usize >= self.color_of.len() {
            return Err(ColoringError::UnknownEdge(e));
        }
        self.check_color(color)?;
        if self.color_of[e as usize] != BLANK {
            return Err(ColoringError::AlreadyColored(e));
        }
        let (u, v) = self.graph.endpoints(e);
        for vertex in [u, v] {
            if !self.is_missing(vertex, color) {
                return Err(ColoringError::NotMissing {
                    edge: e,
                    color,
                    vertex,
                });
            }
        }
        let (su, sv) = (self.slot(u, color), self.slot(v, color));
        self.slots[su] = e;
        self.slots[sv] = e;
        self.color_of[e as usize] = color;
        self.colored += 1;
        self.version += 1;
        Ok(())
    }

    /// Uncolors `e`, returning its previous color.
    pub fn unset_color(&mut self, e: EdgeId) -> Result<Color, ColoringError> {
        if e as usize >= self.color_of.len() {
            return Err(ColoringError::UnknownEdge(e));
        }
        let color = self.color_of[e as usize];
        if color == BLANK {
            return Err(ColoringError::AlreadyBlank(e));
        }
        let (u, v) = self.graph.endpoints(e);
        let (su, sv) = (self.slot(u, color), self.slot(v, color));
        self.slots[su] = NO_EDGE;
        self.slots[sv] = NO_EDGE;
        self.color_of[e as usize] = BLANK;
        self.colored -= 1;
        self.version += 1;
        Ok(color)
    }

    /// Rebuilds the missing index from the edge colors alone and compares
    /// it with the maintained one.
    pub fn index_consistent(&self) -> bool {
        let mut rebuilt = vec![NO_EDGE; self.slots.len()];
        for (e, &color) in self.color_of.iter().enumerate() {
            if color == BLANK {
                continue;
            }
            if color > self.q {
                return false;
            }
            let (u, v) = self.graph.endpoints(e as EdgeId);
            for x in [u, v] {
                let s = self.slot(x, color);
                if rebuilt[s] != NO_EDGE {
                    return false;
                }
                rebuilt[s] = e as EdgeId;
            }
        }
        rebuilt == self.slots
    }
}
