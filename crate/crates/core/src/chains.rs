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

//! Fans, alternating paths and the single-chain augmentation step.
//!
//! A [`Fan`] at pivot `x` is a sequence of distinct neighbors `y_0..y_{k-1}`
//! with `xy_0` uncolored and the color of `xy_i` missing at `y_{i-1}`.
//! Shifting it moves every color one edge towards `y_0` and leaves
//! `xy_{k-1}` blank. An [`AlternatingPath`] walks edges colored `α, β, α, ...`;
//! flipping a maximal one swaps the two colors. A [`VizingChain`] is a fan
//! plus a path rooted at the pivot, and [`augment`] uses it to color one
//! more edge, truncating over-long paths and flagging the cut edge.

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::coloring::{Color, ColoringError, PartialColoring};
use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("edge {0} is not blank")]
    EdgeNotBlank(EdgeId),
    #[error("vertex {vertex} is not an endpoint of edge {edge}")]
    NotAnEndpoint { edge: EdgeId, vertex: VertexId },
    #[error("color set must be non-empty, strictly ascending and within 1..=q")]
    BadColorSet,
    #[error("path cap must be at least 1")]
    BadPathCap,
    #[error("fan is not valid under the current coloring")]
    InvalidFan,
    #[error("path is not a valid alternating path under the current coloring")]
    InvalidPath,
    #[error("alternating path is not maximal")]
    NotMaximal,
    #[error("chain was built against coloring version {built}, current is {current}")]
    StaleChain { built: u64, current: u64 },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Pivot plus ordered leaves; `edges[i]` joins the pivot to `leaves[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub pivot: VertexId,
    pub leaves: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Fan {
    /// Number of leaves `k`.
    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    /// The fan restricted to its first `len` leaves.
    pub fn prefix(&self, len: usize) -> Fan {
        Fan {
            pivot: self.pivot,
            leaves: self.leaves[..len].to_vec(),
            edges: self.edges[..len].to_vec(),
        }
    }

    pub fn is_valid(&self, c: &PartialColoring<'_>) -> bool {
        let g = c.graph();
        if self.leaves.is_empty() || self.leaves.len() != self.edges.len() {
            return false;
        }
        for (i, (&y, &e)) in self.leaves.iter().zip(&self.edges).enumerate() {
            if e as usize >= g.edge_count() || g.opposite(e, self.pivot) != y || y == self.pivot {
                return false;
            }
            let (a, b) = g.endpoints(e);
            if a != self.pivot && b != self.pivot {
                return false;
            }
            match (i, c.color(e)) {
                (0, None) => {}
                (0, Some(_)) | (_, None) => return false,
                (_, Some(col)) => {
                    if !c.is_missing(self.leaves[i - 1], col) {
                        return false;
                    }
                }
            }
        }
        let mut sorted = self.leaves.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

/// Vertices `x_0..x_s` joined by `edges`, colored `alpha, beta, alpha, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingPath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub alpha: Color,
    pub beta: Color,
}

impl AlternatingPath {
    /// Number of edges `s`.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    /// The first `len` edges of the path.
    pub fn prefix(&self, len: usize) -> AlternatingPath {
        AlternatingPath {
            vertices: self.vertices[..=len].to_vec(),
            edges: self.edges[..len].to_vec(),
            alpha: self.alpha,
            beta: self.beta,
        }
    }

    fn color_at(&self, i: usize) -> Color {
        if i.is_multiple_of(2) {
            self.alpha
        } else {
            self.beta
        }
    }

    pub fn is_valid(&self, c: &PartialColoring<'_>) -> bool {
        let g = c.graph();
        if self.vertices.len() != self.edges.len() + 1
            || (!self.is_empty() && self.alpha == self.beta)
        {
            return false;
        }
        for (i, &e) in self.edges.iter().enumerate() {
            if e as usize >= g.edge_count() {
                return false;
            }
            let (a, b) = g.endpoints(e);
            let (u, v) = (self.vertices[i], self.vertices[i + 1]);
            if !((a == u && b == v) || (a == v && b == u)) || c.color(e) != Some(self.color_at(i)) {
                return false;
            }
        }
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// Neither end can be extended by an edge of the other color.
    pub fn is_maximal(&self, c: &PartialColoring<'_>) -> bool {
        let s = self.len();
        if s == 0 {
            return c.is_missing(self.start(), self.alpha) || c.is_missing(self.start(), self.beta);
        }
        c.is_missing(self.start(), self.color_at(1)) && c.is_missing(self.end(), self.color_at(s))
    }
}

/// Successful fan construction: `alpha` is missing at `y_{k-1}` and `y_{j-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanResult {
    pub fan: Fan,
    pub alpha: Color,
    /// 1-based, `1 <= j <= k`. `j == k` means `alpha` is also missing at the pivot.
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FanOutcome {
    Built(FanResult),
    /// Some leaf has no missing color in the sampled set.
    Fail,
}

/// Which check stopped a chain construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainFailure {
    /// A fan leaf has no missing color in the sampled set.
    Fan,
    /// The pivot has no missing color in the sampled set.
    Beta,
}

/// A fan and an alternating path starting at its pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VizingChain {
    pub fan: Fan,
    pub path: AlternatingPath,
    pub alpha: Color,
    pub j: usize,
    version: u64,
}

impl VizingChain {
    /// Coloring version this chain was built against.
    pub fn built_at(&self) -> u64 {
        self.version
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainOutcome {
    Built(VizingChain),
    Fail(ChainFailure),
}

/// Which branch of the augmentation ran.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AugmentCase {
    /// Empty path: shift the fan and color its last edge.
    Happy,
    /// Path shorter than the cap, flipped whole.
    Short { full_fan: bool },
    /// Path hit the cap and was truncated at a random edge.
    Long { full_fan: bool },
}

impl fmt::Display for AugmentCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AugmentCase::Happy => "happy",
            AugmentCase::Short { .. } => "short",
            AugmentCase::Long { full_fan: false } => "long-j",
            AugmentCase::Long { full_fan: true } => "long-k",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentOutcome {
    /// The previously blank edge that is now colored.
    pub colored: EdgeId,
    /// The path edge uncolored at the truncation point, if any.
    pub flagged: Option<EdgeId>,
    pub case: AugmentCase,
    pub fan_len: usize,
    pub path_len: usize,
}

fn check_color_set(c: &PartialColoring<'_>, colors: &[Color]) -> Result<(), ChainError> {
    let q = c.palette();
    let ok = !colors.is_empty()
        && colors[0] >= 1
        && colors[colors.len() - 1] <= q
        && colors.windows(2).all(|w| w[0] < w[1]);
    if ok {
        Ok(())
    } else {
        Err(ChainError::BadColorSet)
    }
}

/// Smallest color of `colors` missing at `z`, with its position in `colors`.
#[inline]
fn first_missing(c: &PartialColoring<'_>, z: VertexId, colors: &[Color]) -> Option<(usize, Color)> {
    colors
        .iter()
        .copied()
        .enumerate()
        .find(|&(_, col)| c.is_missing(z, col))
}

/// Grows a fan at pivot `x` from the blank edge `e`, taking at each leaf the
/// smallest color of `colors` missing there.
///
/// `colors` must be non-empty, strictly ascending and within the palette.
/// At most `|colors|` leaves are appended.
pub fn make_fan(
    c: &PartialColoring<'_>,
    e: EdgeId,
    x: VertexId,
    colors: &[Color],
) -> Result<FanOutcome, ChainError> {
    let g = c.graph();
    if e as usize >= g.edge_count() {
        return Err(ColoringError::UnknownEdge(e).into());
    }
    if c.color(e).is_some() {
        return Err(ChainError::EdgeNotBlank(e));
    }
    let (a, b) = g.endpoints(e);
    if x != a && x != b {
        return Err(ChainError::NotAnEndpoint { edge: e, vertex: x });
    }
    check_color_set(c, colors)?;

    let mut fan = Fan {
        pivot: x,
        leaves: vec![g.opposite(e, x)],
        edges: vec![e],
    };
    // A leaf y_i (i >= 1) is reached through the unique edge at x colored
    // with the i-th eta, so "z is already a leaf" is "eta was used before".
    // Indexed by position in `colors`; holds the leaf index or usize::MAX.
    let mut leaf_by_color = vec![usize::MAX; colors.len()];
    let mut z = fan.leaves[0];
    loop {
        let Some((pos, eta)) = first_missing(c, z, colors) else {
            return Ok(FanOutcome::Fail);
        };
        let Some(edge) = c.edge_with_color(x, eta) else {
            let k = fan.len();
            return Ok(FanOutcome::Built(FanResult {
                fan,
                alpha: eta,
                j: k,
            }));
        };
        if leaf_by_color[pos] != usize::MAX {
            let j = leaf_by_color[pos];
            return Ok(FanOutcome::Built(FanResult { fan, alpha: eta, j }));
        }
        z = g.opposite(edge, x);
        leaf_by_color[pos] = fan.len();
        fan.leaves.push(z);
        fan.edges.push(edge);
    }
}

/// Builds a fan, then (unless `alpha` is already free at the pivot) the
/// alternating path from the pivot in `alpha` and `beta = min M(x) ∩ colors`,
/// cut after `path_cap` edges.
pub fn vizing_chain(
    c: &PartialColoring<'_>,
    e: EdgeId,
    x: VertexId,
    colors: &[Color],
    path_cap: usize,
) -> Result<ChainOutcome, ChainError> {
    if path_cap == 0 {
        return Err(ChainError::BadPathCap);
    }
    let FanResult { fan, alpha, j } = match make_fan(c, e, x, colors)? {
        FanOutcome::Built(r) => r,
        FanOutcome::Fail => return Ok(ChainOutcome::Fail(ChainFailure::Fan)),
    };
    if j == fan.len() {
        return Ok(ChainOutcome::Built(VizingChain {
            fan,
            path: AlternatingPath {
                vertices: vec![x],
                edges: Vec::new(),
                alpha,
                beta: alpha,
            },
            alpha,
            j,
            version: c.version(),
        }));
    }
    let Some((_, beta)) = first_missing(c, x, colors) else {
        return Ok(ChainOutcome::Fail(ChainFailure::Beta));
    };
    let path = walk_path(c, x, alpha, beta, path_cap);
    debug_assert_eq!(path.vertices.get(1), Some(&fan.leaves[j]));
    Ok(ChainOutcome::Built(VizingChain {
        fan,
        path,
        alpha,
        j,
        version: c.version(),
    }))
}

/// Follows `alpha, beta, alpha, ...` edges from `start` for at most `cap` edges.
pub fn walk_path(
    c: &PartialColoring<'_>,
    start: VertexId,
    alpha: Color,
    beta: Color,
    cap: usize,
) -> AlternatingPath {
    let g = c.graph();
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let (mut cur, mut color, mut other) = (start, alpha, beta);
    while edges.len() < cap {
        let Some(e) = c.edge_with_color(cur, color) else {
            break;
        };
        cur = g.opposite(e, cur);
        vertices.push(cur);
        edges.push(e);
        std::mem::swap(&mut color, &mut other);
    }
    debug_assert!({
        let mut seen = std::collections::HashSet::new();
        vertices.iter().all(|v| seen.insert(*v))
    });
    AlternatingPath {
        vertices,
        edges,
        alpha,
        beta,
    }
}

/// Moves the color of `xy_{i+1}` onto `xy_i` for every `i < k-1` and leaves
/// `xy_{k-1}` blank.
pub fn shift_fan(c: &mut PartialColoring<'_>, fan: &Fan) -> Result<(), ChainError> {
    if !fan.is_valid(c) {
        return Err(ChainError::InvalidFan);
    }
    for w in fan.edges.windows(2) {
        let color = c.unset_color(w[1])?;
        c.set_color(w[0], color)?;
    }
    Ok(())
}

/// Swaps `alpha` and `beta` on every edge of a maximal alternating path.
pub fn flip_path(c: &mut PartialColoring<'_>, path: &AlternatingPath) -> Result<(), ChainError> {
    if path.is_empty() {
        return Ok(());
    }
    if !path.is_valid(c) {
        return Err(ChainError::InvalidPath);
    }
    if !path.is_maximal(c) {
        return Err(ChainError::NotMaximal);
    }
    for &e in &path.edges {
        c.unset_color(e)?;
    }
    for (i, &e) in path.edges.iter().enumerate() {
        c.set_color(e, path.color_at(i + 1))?;
    }
    Ok(())
}

/// Applies `chain` to `c`, coloring the chain's blank edge.
///
/// Random draws: one uniform `ℓ' in 1..=path_cap`, only when the path has
/// exactly `path_cap` edges.
pub fn augment<R: Rng + ?Sized>(
    c: &mut PartialColoring<'_>,
    chain: &VizingChain,
    path_cap: usize,
    rng: &mut R,
) -> Result<AugmentOutcome, ChainError> {
    if chain.version != c.version() {
        return Err(ChainError::StaleChain {
            built: chain.version,
            current: c.version(),
        });
    }
    if path_cap == 0 {
        return Err(ChainError::BadPathCap);
    }
    let fan = &chain.fan;
    let k = fan.len();
    let colored = fan.edges[0];
    let s = chain.path.len();
    let mut outcome = AugmentOutcome {
        colored,
        flagged: None,
        case: AugmentCase::Happy,
        fan_len: k,
        path_len: s,
    };
    if s == 0 {
        shift_fan(c, fan)?;
        c.set_color(fan.edges[k - 1], chain.alpha)?;
        return Ok(outcome);
    }

    let long = s >= path_cap;
    let path = if long {
        let cut = rng.random_range(1..=path_cap);
        let edge = chain.path.edges[cut - 1];
        c.unset_color(edge)?;
        outcome.flagged = Some(edge);
        chain.path.prefix(cut - 1)
    } else {
        chain.path.clone()
    };
    flip_path(c, &path)?;

    let j = chain.j;
    let full_fan = path.end() == fan.leaves[j - 1];
    if full_fan {
        shift_fan(c, fan)?;
        c.set_color(fan.edges[k - 1], chain.alpha)?;
    } else {
        shift_fan(c, &fan.prefix(j))?;
        c.set_color(fan.edges[j - 1], chain.alpha)?;
    }
    outcome.case = if long {
        AugmentCase::Long { full_fan }
    } else {
        AugmentCase::Short { full_fan }
    };
    Ok(outcome)
}
