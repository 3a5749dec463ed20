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

//! Random small instances shared by the integration tests.

#![allow(dead_code)]

use nearviz::gen::gen_gnp;
use nearviz::{Color, EdgeId, Graph, PartialColoring, VertexId, BLANK};
use rand::seq::SliceRandom;
use rand::Rng;

/// A graph, a proper partial coloring with at least one blank edge, and a
/// chain request against it.
pub struct Instance {
    pub graph: Graph,
    pub q: u32,
    pub colors: Vec<Color>,
    pub edge: EdgeId,
    pub pivot: VertexId,
    pub palette: Vec<Color>,
}

impl Instance {
    pub fn coloring(&self) -> PartialColoring<'_> {
        PartialColoring::from_colors(&self.graph, self.q, &self.colors).unwrap()
    }
}

/// Proper partial coloring: edges in random order, each given a random
/// color free at both ends with probability `fill`, else left blank.
pub fn random_partial<R: Rng>(g: &Graph, q: u32, fill: f64, rng: &mut R) -> Vec<Color> {
    let mut c = PartialColoring::new(g, q).unwrap();
    let mut order: Vec<EdgeId> = (0..g.edge_count() as EdgeId).collect();
    order.shuffle(rng);
    for e in order {
        if !rng.random_bool(fill) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        let free: Vec<Color> = (1..=q)
            .filter(|&a| c.is_missing(u, a) && c.is_missing(v, a))
            .collect();
        if let Some(&a) = free.get(rng.random_range(0..free.len().max(1))) {
            c.set_color(e, a).unwrap();
        }
    }
    c.into_colors()
}

/// Random instance on at most `max_n` vertices with a tight palette so
/// that fans and alternating paths are non-trivial.
pub fn random_instance<R: Rng>(max_n: usize, rng: &mut R) -> Instance {
    loop {
        let n = rng.random_range(4..=max_n);
        let p = rng.random_range(0.15..0.7);
        let graph = gen_gnp(n, p, rng).unwrap();
        if graph.edge_count() == 0 {
            continue;
        }
        let delta = graph.max_degree() as u32;
        let q = delta + rng.random_range(0..=2);
        let fill = rng.random_range(0.6..1.0);
        let mut colors = random_partial(&graph, q, fill, rng);
        let blanks: Vec<usize> = (0..colors.len()).filter(|&e| colors[e] == BLANK).collect();
        let edge = match blanks.len() {
            0 => {
                let e = rng.random_range(0..colors.len());
                colors[e] = BLANK;
                e
            }
            k => blanks[rng.random_range(0..k)],
        } as EdgeId;
        let (u, v) = graph.endpoints(edge);
        let pivot = if rng.random::<bool>() { v } else { u };
        let kappa = rng.random_range(1..=q as usize + 2);
        let palette = nearviz::sample_palette(q, kappa, rng);
        return Instance {
            graph,
            q,
            colors,
            edge,
            pivot,
            palette,
        };
    }
}

/// Colors missing at `x`, recomputed from the edge colors.
pub fn scan_missing(g: &Graph, colors: &[Color], x: VertexId, a: Color) -> bool {
    g.neighbors(x).iter().all(|&(_, e)| colors[e as usize] != a)
}

/// The 4-vertex star x=0, y0=1, y1=2, y2=3 with xy1=1, xy2=2, extended by
/// a path hanging off y1 so the 1/3 alternating path from x has `len` edges.
pub fn long_path_instance(len: usize) -> (Graph, Vec<Color>) {
    assert!(len >= 1);
    let mut edges = vec![(0, 1), (0, 2), (0, 3)];
    let mut colors = vec![BLANK, 1, 2];
    let mut prev = 2u32;
    let mut next = 4u32;
    for i in 1..len {
        edges.push((prev, next));
        colors.push(if i % 2 == 1 { 3 } else { 1 });
        prev = next;
        next += 1;
    }
    (Graph::new(next as usize, &edges).unwrap(), colors)
}
