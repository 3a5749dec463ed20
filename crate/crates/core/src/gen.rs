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

//! Seeded random graph generators.

use std::collections::HashSet;

use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("edge probability {0} is outside [0,1]")]
    Probability(f64),
    #[error("degree {d} must be below n = {n}")]
    DegreeTooLarge { n: usize, d: usize },
    #[error("n * d = {0} must be even")]
    OddStubs(usize),
    #[error("pairing got stuck in all {0} attempts")]
    PairingFailed(usize),
}

/// Erdős–Rényi `G(n, p)`: each unordered pair independently with probability `p`.
pub fn gen_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::Probability(p));
    }
    let mut edges = Vec::new();
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges).expect("generated pairs are simple"))
}

const PAIRING_ATTEMPTS: usize = 200;
const RANDOM_TRIES: usize = 64;

/// `d`-regular simple graph from the configuration model: stubs are paired
/// at random, rejecting loops and repeated pairs, restarting when the
/// remaining stubs admit no legal pair.
pub fn gen_near_regular<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    rng: &mut R,
) -> Result<Graph, GenError> {
    if d == 0 {
        return Ok(Graph::new(n, &[]).unwrap());
    }
    if d >= n {
        return Err(GenError::DegreeTooLarge { n, d });
    }
    if !(n * d).is_multiple_of(2) {
        return Err(GenError::OddStubs(n * d));
    }
    for _ in 0..PAIRING_ATTEMPTS {
        if let Some(edges) = try_pairing(n, d, rng) {
            return Ok(Graph::new(n, &edges).expect("pairing rejects loops and duplicates"));
        }
    }
    Err(GenError::PairingFailed(PAIRING_ATTEMPTS))
}

fn try_pairing<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    rng: &mut R,
) -> Option<Vec<(VertexId, VertexId)>> {
    let mut stubs: Vec<VertexId> = (0..n as VertexId)
        .flat_map(|v| std::iter::repeat_n(v, d))
        .collect();
    let mut seen: HashSet<(VertexId, VertexId)> = HashSet::with_capacity(n * d / 2);
    let mut edges = Vec::with_capacity(n * d / 2);
    let legal = |seen: &HashSet<_>, u: VertexId, v: VertexId| {
        u != v && !seen.contains(&(u.min(v), u.max(v)))
    };

    while !stubs.is_empty() {
        let len = stubs.len();
        let mut pick = None;
        for _ in 0..RANDOM_TRIES {
            let i = rng.random_range(0..len);
            let j = rng.random_range(0..len);
            if i != j && legal(&seen, stubs[i], stubs[j]) {
                pick = Some((i, j));
                break;
            }
        }
        if pick.is_none() {
            // Exhaustive scan in a random rotation, so the fallback does not
            // favor low indices.
            let off = rng.random_range(0..len);
            'scan: for a in 0..len {
                let i = (a + off) % len;
                for j in i + 1..len {
                    if legal(&seen, stubs[i], stubs[j]) {
                        pick = Some((i, j));
                        break 'scan;
                    }
                }
            }
        }
        let (i, j) = pick?;
        let (u, v) = (stubs[i], stubs[j]);
        seen.insert((u.min(v), u.max(v)));
        edges.push((u, v));
        let (hi, lo) = if i > j { (i, j) } else { (j, i) };
        stubs.swap_remove(hi);
        stubs.swap_remove(lo);
    }
    Some(edges)
}
