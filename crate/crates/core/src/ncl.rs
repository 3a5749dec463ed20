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

//! The two-stage `(1+ε)Δ` edge coloring.
//!
//! Stage 1 colors edges one at a time with palette `q1 = ⌊(1+ε/2)Δ⌋`. Each
//! iteration picks a uniformly random edge from the pool of uncolored,
//! unflagged edges and a random endpoint as pivot, samples `κ` colors with
//! replacement, builds a Vizing chain with path cap `ℓ` and applies it.
//! Paths that reach the cap are cut at a random edge, which is left blank
//! ("flagged"). Stage 2 colors the flagged edges greedily with `3Δ*`
//! fresh colors offset by `q1`, provided `Δ* <= εΔ/6`.
//!
//! Random draws per iteration, in order: pool index, endpoint bit, `κ`
//! palette colors, then the truncation point if the path hit the cap.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use log::warn;
use rand::Rng;
use thiserror::Error;

use crate::chains::{augment, vizing_chain, ChainError, ChainFailure, ChainOutcome};
use crate::coloring::{Color, ColoringError, PartialColoring, BLANK};
use crate::graph::{EdgeId, Graph};
use crate::greedy::{greedy_color, GreedyError, GreedyReport};
use crate::rng;
use crate::verify::{palette_report, verify_proper};

/// Degree threshold multiplier of the regime check `Δ >= 500 ln n / ε`.
pub const REGIME_CONSTANT: f64 = 500.0;
pub const DEFAULT_CONSTANT: f64 = 50.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("epsilon must lie in (0,1), got {0}")]
    Epsilon(f64),
    #[error("{name} must be at least 1, got {value}")]
    Constant { name: &'static str, value: f64 },
    #[error("{0} override must be at least 1")]
    Override(&'static str),
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(
        "max degree {delta} is below the regime threshold {threshold:.1} (500 ln n / eps); pass force to run anyway"
    )]
    Regime { delta: usize, threshold: f64 },
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Greedy(#[from] GreedyError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("invariant violated after iteration {iteration}: {detail}")]
    Invariant { iteration: usize, detail: String },
    #[error("trace output: {0}")]
    Trace(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub epsilon: f64,
    pub kappa_const: f64,
    pub ell_const: f64,
    pub kappa_override: Option<usize>,
    pub ell_override: Option<usize>,
    pub seed: u64,
    /// Run even when the max degree is below the regime threshold.
    pub force: bool,
    /// Rescan properness and the missing index after every iteration.
    pub debug_check: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            epsilon: 0.5,
            kappa_const: DEFAULT_CONSTANT,
            ell_const: DEFAULT_CONSTANT,
            kappa_override: None,
            ell_override: None,
            seed: 0,
            force: false,
            debug_check: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(ConfigError::Epsilon(self.epsilon));
        }
        for (name, value) in [
            ("kappa_const", self.kappa_const),
            ("ell_const", self.ell_const),
        ] {
            if value.is_nan() || value < 1.0 {
                return Err(ConfigError::Constant { name, value });
            }
        }
        if self.kappa_override == Some(0) {
            return Err(ConfigError::Override("kappa"));
        }
        if self.ell_override == Some(0) {
            return Err(ConfigError::Override("ell"));
        }
        Ok(())
    }

    /// One-line `key=value` echo of every setting.
    pub fn describe(&self) -> String {
        let opt = |v: Option<usize>| v.map_or_else(|| "auto".to_string(), |v| v.to_string());
        format!(
            "epsilon={} kappa_const={} ell_const={} kappa={} ell={} seed={} force={} debug_check={}",
            self.epsilon,
            self.kappa_const,
            self.ell_const,
            opt(self.kappa_override),
            opt(self.ell_override),
            self.seed,
            self.force,
            self.debug_check
        )
    }
}

/// Resolved per-graph parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    /// Stage-1 palette `⌊(1+ε/2)Δ⌋` (at least 1).
    pub q1: u32,
    pub kappa: usize,
    pub ell: usize,
    /// `500 ln n / ε`.
    pub regime_threshold: f64,
    pub in_regime: bool,
    pub warnings: Vec<String>,
}

/// `⌈c · ln n / ε⌉`, at least 1.
pub fn kappa_for(ln_n: f64, epsilon: f64, constant: f64) -> usize {
    ((constant * ln_n / epsilon).ceil() as usize).max(1)
}

/// `⌈c · κ² · ln n / ε⌉`, at least 1.
pub fn ell_for(kappa: usize, ln_n: f64, epsilon: f64, constant: f64) -> usize {
    let k = kappa as f64;
    ((constant * k * k * ln_n / epsilon).ceil() as usize).max(1)
}

/// `⌊(1+ε/2)Δ⌋`.
pub fn stage1_palette(delta: usize, epsilon: f64) -> u32 {
    ((1.0 + epsilon / 2.0) * delta as f64).floor() as u32
}

pub fn resolve_params(g: &Graph, cfg: &RunConfig) -> Result<Params, RunError> {
    cfg.validate()?;
    let ln_n = (g.vertex_count().max(2) as f64).ln();
    let delta = g.max_degree();
    let mut warnings = Vec::new();

    let kappa = match cfg.kappa_override {
        Some(k) => k,
        None => kappa_for(ln_n, cfg.epsilon, cfg.kappa_const),
    };
    let ell = match cfg.ell_override {
        Some(l) => l,
        None => ell_for(kappa, ln_n, cfg.epsilon, cfg.ell_const),
    };
    if cfg.kappa_override.is_some() || cfg.ell_override.is_some() {
        warnings.push(format!(
            "explicit kappa={kappa} ell={ell}: probabilistic guarantees are void"
        ));
    }

    let regime_threshold = REGIME_CONSTANT * ln_n / cfg.epsilon;
    let in_regime = delta as f64 >= regime_threshold;
    // An edgeless graph has nothing to color, so the regime is moot.
    if !in_regime && g.edge_count() > 0 {
        if !cfg.force {
            return Err(RunError::Regime {
                delta,
                threshold: regime_threshold,
            });
        }
        warnings.push(format!(
            "max degree {delta} below regime threshold {regime_threshold:.1}: guarantees are void"
        ));
    }
    for w in &warnings {
        warn!("{w}");
    }
    Ok(Params {
        q1: stage1_palette(delta, cfg.epsilon).max(1),
        kappa,
        ell,
        regime_threshold,
        in_regime,
        warnings,
    })
}

/// `κ` uniform draws from `1..=q1`, deduplicated and sorted.
pub fn sample_palette<R: Rng + ?Sized>(q1: u32, kappa: usize, rng: &mut R) -> Vec<Color> {
    let mut colors: Vec<Color> = (0..kappa).map(|_| rng.random_range(1..=q1)).collect();
    colors.sort_unstable();
    colors.dedup();
    colors
}

/// Edge ids with O(1) uniform sampling and removal.
#[derive(Debug, Clone)]
pub struct UncoloredPool {
    members: Vec<EdgeId>,
    position: Vec<u32>,
}

const NOT_IN_POOL: u32 = u32::MAX;

impl UncoloredPool {
    /// Pool containing every edge `0..m`.
    pub fn full(m: usize) -> Self {
        UncoloredPool {
            members: (0..m as EdgeId).collect(),
            position: (0..m as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.position[e as usize] != NOT_IN_POOL
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<EdgeId> {
        if self.members.is_empty() {
            None
        } else {
            Some(self.members[rng.random_range(0..self.members.len())])
        }
    }

    /// Returns whether `e` was present.
    pub fn remove(&mut self, e: EdgeId) -> bool {
        let pos = self.position[e as usize];
        if pos == NOT_IN_POOL {
            return false;
        }
        let last = *self.members.last().unwrap();
        self.members.swap_remove(pos as usize);
        if last != e {
            self.position[last as usize] = pos;
        }
        self.position[e as usize] = NOT_IN_POOL;
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailReason {
    Stage1Fan,
    Stage1Beta,
    Stage2Degree,
}

impl fmt::Display for FailReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailReason::Stage1Fan => "stage1-fan",
            FailReason::Stage1Beta => "stage1-beta",
            FailReason::Stage2Degree => "stage2-degree",
        })
    }
}

impl From<ChainFailure> for FailReason {
    fn from(f: ChainFailure) -> Self {
        match f {
            ChainFailure::Fan => FailReason::Stage1Fan,
            ChainFailure::Beta => FailReason::Stage1Beta,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunStats {
    pub iterations: usize,
    /// Edges uncolored at truncation points, in iteration order.
    pub flagged_edges: Vec<EdgeId>,
    /// Degree of each vertex in the residual graph.
    pub residual_degrees: Vec<usize>,
    pub max_residual_degree: usize,
    pub stage1_colors: usize,
    pub total_colors: usize,
    pub max_color: Option<Color>,
    pub fail_reason: Option<FailReason>,
    pub stage1_millis: f64,
    pub stage2_millis: f64,
    pub greedy: Option<GreedyReport>,
    /// Rescans performed with `debug_check`.
    pub debug_checks: usize,
}

impl RunStats {
    pub fn success(&self) -> bool {
        self.fail_reason.is_none()
    }
}

/// Stage-1 state at loop exit (complete or failed).
#[derive(Debug)]
pub struct Stage1<'g> {
    pub coloring: PartialColoring<'g>,
    pub stats: RunStats,
}

/// Runs the Stage-1 loop. On a chain failure the partial coloring at that
/// point is returned with `stats.fail_reason` set.
pub fn stage1<'g, R: Rng + ?Sized>(
    g: &'g Graph,
    cfg: &RunConfig,
    params: &Params,
    rng: &mut R,
    mut trace: Option<&mut dyn Write>,
) -> Result<Stage1<'g>, RunError> {
    let m = g.edge_count();
    let mut c = PartialColoring::new(g, params.q1)?;
    let mut pool = UncoloredPool::full(m);
    let mut stats = RunStats::default();

    while let Some(e) = pool.sample(rng) {
        let i = stats.iterations + 1;
        debug_assert_eq!(pool.len(), m - i + 1);
        let (a, b) = g.endpoints(e);
        let x = if rng.random::<bool>() { b } else { a };
        let palette = sample_palette(params.q1, params.kappa, rng);
        let chain = match vizing_chain(&c, e, x, &palette, params.ell)? {
            ChainOutcome::Built(chain) => chain,
            ChainOutcome::Fail(why) => {
                stats.fail_reason = Some(why.into());
                break;
            }
        };
        let out = augment(&mut c, &chain, params.ell, rng)?;
        pool.remove(e);
        stats.iterations = i;
        if let Some(f) = out.flagged {
            stats.flagged_edges.push(f);
        }
        if let Some(w) = trace.as_deref_mut() {
            let flagged = out
                .flagged
                .map_or_else(|| "none".to_string(), |f| f.to_string());
            writeln!(
                w,
                "iter={i} pivot={x} fan_len={} path_len={} flagged={flagged} case={}",
                out.fan_len, out.path_len, out.case
            )?;
        }
        if cfg.debug_check {
            check_stage1_state(&c, &pool, &stats, i)?;
            stats.debug_checks += 1;
        }
    }
    stats.stage1_colors = palette_report(c.colors()).distinct;
    Ok(Stage1 { coloring: c, stats })
}

fn check_stage1_state(
    c: &PartialColoring<'_>,
    pool: &UncoloredPool,
    stats: &RunStats,
    iteration: usize,
) -> Result<(), RunError> {
    let fail = |detail: String| RunError::Invariant { iteration, detail };
    let g = c.graph();
    if let Err(v) = verify_proper(g, c.colors(), false) {
        return Err(fail(v.to_string()));
    }
    if !c.index_consistent() {
        return Err(fail(
            "missing-color index disagrees with edge colors".into(),
        ));
    }
    if pool.len() != g.edge_count() - iteration {
        return Err(fail(format!("pool holds {} edges", pool.len())));
    }
    // Blank edges are exactly the pool plus the flagged edges.
    let blank = c.blank_count();
    let expected = pool.len() + stats.flagged_edges.len();
    if blank != expected {
        return Err(fail(format!("{blank} blank edges, expected {expected}")));
    }
    if stats
        .flagged_edges
        .iter()
        .any(|&f| c.color(f).is_some() || pool.contains(f))
    {
        return Err(fail("flagged edge is colored or still pooled".into()));
    }
    Ok(())
}

/// The blank edges of a coloring as a graph on the same vertices.
#[derive(Debug, Clone)]
pub struct ResidualGraph {
    pub graph: Graph,
    /// Edge id in the parent graph for each residual edge.
    pub parent_edges: Vec<EdgeId>,
}

pub fn residual_subgraph(g: &Graph, colors: &[Color]) -> ResidualGraph {
    let parent_edges: Vec<EdgeId> = colors
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c == BLANK)
        .map(|(e, _)| e as EdgeId)
        .collect();
    ResidualGraph {
        graph: g.edge_subgraph(&parent_edges),
        parent_edges,
    }
}

/// Final result of [`edge_color`]. On failure `colors` holds the partial
/// coloring reached and `stats.fail_reason` says why.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub colors: Vec<Color>,
    pub params: Params,
    pub stats: RunStats,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub epsilon: f64,
    pub seed: u64,
}

impl RunReport {
    pub fn success(&self) -> bool {
        self.stats.success()
    }

    pub fn csv_row(&self) -> String {
        let s = &self.stats;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{:.3},{:.3}",
            self.n,
            self.m,
            self.delta,
            self.epsilon,
            self.params.kappa,
            self.params.ell,
            self.seed,
            self.success(),
            s.fail_reason
                .map_or_else(|| "none".to_string(), |r| r.to_string()),
            s.stage1_colors,
            s.flagged_edges.len(),
            s.max_residual_degree,
            s.total_colors,
            s.stage1_millis,
            s.stage2_millis
        )
    }
}

pub const CSV_HEADER: &str = "n,m,delta,epsilon,kappa,ell,seed,success,fail_reason,stage1_colors,flagged,max_residual_degree,total_colors,stage1_millis,stage2_millis";

/// Colors `g` with at most `⌊(1+ε)Δ⌋` colors, or reports why it failed.
pub fn edge_color(g: &Graph, cfg: &RunConfig) -> Result<RunReport, RunError> {
    edge_color_traced(g, cfg, None)
}

/// [`edge_color`] writing one trace line per Stage-1 iteration.
pub fn edge_color_traced(
    g: &Graph,
    cfg: &RunConfig,
    trace: Option<&mut dyn Write>,
) -> Result<RunReport, RunError> {
    let params = resolve_params(g, cfg)?;
    let mut rng = rng::stream(cfg.seed, rng::RUN_STREAM);
    let delta = g.max_degree();

    let started = Instant::now();
    let Stage1 {
        coloring,
        mut stats,
    } = stage1(g, cfg, &params, &mut rng, trace)?;
    stats.stage1_millis = started.elapsed().as_secs_f64() * 1e3;

    let mut colors = coloring.into_colors();
    let mut report = RunReport {
        colors: Vec::new(),
        params,
        stats,
        n: g.vertex_count(),
        m: g.edge_count(),
        delta,
        epsilon: cfg.epsilon,
        seed: cfg.seed,
    };
    if report.stats.fail_reason.is_some() {
        report.stats.total_colors = palette_report(&colors).distinct;
        report.colors = colors;
        return Ok(report);
    }

    let started = Instant::now();
    let residual = residual_subgraph(g, &colors);
    let res_delta = residual.graph.max_degree();
    report.stats.residual_degrees = (0..g.vertex_count() as u32)
        .map(|v| residual.graph.degree(v))
        .collect();
    report.stats.max_residual_degree = res_delta;

    if res_delta as f64 > cfg.epsilon * delta as f64 / 6.0 {
        report.stats.fail_reason = Some(FailReason::Stage2Degree);
    } else if res_delta > 0 {
        let q2 = 3 * res_delta as u32;
        let (psi, greedy) = greedy_color(&residual.graph, q2, &mut rng)?;
        let offset = stage1_palette(delta, cfg.epsilon);
        for (&parent, &col) in residual.parent_edges.iter().zip(psi.colors()) {
            colors[parent as usize] = col + offset;
        }
        report.stats.greedy = Some(greedy);
    }
    report.stats.stage2_millis = started.elapsed().as_secs_f64() * 1e3;

    let palette = palette_report(&colors);
    report.stats.total_colors = palette.distinct;
    report.stats.max_color = palette.max_color;
    report.colors = colors;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    fn forced(epsilon: f64, kappa: usize, ell: usize, seed: u64) -> RunConfig {
        RunConfig {
            epsilon,
            kappa_override: Some(kappa),
            ell_override: Some(ell),
            seed,
            force: true,
            ..RunConfig::default()
        }
    }

    #[test]
    fn kappa_formula() {
        assert_eq!(kappa_for(4.0, 0.5, 50.0), 400);
        // ln 55 is slightly above 4.
        let g = Graph::new(55, &[]).unwrap();
        let p = resolve_params(&g, &RunConfig::default()).unwrap();
        assert_eq!(p.kappa, 401);
        assert_eq!(p.ell, ell_for(401, (55f64).ln(), 0.5, 50.0));
    }

    #[test]
    fn overrides_pass_through_with_warning() {
        let g = Graph::new(4, &[(0, 1)]).unwrap();
        let p = resolve_params(&g, &forced(0.5, 10, 100, 0)).unwrap();
        assert_eq!((p.kappa, p.ell), (10, 100));
        assert!(p.warnings.iter().any(|w| w.contains("void")));
    }

    #[test]
    fn regime_rejection() {
        // Star with Δ=10 on 1000 vertices.
        let edges: Vec<_> = (1..=10).map(|v| (0, v)).collect();
        let g = Graph::new(1000, &edges).unwrap();
        let cfg = RunConfig::default();
        match resolve_params(&g, &cfg) {
            Err(RunError::Regime { delta, threshold }) => {
                assert_eq!(delta, 10);
                assert!((threshold - 500.0 * 1000f64.ln() / 0.5).abs() < 1e-9);
                assert!((threshold - 6907.755).abs() < 1e-3);
            }
            other => panic!("unexpected {other:?}"),
        }
        let p = resolve_params(&g, &RunConfig { force: true, ..cfg }).unwrap();
        assert!(!p.in_regime);
        assert_eq!(p.q1, 12);
    }

    #[test]
    fn config_validation() {
        for eps in [0.0, 1.0, -0.1, f64::NAN] {
            let cfg = RunConfig {
                epsilon: eps,
                ..RunConfig::default()
            };
            assert!(matches!(cfg.validate(), Err(ConfigError::Epsilon(_))));
        }
        let cfg = RunConfig {
            kappa_const: 0.5,
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = RunConfig {
            ell_override: Some(0),
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn palette_single_color() {
        assert_eq!(sample_palette(1, 5, &mut seeded(0)), vec![1]);
    }

    #[test]
    fn palette_replay() {
        let a = sample_palette(3, 2, &mut seeded(11));
        let b = sample_palette(3, 2, &mut seeded(11));
        assert_eq!(a, b);
        assert!(!a.is_empty() && a.len() <= 2);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn pool_swap_remove() {
        let mut pool = UncoloredPool::full(4);
        assert!(pool.remove(1));
        assert!(!pool.remove(1));
        assert!(pool.remove(3));
        assert_eq!(pool.len(), 2);
        assert!(pool.contains(0) && pool.contains(2));
        let mut rng = seeded(0);
        for _ in 0..20 {
            let e = pool.sample(&mut rng).unwrap();
            assert!(e == 0 || e == 2);
        }
        pool.remove(0);
        pool.remove(2);
        assert!(pool.is_empty());
        assert_eq!(pool.sample(&mut rng), None);
    }

    #[test]
    fn empty_graph_succeeds_without_force() {
        let g = Graph::new(5, &[]).unwrap();
        let r = edge_color(&g, &RunConfig::default()).unwrap();
        assert!(r.success());
        assert!(r.colors.is_empty());
        assert_eq!(r.stats.iterations, 0);
    }

    #[test]
    fn single_edge_takes_min_sampled_color() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let cfg = forced(0.5, 3, 5, 9);
        let params = resolve_params(&g, &cfg).unwrap();
        let mut rng = rng::stream(cfg.seed, rng::RUN_STREAM);
        let s1 = stage1(&g, &cfg, &params, &mut rng, None).unwrap();
        assert_eq!(s1.stats.iterations, 1);
        assert!(s1.stats.flagged_edges.is_empty());
        // Replay the draws: edge index, endpoint bit, palette.
        let mut replay = rng::stream(cfg.seed, rng::RUN_STREAM);
        let _: usize = replay.random_range(0..1);
        let _: bool = replay.random();
        let palette = sample_palette(params.q1, params.kappa, &mut replay);
        assert_eq!(s1.coloring.colors(), &[palette[0]]);
    }

    #[test]
    fn star_gets_distinct_colors() {
        let edges: Vec<_> = (1..=5).map(|v| (0, v)).collect();
        let g = Graph::new(6, &edges).unwrap();
        for seed in 0..30 {
            let r = edge_color(&g, &forced(0.9, 9, 4, seed)).unwrap();
            if !r.success() {
                continue;
            }
            assert_eq!(verify_proper(&g, &r.colors, true), Ok(()));
            assert!(r.stats.max_color.unwrap() <= 9);
        }
    }

    #[test]
    fn k4_debug_checked() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let mut cfg = forced(0.9, 0, 50, 7);
        cfg.debug_check = true;
        let q1 = stage1_palette(3, 0.9);
        cfg.kappa_override = Some(q1 as usize);
        let params = resolve_params(&g, &cfg).unwrap();
        let mut rng = rng::stream(cfg.seed, rng::RUN_STREAM);
        let s1 = stage1(&g, &cfg, &params, &mut rng, None).unwrap();
        assert_eq!(verify_proper(&g, s1.coloring.colors(), false), Ok(()));
        if s1.stats.success() {
            assert_eq!(s1.stats.iterations, 6);
            assert_eq!(s1.stats.debug_checks, 6);
        }
    }

    #[test]
    fn residual_of_full_and_blank() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let full = residual_subgraph(&g, &[1, 2, 3]);
        assert_eq!(full.graph.edge_count(), 0);
        assert_eq!(full.graph.max_degree(), 0);
        let blank = residual_subgraph(&g, &[0, 0, 0]);
        assert_eq!(blank.graph.edges(), g.edges());
        assert_eq!(blank.parent_edges, vec![0, 1, 2]);
    }

    #[test]
    fn trace_lines() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let mut buf = Vec::new();
        let r = edge_color_traced(&g, &forced(0.9, 3, 5, 1), Some(&mut buf)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), r.stats.iterations);
        let first = text.lines().next().unwrap();
        assert!(first.starts_with("iter=1 pivot="));
        assert!(first.contains(" case="));
    }

    #[test]
    fn csv_row_shape() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let r = edge_color(&g, &forced(0.5, 4, 4, 2)).unwrap();
        assert_eq!(
            r.csv_row().split(',').count(),
            CSV_HEADER.split(',').count()
        );
    }
}
