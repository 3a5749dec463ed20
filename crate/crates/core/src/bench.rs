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

//! Benchmark trials: generate a graph, color it, verify, record one CSV row.
//!
//! Trial `t` (global index over all sizes) runs under seed
//! `derive_seed(base_seed, t)`; its graph comes from the graph stream of
//! that seed and its coloring from the run stream. Results therefore do
//! not depend on how trials are scheduled. With the `parallel` feature
//! trials run on a rayon pool; without it they run in order.

use thiserror::Error;

use crate::gen::{gen_gnp, gen_near_regular, GenError};
use crate::ncl::{edge_color, RunConfig, RunError, CSV_HEADER};
use crate::rng::{self, derive_seed};
use crate::verify::verify_proper;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    Gnp { p: f64 },
    Regular { d: usize },
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("benchmark needs at least one size and one trial")]
    EmptySpec,
    #[error("trial {trial} (n={n}): {source}")]
    Gen {
        trial: usize,
        n: usize,
        #[source]
        source: GenError,
    },
    #[error("trial {trial} (n={n}): {source}")]
    Run {
        trial: usize,
        n: usize,
        #[source]
        source: RunError,
    },
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchSpec {
    pub sizes: Vec<usize>,
    pub model: Model,
    pub trials: usize,
    /// Base configuration; its seed is the base seed.
    pub config: RunConfig,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trial {
    pub index: usize,
    pub n: usize,
    pub model: Model,
    pub config: RunConfig,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub index: usize,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub success: bool,
    /// Proper and complete per the independent verifier (successes only).
    pub verified: bool,
    pub max_residual_degree: usize,
    pub max_color: u32,
    pub wall_millis: f64,
    pub csv_row: String,
}

impl BenchSpec {
    pub fn trials(&self) -> Result<Vec<Trial>, BenchError> {
        if self.sizes.is_empty() || self.trials == 0 {
            return Err(BenchError::EmptySpec);
        }
        let mut out = Vec::with_capacity(self.sizes.len() * self.trials);
        for &n in &self.sizes {
            for _ in 0..self.trials {
                let index = out.len();
                let config = RunConfig {
                    seed: derive_seed(self.config.seed, index as u64),
                    ..self.config.clone()
                };
                out.push(Trial {
                    index,
                    n,
                    model: self.model,
                    config,
                });
            }
        }
        Ok(out)
    }
}

pub fn run_trial(t: &Trial) -> Result<TrialRecord, BenchError> {
    let mut graph_rng = rng::stream(t.config.seed, rng::GRAPH_STREAM);
    let g = match t.model {
        Model::Gnp { p } => gen_gnp(t.n, p, &mut graph_rng),
        Model::Regular { d } => gen_near_regular(t.n, d, &mut graph_rng),
    }
    .map_err(|source| BenchError::Gen {
        trial: t.index,
        n: t.n,
        source,
    })?;
    let report = edge_color(&g, &t.config).map_err(|source| BenchError::Run {
        trial: t.index,
        n: t.n,
        source,
    })?;
    let success = report.success();
    Ok(TrialRecord {
        index: t.index,
        n: t.n,
        m: g.edge_count(),
        delta: g.max_degree(),
        success,
        verified: success && verify_proper(&g, &report.colors, true).is_ok(),
        max_residual_degree: report.stats.max_residual_degree,
        max_color: report.stats.max_color.unwrap_or(0),
        wall_millis: report.stats.stage1_millis + report.stats.stage2_millis,
        csv_row: report.csv_row(),
    })
}

pub fn run_sequential(trials: &[Trial]) -> Result<Vec<TrialRecord>, BenchError> {
    trials.iter().map(run_trial).collect()
}

/// Runs trials on a dedicated pool of `jobs` threads (`0` = rayon default).
#[cfg(feature = "parallel")]
pub fn run_parallel(trials: &[Trial], jobs: usize) -> Result<Vec<TrialRecord>, BenchError> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| BenchError::Pool(e.to_string()))?;
    pool.install(|| trials.par_iter().map(run_trial).collect())
}

/// Parallel when the `parallel` feature is on and `jobs != 1`.
pub fn run(trials: &[Trial], jobs: usize) -> Result<Vec<TrialRecord>, BenchError> {
    #[cfg(feature = "parallel")]
    if jobs != 1 {
        return run_parallel(trials, jobs);
    }
    let _ = jobs;
    run_sequential(trials)
}

pub fn csv(records: &[TrialRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row);
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct SizeSummary {
    pub n: usize,
    pub trials: usize,
    pub median_m: usize,
    pub median_wall_millis: f64,
    pub success_rate: f64,
    /// Max over successful trials of `Δ*/Δ`.
    pub max_residual_ratio: f64,
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let k = values.len();
    if k == 0 {
        f64::NAN
    } else if k % 2 == 1 {
        values[k / 2]
    } else {
        (values[k / 2 - 1] + values[k / 2]) / 2.0
    }
}

/// One summary per distinct `n`, in first-seen order.
pub fn summarize(records: &[TrialRecord]) -> Vec<SizeSummary> {
    let mut sizes: Vec<usize> = Vec::new();
    for r in records {
        if !sizes.contains(&r.n) {
            sizes.push(r.n);
        }
    }
    sizes
        .into_iter()
        .map(|n| {
            let rs: Vec<_> = records.iter().filter(|r| r.n == n).collect();
            let mut walls: Vec<f64> = rs.iter().map(|r| r.wall_millis).collect();
            let mut ms: Vec<usize> = rs.iter().map(|r| r.m).collect();
            ms.sort_unstable();
            let successes = rs.iter().filter(|r| r.success).count();
            let ratio = rs
                .iter()
                .filter(|r| r.success && r.delta > 0)
                .map(|r| r.max_residual_degree as f64 / r.delta as f64)
                .fold(0.0, f64::max);
            SizeSummary {
                n,
                trials: rs.len(),
                median_m: ms[ms.len() / 2],
                median_wall_millis: median(&mut walls),
                success_rate: successes as f64 / rs.len() as f64,
                max_residual_ratio: ratio,
            }
        })
        .collect()
}

pub fn summary_csv(summaries: &[SizeSummary]) -> String {
    let mut out =
        String::from("n,trials,median_m,median_wall_millis,success_rate,max_residual_ratio\n");
    for s in summaries {
        out.push_str(&format!(
            "{},{},{},{:.3},{:.4},{:.6}\n",
            s.n, s.trials, s.median_m, s.median_wall_millis, s.success_rate, s.max_residual_ratio
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny(trials: usize) -> BenchSpec {
        BenchSpec {
            sizes: vec![12, 16],
            model: Model::Gnp { p: 0.5 },
            trials,
            config: RunConfig {
                epsilon: 0.5,
                kappa_override: Some(8),
                ell_override: Some(40),
                seed: 3,
                force: true,
                ..RunConfig::default()
            },
        }
    }

    fn strip_timing(row: &str) -> String {
        row.rsplitn(3, ',').skip(2).collect()
    }

    #[test]
    fn empty_spec_rejected() {
        let mut s = tiny(1);
        s.sizes.clear();
        assert!(matches!(s.trials(), Err(BenchError::EmptySpec)));
        assert!(matches!(tiny(0).trials(), Err(BenchError::EmptySpec)));
    }

    #[test]
    fn single_trial_single_row() {
        let mut s = tiny(1);
        s.sizes.truncate(1);
        let recs = run_sequential(&s.trials().unwrap()).unwrap();
        assert_eq!(csv(&recs).lines().count(), 2);
    }

    #[test]
    fn schedule_does_not_change_results() {
        let trials = tiny(3).trials().unwrap();
        let a = run_sequential(&trials).unwrap();
        let b = run(&trials, 0).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(strip_timing(&x.csv_row), strip_timing(&y.csv_row));
            assert!(!x.success || x.verified);
        }
    }

    #[test]
    fn summary_per_size() {
        let recs = run_sequential(&tiny(2).trials().unwrap()).unwrap();
        let s = summarize(&recs);
        assert_eq!(s.len(), 2);
        assert_eq!((s[0].n, s[0].trials), (12, 2));
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
