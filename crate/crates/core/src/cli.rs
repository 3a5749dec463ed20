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

//! `nearviz gen|color|verify|bench`.
//!
//! Exit codes: 0 success, 1 algorithm failure or coloring violation,
//! 2 bad input or arguments.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{self, BenchSpec, Model};
use crate::io::{read_coloring, read_graph, write_coloring, write_graph};
use crate::ncl::{edge_color_traced, RunConfig, RunError, CSV_HEADER, DEFAULT_CONSTANT};
use crate::rng::{self, derive_seed};
use crate::verify::verify_proper;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nearviz",
    version,
    about = "Randomized (1+eps)Delta edge coloring"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random graph in edge-list format.
    Gen(GenArgs),
    /// Edge-color a graph file.
    Color(ColorArgs),
    /// Check a coloring file against a graph file.
    Verify(VerifyArgs),
    /// Run seeded benchmark trials and emit CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Gnp,
    Regular,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub model: ModelKind,
    #[arg(long)]
    pub n: usize,
    /// Edge probability (gnp).
    #[arg(long)]
    pub p: Option<f64>,
    /// Target degree (regular).
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, env = "NEARVIZ_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long, env = "NEARVIZ_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_CONSTANT)]
    pub kappa_const: f64,
    #[arg(long, default_value_t = DEFAULT_CONSTANT)]
    pub ell_const: f64,
    /// Explicit palette sample count (voids guarantees).
    #[arg(long)]
    pub kappa: Option<usize>,
    /// Explicit path cap (voids guarantees).
    #[arg(long)]
    pub ell: Option<usize>,
    /// Run below the max-degree regime threshold.
    #[arg(long)]
    pub force: bool,
    /// Rescan the coloring after every iteration.
    #[arg(long)]
    pub debug_check: bool,
}

impl ParamArgs {
    fn config(&self) -> RunConfig {
        RunConfig {
            epsilon: self.epsilon,
            kappa_const: self.kappa_const,
            ell_const: self.ell_const,
            kappa_override: self.kappa,
            ell_override: self.ell,
            seed: self.seed,
            force: self.force,
            debug_check: self.debug_check,
        }
    }
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    /// Graph file.
    pub input: PathBuf,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Extra attempts with derived seeds after a FAIL.
    #[arg(long, default_value_t = 0)]
    pub retries: u32,
    /// Stats CSV path; stderr when omitted.
    #[arg(long)]
    pub stats_out: Option<PathBuf>,
    /// Coloring path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Per-iteration trace path.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    pub coloring: PathBuf,
    /// Accept uncolored edges.
    #[arg(long)]
    pub partial: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Vertex counts, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, value_enum)]
    pub model: ModelKind,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Concurrent trials; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Per-trial CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Per-size summary CSV path.
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

fn model_of(kind: ModelKind, p: Option<f64>, d: Option<usize>) -> Result<Model, String> {
    match (kind, p, d) {
        (ModelKind::Gnp, Some(p), _) => Ok(Model::Gnp { p }),
        (ModelKind::Regular, _, Some(d)) => Ok(Model::Regular { d }),
        (ModelKind::Gnp, None, _) => Err("--model gnp needs --p".into()),
        (ModelKind::Regular, _, None) => Err("--model regular needs --d".into()),
    }
}

fn open_out(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Gen(a) => cmd_gen(&a),
        Command::Color(a) => cmd_color(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Bench(a) => cmd_bench(&a),
    }
}

pub fn cmd_gen(a: &GenArgs) -> i32 {
    let model = match model_of(a.model, a.p, a.d) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let mut rng = rng::stream(a.seed, rng::GRAPH_STREAM);
    let g = match model {
        Model::Gnp { p } => crate::gen::gen_gnp(a.n, p, &mut rng),
        Model::Regular { d } => crate::gen::gen_near_regular(a.n, d, &mut rng),
    };
    let g = match g {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let written = match &a.out {
        Some(p) => write_graph(&g, p).map_err(|e| e.to_string()),
        None => crate::io::format_graph(&g, io::stdout().lock()).map_err(|e| e.to_string()),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn cmd_color(a: &ColorArgs) -> i32 {
    let g = match read_graph(&a.input) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let base = a.params.config();
    let mut stats: Box<dyn Write> = match &a.stats_out {
        Some(p) => match File::create(p) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: {}: {e}", p.display());
                return EXIT_INPUT;
            }
        },
        None => Box::new(io::stderr().lock()),
    };
    let mut trace: Option<BufWriter<File>> = match &a.trace {
        Some(p) => match File::create(p) {
            Ok(f) => Some(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: {}: {e}", p.display());
                return EXIT_INPUT;
            }
        },
        None => None,
    };

    let mut header_written = false;
    for attempt in 0..=a.retries {
        let cfg = RunConfig {
            seed: derive_seed(base.seed, attempt as u64),
            ..base.clone()
        };
        let result = edge_color_traced(&g, &cfg, trace.as_mut().map(|w| w as &mut dyn Write));
        let report = match result {
            Ok(r) => r,
            Err(e @ (RunError::Regime { .. } | RunError::Config(_))) => {
                eprintln!("error: {e}");
                return EXIT_INPUT;
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_FAIL;
            }
        };
        if !header_written {
            let p = &report.params;
            let _ = writeln!(
                stats,
                "# nearviz color input={} {} q1={} resolved_kappa={} resolved_ell={} retries={}",
                a.input.display(),
                base.describe(),
                p.q1,
                p.kappa,
                p.ell,
                a.retries
            );
            let _ = writeln!(stats, "{CSV_HEADER}");
            header_written = true;
        }
        let _ = writeln!(stats, "{}", report.csv_row());
        if report.success() {
            let _ = stats.flush();
            let written = match &a.out {
                Some(p) => write_coloring(&g, &report.colors, p).map_err(|e| e.to_string()),
                None => crate::io::format_coloring(&g, &report.colors, io::stdout().lock())
                    .map_err(|e| e.to_string()),
            };
            return match written {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_INPUT
                }
            };
        }
        eprintln!(
            "attempt {attempt} (seed {}) failed: {}",
            cfg.seed,
            report.stats.fail_reason.unwrap()
        );
    }
    let _ = stats.flush();
    EXIT_FAIL
}

pub fn cmd_verify(a: &VerifyArgs) -> i32 {
    let g = match read_graph(&a.graph) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let colors = match read_coloring(&g, &a.coloring) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    match verify_proper(&g, &colors, !a.partial) {
        Ok(()) => {
            let p = crate::verify::palette_report(&colors);
            println!(
                "OK: {} edges, {} colors, max color {}",
                g.edge_count(),
                p.distinct,
                p.max_color.unwrap_or(0)
            );
            EXIT_OK
        }
        Err(v) => {
            match v {
                crate::verify::Violation::Conflict { first, second, .. } => {
                    let (a1, b1) = g.endpoints(first);
                    let (a2, b2) = g.endpoints(second);
                    println!("violation: ({a1},{b1}) and ({a2},{b2}): {v}");
                }
                crate::verify::Violation::Blank { edge } => {
                    let (u, w) = g.endpoints(edge);
                    println!("violation: ({u},{w}) is uncolored");
                }
                _ => println!("violation: {v}"),
            }
            EXIT_FAIL
        }
    }
}

pub fn cmd_bench(a: &BenchArgs) -> i32 {
    let model = match model_of(a.model, a.p, a.d) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let config = a.params.config();
    if let Err(e) = config.validate() {
        eprintln!("error: {e}");
        return EXIT_INPUT;
    }
    let spec = BenchSpec {
        sizes: a.sizes.clone(),
        model,
        trials: a.trials,
        config,
    };
    let trials = match spec.trials() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let records = match bench::run(&trials, a.jobs) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                bench::BenchError::Run {
                    source: RunError::Regime { .. } | RunError::Config(_),
                    ..
                }
                | bench::BenchError::Gen { .. }
                | bench::BenchError::EmptySpec => EXIT_INPUT,
                _ => EXIT_FAIL,
            };
        }
    };
    if let Some(bad) = records.iter().find(|r| r.success && !r.verified) {
        eprintln!("error: trial {} produced an improper coloring", bad.index);
        return EXIT_FAIL;
    }
    let out = open_out(a.out.as_deref()).and_then(|mut w| {
        w.write_all(bench::csv(&records).as_bytes())?;
        w.flush()
    });
    if let Err(e) = out {
        eprintln!("error: {e}");
        return EXIT_INPUT;
    }
    if let Some(path) = &a.summary {
        let text = bench::summary_csv(&bench::summarize(&records));
        if let Err(e) = std::fs::write(path, text) {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_INPUT;
        }
    }
    EXIT_OK
}
