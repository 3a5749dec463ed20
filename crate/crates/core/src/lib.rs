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

//! Randomized `(1+ε)Δ` edge coloring of simple graphs in near-linear time.
//!
//! ```
//! use nearviz::{edge_color, verify_proper, Graph, RunConfig};
//!
//! let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
//! let cfg = RunConfig {
//!     epsilon: 0.9,
//!     kappa_override: Some(8),
//!     ell_override: Some(16),
//!     force: true,
//!     ..RunConfig::default()
//! };
//! let report = edge_color(&g, &cfg).unwrap();
//! if report.success() {
//!     assert!(verify_proper(&g, &report.colors, true).is_ok());
//! }
//! ```

pub mod bench;
pub mod chains;
pub mod cli;
pub mod coloring;
pub mod gen;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod ncl;
pub mod rng;
pub mod verify;

pub use chains::{
    augment, flip_path, make_fan, shift_fan, vizing_chain, AlternatingPath, AugmentCase,
    AugmentOutcome, ChainError, ChainFailure, ChainOutcome, Fan, FanOutcome, FanResult,
    VizingChain,
};
pub use coloring::{Color, ColoringError, PartialColoring, BLANK};
pub use graph::{EdgeId, Graph, GraphError, VertexId};
pub use greedy::{greedy_color, GreedyError, GreedyReport};
pub use ncl::{
    edge_color, residual_subgraph, resolve_params, sample_palette, stage1, FailReason, Params,
    RunConfig, RunError, RunReport, RunStats, UncoloredPool,
};
pub use verify::{palette_report, verify_proper, Violation};
