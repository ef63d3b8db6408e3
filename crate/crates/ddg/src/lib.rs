//! Dynamic dataset generation for clustering benchmarks.
//!
//! A scenario is an ensemble of dynamic Gaussian components (DGCs) whose
//! centers, widths, rotation angles, and selection weights evolve over time.
//! Every change is a probabilistic event evaluated once per tick (one tick
//! per function evaluation): gradual per-component drifts with controllable
//! correlation, rare heavy-tailed shocks across all components, and
//! structural changes to the number of components, variables, and clusters.
//! Data points live in a fixed-size FIFO window that refreshes incrementally
//! on a sampling schedule and is fully resampled after large changes.
//!
//! Runs are deterministic: one master seed splits into isolated substreams
//! (per-component dynamics, shocks, structural changes, sampling, optimizer),
//! so toggling one dynamic never perturbs the others, and identical
//! `(config, seed)` pairs replay bit-exactly.
//!
//! ```
//! use ddg::config::preset;
//! use ddg::engine::run;
//!
//! let config = preset("static-mixture").unwrap();
//! let output = run(&config, Some(7), Some(50)).unwrap();
//! assert_eq!(output.window.len(), config.sampling.window_capacity);
//! ```
//!
//! The `examples/` directory is the guided tour, one runnable program per
//! capability:
//!
//! ```text
//! cargo run --release -p ddg --example static_mixture      # mixture sampling + density
//! cargo run --release -p ddg --example center_drift        # momentum walks at three correlations
//! cargo run --release -p ddg --example parameter_walks     # directed scalar walks
//! cargo run --release -p ddg --example global_shocks       # heavy-tailed shocks
//! cargo run --release -p ddg --example structural_changes  # component/variable/cluster counts
//! cargo run --release -p ddg --example streaming_window    # FIFO refresh and full resampling
//! cargo run --release -p ddg --example baseline_benchmark  # end-to-end evaluation harness
//! ```
//!
//! A thin `ddg` binary wraps the same library surface for scripting:
//! `generate`, `run`, `inspect`, and `export-density` subcommands.

pub mod config;
pub mod density;
pub mod dynamics;
pub mod engine;
pub mod error;
pub mod evaluation;
pub mod export;
pub mod model;
pub mod stochastics;

pub use config::{parse_config, preset, serialize_config, ScenarioConfig, PRESET_NAMES};
pub use engine::{run, ChangeEvent, DatasetWindow, Engine, GeneratorState, RunOutput};
pub use error::{Error, Result};
pub use evaluation::{
    baseline_optimize, intra_cluster_distance, offline_performance, root_survival,
    ClusteringObjective, ClusteringSolution, IntraClusterDistance,
};
pub use model::{build_rotation, reflect, sample_point, DgcState, RotationMatrix};
pub use stochastics::{RandomStream, Substream, PRNG_ID};
