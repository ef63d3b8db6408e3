//! End-to-end benchmarking: drive the baseline optimizer against a scenario
//! and score it with the dynamic-environment metrics.
//!
//! Every objective call advances the engine one tick, so the dataset can
//! change mid-optimization. After each dataset change the incumbent is
//! re-scored on the new window (bookkeeping, not a budgeted evaluation);
//! offline performance averages the running best over all evaluations, and
//! ROOT survival measures how long a deployed solution keeps acceptable
//! quality before it must be swapped.
//!
//! ```bash
//! cargo run --release -p ddg --example baseline_benchmark
//! ```

use std::fs;

use ddg::config::preset;
use ddg::engine::Engine;
use ddg::evaluation::{baseline_optimize, metrics_report, IntraClusterDistance};
use ddg::export::records_csv;
use ddg::stochastics::{RandomStream, Substream};

fn main() -> ddg::Result<()> {
    // A quiet scenario first: the optimizer should converge and stay put.
    let mut quiet = preset("single-rotated")?;
    quiet.ticks = 3000;
    quiet.sampling.window_capacity = 1000;
    run_scenario("static single component", &quiet, 3000, 20_000.0)?;

    // The kitchen sink: every dynamic enabled at defaults.
    let mut noisy = preset("kitchen-sink")?;
    noisy.ticks = 10_000;
    run_scenario("kitchen sink", &noisy, 10_000, 60_000.0)?;
    Ok(())
}

fn run_scenario(
    label: &str,
    config: &ddg::ScenarioConfig,
    budget: u64,
    root_threshold: f64,
) -> ddg::Result<()> {
    let mut engine = Engine::from_config(config)?;
    let mut stream = RandomStream::new(config.seed, Substream::Optimizer);
    let records = baseline_optimize(
        &mut engine,
        &IntraClusterDistance,
        budget,
        root_threshold,
        &mut stream,
    )?;

    println!("=== {label} ===");
    print!("{}", metrics_report(&records, engine.events(), root_threshold));
    let improvement = records.first().map(|r| r.running_best).unwrap_or(f64::NAN)
        / records.last().map(|r| r.running_best).unwrap_or(f64::NAN);
    println!("running best improved {improvement:.2}x over the run\n");

    let out_dir = "target/example-output/baseline_benchmark";
    fs::create_dir_all(out_dir)?;
    let file = format!("{out_dir}/{}.csv", label.replace(' ', "_"));
    fs::write(&file, records_csv(&records))?;
    println!("per-evaluation records -> {file}\n");
    Ok(())
}
