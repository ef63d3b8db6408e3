//! Heavy-tailed global shocks: rare events that displace every component at
//! once and force a full resample.
//!
//! Shock magnitudes are `2·Beta(0.1, 0.1) − 1` draws, whose U-shaped density
//! piles mass near ±1: a fired shock almost always moves centers close to
//! the full shock severity rather than fizzling near zero. The histogram
//! below comes from the event log's before/after digests.
//!
//! ```bash
//! cargo run --release -p ddg --example global_shocks
//! ```

use ddg::config::preset;
use ddg::engine::{run, EventKind};

fn main() -> ddg::Result<()> {
    let mut config = preset("kitchen-sink")?;
    // Shocks only, often enough to collect statistics.
    config.local.change_prob = 0.0;
    config.structure.dgc_count_prob = 0.0;
    config.structure.var_count_prob = 0.0;
    config.structure.cluster_count_prob = 0.0;
    config.sampling.prob = 0.0;
    config.global.prob = 0.05;
    config.ticks = 20_000;
    config.sampling.window_capacity = 200;

    let output = run(&config, Some(3), None)?;

    let severity = config.global.shift;
    let mut displacements = Vec::new();
    let mut resamples = 0usize;
    for event in &output.events {
        match &event.kind {
            EventKind::GlobalShock { before, after } => {
                for (b, a) in before.iter().zip(after) {
                    let displacement: f64 = b
                        .center
                        .iter()
                        .zip(&a.center)
                        .map(|(x, y)| (x - y) * (x - y))
                        .sum::<f64>()
                        .sqrt();
                    displacements.push(displacement);
                }
            }
            EventKind::FullResample { .. } if event.tick > 0 => resamples += 1,
            _ => {}
        }
    }

    println!(
        "{} shock events over {} ticks, {} full resamples, {} per-component displacements",
        resamples,
        config.ticks,
        resamples,
        displacements.len()
    );
    println!("shock severity {severity}; displacement histogram (reflection can shorten steps):");
    let buckets = 10;
    let mut counts = vec![0usize; buckets];
    for d in &displacements {
        let bucket = ((d / severity) * buckets as f64).min(buckets as f64 - 1.0) as usize;
        counts[bucket] += 1;
    }
    for (i, count) in counts.iter().enumerate() {
        let lo = i as f64 / buckets as f64;
        let bar = "#".repeat(60 * count / displacements.len().max(1));
        println!("  {:4.1}–{:4.1} × severity  {count:5}  {bar}", lo, lo + 0.1);
    }
    let near_full = displacements.iter().filter(|d| **d > 0.8 * severity).count();
    let near_zero = displacements.iter().filter(|d| **d < 0.2 * severity).count();
    println!(
        "moves above 0.8×severity: {near_full}, below 0.2×severity: {near_zero} (heavy tails favor the former)"
    );
    Ok(())
}
