//! The FIFO dataset window under incremental sampling.
//!
//! Each sampling event evicts the oldest fraction of the window and appends
//! the same number of fresh points drawn from the current mixture, so a
//! drifting environment leaks into the data gradually. The birth-tick
//! distribution shows the age structure this produces.
//!
//! ```bash
//! cargo run --release -p ddg --example streaming_window
//! ```

use ddg::config::preset;
use ddg::engine::{run, EventKind};

fn main() -> ddg::Result<()> {
    let mut config = preset("kitchen-sink")?;
    config.global.prob = 0.0;
    config.structure.dgc_count_prob = 0.0;
    config.structure.var_count_prob = 0.0;
    config.structure.cluster_count_prob = 0.0;
    config.local.change_prob = 0.2; // steady drift for the stream to track
    config.sampling.prob = 0.5;
    config.sampling.refresh_percent = 4.0;
    config.sampling.window_capacity = 1000;
    config.ticks = 400;

    let output = run(&config, Some(9), None)?;

    let sampling_events = output
        .events
        .iter()
        .filter(|e| matches!(e.kind, EventKind::IncrementalSample { .. }))
        .count();
    let replaced: usize = output
        .events
        .iter()
        .filter_map(|e| match e.kind {
            EventKind::IncrementalSample { replaced } => Some(replaced),
            _ => None,
        })
        .sum();
    println!(
        "{sampling_events} sampling events over {} ticks replaced {replaced} points in a window of {}",
        config.ticks,
        output.window.capacity()
    );

    // Age structure: newest points dominate, the oldest survivors date back
    // roughly capacity/(prob * refresh) ticks.
    let mut ages: Vec<u64> = output
        .window
        .iter()
        .map(|p| config.ticks - p.birth_tick)
        .collect();
    ages.sort_unstable();
    let quantile = |q: f64| ages[((ages.len() - 1) as f64 * q) as usize];
    println!("point age quantiles (ticks since sampling):");
    for q in [0.0, 0.25, 0.5, 0.75, 1.0] {
        println!("  {:3.0}%: {:4}", q * 100.0, quantile(q));
    }

    // FIFO means age order equals position order.
    let birth_ticks: Vec<u64> = output.window.iter().map(|p| p.birth_tick).collect();
    assert!(
        birth_ticks.windows(2).all(|w| w[0] <= w[1]),
        "window positions must be age-ordered"
    );
    println!("window is age-ordered front (oldest) to back (newest)");
    Ok(())
}
