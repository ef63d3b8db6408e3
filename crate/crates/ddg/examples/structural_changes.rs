//! Structural changes: the component, variable, and cluster counts all walk
//! within their configured ranges.
//!
//! Component- and variable-count changes rebuild part of the model, so each
//! one forces a full resample in the same tick. Cluster-count changes only
//! alter the problem handed to a clustering algorithm; the window is left
//! alone.
//!
//! ```bash
//! cargo run --release -p ddg --example structural_changes
//! ```

use ddg::config::preset;
use ddg::engine::{run, EventKind};

fn main() -> ddg::Result<()> {
    let mut config = preset("kitchen-sink")?;
    config.local.change_prob = 0.0;
    config.global.prob = 0.0;
    config.sampling.prob = 0.0;
    config.structure.dgc_count_prob = 0.002;
    config.structure.var_count_prob = 0.002;
    config.structure.cluster_count_prob = 0.002;
    config.ticks = 5000;
    config.sampling.window_capacity = 500;

    let output = run(&config, Some(5), None)?;

    println!("tick | event            | change");
    println!("-----+------------------+----------------");
    let mut resamples_after_structure = 0usize;
    let mut cluster_only_ticks = 0usize;
    for event in &output.events {
        match &event.kind {
            EventKind::DgcCount { before, after } => {
                println!("{:4} | components       | {before} -> {after}", event.tick);
            }
            EventKind::VarCount { before, after } => {
                println!("{:4} | variables        | {before} -> {after}", event.tick);
            }
            EventKind::ClusterCount { before, after } => {
                println!("{:4} | clusters         | {before} -> {after}", event.tick);
            }
            EventKind::FullResample { points } if event.tick > 0 => {
                println!("{:4} | full resample    | {points} points", event.tick);
                resamples_after_structure += 1;
            }
            _ => {}
        }
    }

    // Verify the pairing rule from the log itself.
    for tick_events in output.events.chunk_by(|a, b| a.tick == b.tick) {
        let structural = tick_events.iter().any(|e| {
            matches!(
                e.kind,
                EventKind::DgcCount { .. } | EventKind::VarCount { .. } | EventKind::GlobalShock { .. }
            )
        });
        let resampled = tick_events
            .iter()
            .any(|e| matches!(e.kind, EventKind::FullResample { .. }));
        let cluster_only = tick_events
            .iter()
            .all(|e| matches!(e.kind, EventKind::ClusterCount { .. }));
        if structural {
            assert!(resampled, "structural change without resample at tick {}", tick_events[0].tick);
        }
        if cluster_only && !tick_events.is_empty() {
            assert!(!resampled);
            cluster_only_ticks += 1;
        }
    }
    println!();
    println!(
        "final counts: m={}, d={}, kappa={}",
        output.state.dgc_count(),
        output.state.dims,
        output.state.kappa
    );
    println!(
        "{resamples_after_structure} resamples paired with structural changes; {cluster_only_ticks} cluster-only ticks left the window untouched"
    );
    Ok(())
}
