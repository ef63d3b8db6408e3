//! Trace one component's center through 1000 fired shifts at three momentum
//! levels.
//!
//! The drift presets fire the local-change bundle every tick with shift
//! severity 1 and everything else frozen. The correlation coefficient rho
//! blends the previous heading into each new one: at 0.0 the center jitters
//! around its start with little net motion, while at 0.9 the walk ranges far
//! across the space. Trajectories come straight out of the event log, which
//! records every component digest before and after a fired change.
//!
//! ```bash
//! cargo run --release -p ddg --example center_drift
//! ```

use std::fs;
use std::io::Write;

use ddg::config::preset;
use ddg::engine::{run, EventKind};

fn main() -> ddg::Result<()> {
    let out_dir = "target/example-output/center_drift";
    fs::create_dir_all(out_dir)?;

    for (name, rho) in [
        ("drift-rho00", 0.0),
        ("drift-rho05", 0.5),
        ("drift-rho09", 0.9),
    ] {
        let config = preset(name)?;
        let output = run(&config, Some(7), None)?;

        let mut trajectory = vec![(0.0, 0.0)];
        for event in &output.events {
            if let EventKind::Local { after, .. } = &event.kind {
                trajectory.push((after.center[0], after.center[1]));
            }
        }
        let (x, y) = *trajectory.last().unwrap();
        let net = (x * x + y * y).sqrt();
        let path: f64 = trajectory
            .windows(2)
            .map(|w| ((w[1].0 - w[0].0).powi(2) + (w[1].1 - w[0].1).powi(2)).sqrt())
            .sum();
        println!(
            "rho {rho:.1}: {} shifts, path length {path:7.1}, net displacement {net:7.1}",
            trajectory.len() - 1
        );

        let mut file = fs::File::create(format!("{out_dir}/trajectory_rho{rho:.1}.csv"))?;
        writeln!(file, "x,y")?;
        for (x, y) in &trajectory {
            writeln!(file, "{x},{y}")?;
        }
    }
    println!("trajectories written to {out_dir}/");
    Ok(())
}
