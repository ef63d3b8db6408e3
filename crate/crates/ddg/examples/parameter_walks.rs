//! Directed random walks of a scalar parameter under four severity and
//! flip-probability settings.
//!
//! The walk presets drive one component's first width through
//! `y ← y + δ·|N(0,1)|·severity` inside [0, 100], starting at 50. With flip
//! probability 0 the direction only inverts on boundary reflection, giving a
//! boundary-to-boundary sawtooth; at 0.5 every step picks a fresh direction,
//! and with a small severity the parameter barely accumulates any change.
//!
//! ```bash
//! cargo run --release -p ddg --example parameter_walks
//! ```

use std::fs;
use std::io::Write;

use ddg::config::preset;
use ddg::engine::{run, EventKind};

fn main() -> ddg::Result<()> {
    let out_dir = "target/example-output/parameter_walks";
    fs::create_dir_all(out_dir)?;

    for name in ["walk-s1-p00", "walk-s1-p01", "walk-s1-p05", "walk-s01-p05"] {
        let config = preset(name)?;
        let output = run(&config, Some(11), None)?;

        let mut series = vec![50.0f64];
        let mut flips = 0usize;
        for event in &output.events {
            if let EventKind::Local { after, flips: f, .. } = &event.kind {
                series.push(after.sigma[0]);
                flips += f.len();
            }
        }
        let min = series.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = series.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let last = *series.last().unwrap();
        println!(
            "{name:12} steps {:4}  range [{min:6.2}, {max:6.2}]  final {last:6.2}  direction flips {flips}",
            series.len() - 1
        );

        let mut file = fs::File::create(format!("{out_dir}/{name}.csv"))?;
        writeln!(file, "step,value")?;
        for (i, v) in series.iter().enumerate() {
            writeln!(file, "{i},{v}")?;
        }
    }
    println!("series written to {out_dir}/");
    Ok(())
}
