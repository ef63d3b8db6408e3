//! Artifact formats: dataset CSV, line-delimited event logs, density CSV,
//! per-evaluation records CSV, and the run manifest.
//!
//! All writers are deterministic: identical inputs produce byte-identical
//! output, which the replay guarantees rely on.

use std::fmt::Write as FmtWrite;
use std::io::{BufRead, Write};

use sha2::{Digest, Sha256};

use crate::config::{serialize_config, ScenarioConfig};
use crate::density::DensityGrid;
use crate::engine::{ChangeEvent, DataPoint, DatasetWindow, LogHeader};
use crate::error::{Error, Result};
use crate::evaluation::EvaluationRecord;

/// SHA-256 of the normalized scenario serialization, hex-encoded.
pub fn config_hash(config: &ScenarioConfig) -> Result<String> {
    let normalized = serialize_config(config)?;
    let digest = Sha256::digest(normalized.as_bytes());
    let mut hex = String::with_capacity(64);
    for byte in digest {
        let _ = write!(hex, "{byte:02x}");
    }
    Ok(hex)
}

/// Dataset CSV with header `x1,...,xd,birth_tick,source_dgc`, one row per
/// point in window (oldest-first) order.
pub fn window_csv(points: &[DataPoint], dims: usize) -> String {
    let mut out = String::new();
    for j in 1..=dims {
        let _ = write!(out, "x{j},");
    }
    out.push_str("birth_tick,source_dgc\n");
    for point in points {
        for value in point.coords.iter() {
            let _ = write!(out, "{value},");
        }
        let _ = writeln!(out, "{},{}", point.birth_tick, point.source_dgc);
    }
    out
}

pub fn write_window_csv<W: Write>(writer: &mut W, window: &DatasetWindow, dims: usize) -> Result<()> {
    let points = window.to_points();
    writer.write_all(window_csv(&points, dims).as_bytes())?;
    Ok(())
}

/// Event log text: one JSON header record, then one JSON line per event.
pub fn event_log_string(header: &LogHeader, events: &[ChangeEvent]) -> Result<String> {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}",
        serde_json::to_string(header).map_err(|e| Error::ConfigSyntax(e.to_string()))?
    );
    for event in events {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(event).map_err(|e| Error::ConfigSyntax(e.to_string()))?
        );
    }
    Ok(out)
}

pub fn write_event_log<W: Write>(
    writer: &mut W,
    header: &LogHeader,
    events: &[ChangeEvent],
) -> Result<()> {
    writer.write_all(event_log_string(header, events)?.as_bytes())?;
    Ok(())
}

/// Parse an event log produced by [`write_event_log`].
pub fn read_event_log<R: BufRead>(reader: R) -> Result<(LogHeader, Vec<ChangeEvent>)> {
    let mut lines = reader.lines();
    let header_line = lines
        .next()
        .ok_or_else(|| Error::ConfigSyntax("event log is empty".into()))??;
    let header: LogHeader = serde_json::from_str(&header_line)
        .map_err(|e| Error::ConfigSyntax(format!("bad event-log header: {e}")))?;
    let mut events = Vec::new();
    for (number, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let event: ChangeEvent = serde_json::from_str(&line)
            .map_err(|e| Error::ConfigSyntax(format!("bad event on line {}: {e}", number + 2)))?;
        events.push(event);
    }
    Ok((header, events))
}

/// Density CSV: `x,y,density` rows in row-major (y-outer) order.
pub fn density_csv(grid: &DensityGrid) -> String {
    let mut out = String::from("x,y,density\n");
    for (iy, y) in grid.ys.iter().enumerate() {
        for (ix, x) in grid.xs.iter().enumerate() {
            let _ = writeln!(out, "{x},{y},{}", grid.values[iy][ix]);
        }
    }
    out
}

/// Per-evaluation records CSV for plotting running bests over time.
pub fn records_csv(records: &[EvaluationRecord]) -> String {
    let mut out =
        String::from("tick,evaluated,rescored_incumbent,running_best,deployed_value,redeployed\n");
    for r in records {
        let rescored = r
            .rescored_incumbent
            .map(|v| v.to_string())
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.tick, r.evaluated, rescored, r.running_best, r.deployed_value, r.redeployed
        );
    }
    out
}
