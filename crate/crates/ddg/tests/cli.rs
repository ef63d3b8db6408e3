//! Smoke tests of the command-line surface, run against the real binary.

use std::fs;
use std::process::Command;

fn ddg() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ddg"))
}

fn assert_success(output: &std::process::Output, what: &str) {
    assert!(
        output.status.success(),
        "{what} failed:\nstdout: {}\nstderr: {}",
        String::from_utf8_lossy(&output.stdout),
        String::from_utf8_lossy(&output.stderr)
    );
}

#[test]
fn generate_writes_the_documented_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("artifacts");
    let output = ddg()
        .args([
            "generate",
            "--preset",
            "static-mixture",
            "--ticks",
            "20",
            "--seed",
            "5",
            "--out",
        ])
        .arg(&out)
        .output()
        .unwrap();
    assert_success(&output, "generate");

    for file in ["manifest.json", "events.jsonl", "dataset.csv"] {
        assert!(out.join(file).exists(), "missing {file}");
    }
    let dataset = fs::read_to_string(out.join("dataset.csv")).unwrap();
    assert!(dataset.starts_with("x1,x2,birth_tick,source_dgc\n"));
    let manifest = fs::read_to_string(out.join("manifest.json")).unwrap();
    assert!(manifest.contains("chacha12-stream/1"));
    assert!(manifest.contains("\"seed\": 5"));

    // Same invocation, same bytes.
    let rerun = dir.path().join("again");
    let output = ddg()
        .args([
            "generate",
            "--preset",
            "static-mixture",
            "--ticks",
            "20",
            "--seed",
            "5",
            "--out",
        ])
        .arg(&rerun)
        .output()
        .unwrap();
    assert_success(&output, "generate rerun");
    assert_eq!(
        fs::read(out.join("dataset.csv")).unwrap(),
        fs::read(rerun.join("dataset.csv")).unwrap()
    );
    assert_eq!(
        fs::read(out.join("events.jsonl")).unwrap(),
        fs::read(rerun.join("events.jsonl")).unwrap()
    );
}

#[test]
fn snapshot_flag_writes_periodic_windows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("snaps");
    let output = ddg()
        .args([
            "generate",
            "--preset",
            "kitchen-sink",
            "--ticks",
            "40",
            "--snapshot-every",
            "20",
            "--out",
        ])
        .arg(&out)
        .output()
        .unwrap();
    assert_success(&output, "generate with snapshots");
    assert!(out.join("snapshot_00000020.csv").exists());
    assert!(out.join("snapshot_00000040.csv").exists());
}

#[test]
fn inspect_summarizes_an_event_log() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("artifacts");
    let output = ddg()
        .args([
            "generate",
            "--preset",
            "kitchen-sink",
            "--ticks",
            "200",
            "--out",
        ])
        .arg(&out)
        .output()
        .unwrap();
    assert_success(&output, "generate");

    let output = ddg().arg("inspect").arg(out.join("events.jsonl")).output().unwrap();
    assert_success(&output, "inspect");
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("schema:      ddg-events/1"), "{text}");
    assert!(text.contains("prng:        chacha12-stream/1"), "{text}");
    assert!(text.contains("full-resample"), "{text}");
}

#[test]
fn run_reports_metrics() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bench");
    let output = ddg()
        .args([
            "run",
            "--preset",
            "single-isotropic",
            "--budget",
            "100",
            "--root-threshold",
            "1e9",
            "--out",
        ])
        .arg(&out)
        .output()
        .unwrap();
    assert_success(&output, "run");
    let report = fs::read_to_string(out.join("report.txt")).unwrap();
    assert!(report.contains("offline performance:"), "{report}");
    assert!(report.contains("root survival"), "{report}");
    let records = fs::read_to_string(out.join("records.csv")).unwrap();
    assert!(records.starts_with(
        "tick,evaluated,rescored_incumbent,running_best,deployed_value,redeployed\n"
    ));
    assert_eq!(records.lines().count(), 101);
}

#[test]
fn run_rejects_unknown_algorithms() {
    let output = ddg()
        .args([
            "run",
            "--preset",
            "single-isotropic",
            "--budget",
            "10",
            "--root-threshold",
            "1.0",
            "--algorithm",
            "annealing",
        ])
        .output()
        .unwrap();
    assert!(!output.status.success());
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("baseline"), "{err}");
}

#[test]
fn export_density_requires_two_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("density.csv");
    let output = ddg()
        .args(["export-density", "--preset", "static-mixture", "--resolution", "40", "--out"])
        .arg(&csv)
        .output()
        .unwrap();
    assert_success(&output, "export-density");
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("x,y,density\n"));
    assert_eq!(text.lines().count(), 40 * 40 + 1);

    // A 3-D scenario cannot export a planar grid.
    let config = dir.path().join("three_dims.toml");
    fs::write(
        &config,
        "[space]\ndimensions = 3\ndimension_range = [2, 5]\n",
    )
    .unwrap();
    let output = ddg()
        .args(["export-density", "--config"])
        .arg(&config)
        .args(["--out"])
        .arg(dir.path().join("nope.csv"))
        .output()
        .unwrap();
    assert!(!output.status.success());
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("unsupported export"), "{err}");
}

#[test]
fn config_files_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scenario.toml");
    let config = ddg::config::preset("drift-rho09").unwrap();
    fs::write(&path, ddg::config::serialize_config(&config).unwrap()).unwrap();

    let out = dir.path().join("from_file");
    let output = ddg()
        .args(["generate", "--config"])
        .arg(&path)
        .args(["--ticks", "10", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert_success(&output, "generate from config file");
    assert!(out.join("dataset.csv").exists());
}

#[test]
fn malformed_configs_fail_with_position_info() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.toml");
    fs::write(&path, "seed = [,\n").unwrap();
    let output = ddg()
        .args(["generate", "--config"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(!output.status.success());
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("line"), "{err}");

    fs::write(&path, "mystery_key = 1\n").unwrap();
    let output = ddg()
        .args(["generate", "--config"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(!output.status.success());
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("mystery_key"), "{err}");
}

#[test]
fn warnings_surface_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("warny.toml");
    // Global shift severity below the local one: legal, but advised against.
    fs::write(&path, "[global]\nshift = 0.5\n").unwrap();
    let output = ddg()
        .args(["generate", "--config"])
        .arg(&path)
        .args(["--ticks", "5", "--out"])
        .arg(dir.path().join("w"))
        .output()
        .unwrap();
    assert_success(&output, "generate with warnings");
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("warning:"), "{err}");
}
