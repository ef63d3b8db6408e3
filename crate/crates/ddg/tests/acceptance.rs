//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line with its runtime.
//!
//! Run with `cargo test -p ddg --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::time::{Duration, Instant};

use nalgebra::{DMatrix, DVector};

use ddg::config::preset;
use ddg::dynamics::local::{drift_scalar, shift_center};
use ddg::engine::{run, Engine, EventKind};
use ddg::evaluation::{
    baseline_optimize, intra_cluster_distance, offline_performance, root_survival,
    ClusteringSolution, EvaluationRecord, IntraClusterDistance,
};
use ddg::export::{event_log_string, window_csv};
use ddg::model::{build_rotation, Bounds, CountRange, DgcState, Interval, LocalDynamics, Sign};
use ddg::stochastics::{RandomStream, Substream};

struct Criterion {
    number: u8,
    name: &'static str,
    started: Instant,
}

impl Criterion {
    fn start(number: u8, name: &'static str) -> Self {
        Self {
            number,
            name,
            started: Instant::now(),
        }
    }

    fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }

    fn pass(self) {
        println!(
            "ACCEPTANCE {:2} {:<24} PASS ({:.2}s)",
            self.number,
            self.name,
            self.elapsed().as_secs_f64()
        );
    }

    fn check(&self, ok: bool, detail: &str) {
        if !ok {
            println!(
                "ACCEPTANCE {:2} {:<24} FAIL: {detail}",
                self.number, self.name
            );
            panic!("criterion {} ({}) failed: {detail}", self.number, self.name);
        }
    }
}

fn wide_bounds(limit: f64, d: usize) -> Bounds {
    Bounds {
        lower: vec![-limit; d],
        upper: vec![limit; d],
        sigma: Interval::new(0.0, 100.0),
        weight: Interval::new(0.5, 3.0),
        angle: Interval::new(-std::f64::consts::PI, std::f64::consts::PI),
        dims: CountRange::new(1, 10),
        dgcs: CountRange::new(1, 10),
        clusters: CountRange::new(1, 10),
    }
}

fn drift_component(seed: u64, rho: f64) -> DgcState {
    let mut velocity = DVector::zeros(2);
    velocity[0] = 1.0;
    DgcState::new(
        DVector::zeros(2),
        DVector::from_vec(vec![5.0, 5.0]),
        DMatrix::zeros(2, 2),
        1.0,
        velocity,
        vec![Sign::Plus; 2],
        Sign::Plus,
        DMatrix::from_element(2, 2, Sign::Plus),
        LocalDynamics {
            shift_severity: 1.0,
            sigma_severity: 0.0,
            weight_severity: 0.0,
            theta_severity: 0.0,
            rho,
            flip_prob: 0.0,
            change_prob: 1.0,
        },
        RandomStream::new(seed, Substream::DgcLocal(0)),
    )
}

#[test]
fn criterion_01_rotation_correctness() {
    let criterion = Criterion::start(1, "rotation correctness");
    let mut stream = RandomStream::master(1001);
    for trial in 0..1000 {
        let d = 2 + (trial % 9);
        let mut theta = DMatrix::zeros(d, d);
        for j in 0..d {
            for k in (j + 1)..d {
                theta[(j, k)] = stream.uniform(-std::f64::consts::PI, std::f64::consts::PI);
            }
        }
        let rotation = build_rotation(&theta, d).unwrap();
        let m = rotation.matrix();
        let product = m * m.transpose();
        for i in 0..d {
            for j in 0..d {
                let ideal = if i == j { 1.0 } else { 0.0 };
                criterion.check(
                    (product[(i, j)] - ideal).abs() < 1e-9,
                    &format!("R R^T entry ({i}, {j}) off by {}", product[(i, j)] - ideal),
                );
            }
        }
        criterion.check(
            (m.determinant() - 1.0).abs() < 1e-9,
            &format!("determinant {}", m.determinant()),
        );
    }
    criterion.check(
        criterion.elapsed() < Duration::from_secs(5),
        "exceeded the 5 s budget",
    );
    criterion.pass();
}

#[test]
fn criterion_02_sampling_moments() {
    let criterion = Criterion::start(2, "sampling moments");
    let cases: [(&str, [f64; 2], [f64; 2], f64); 4] = [
        ("single-isotropic", [0.0, 0.0], [20.0, 20.0], 0.0),
        ("single-offset", [-20.0, 50.0], [7.0, 7.0], 0.0),
        ("single-anisotropic", [0.0, 0.0], [7.0, 20.0], 0.0),
        (
            "single-rotated",
            [0.0, 0.0],
            [7.0, 20.0],
            std::f64::consts::FRAC_PI_4,
        ),
    ];
    let samples = 100_000usize;
    for (name, center, sigma, angle) in cases {
        let mut config = preset(name).unwrap();
        config.sampling.window_capacity = samples;
        let output = run(&config, Some(2002), Some(0)).unwrap();

        let mut theta = DMatrix::zeros(2, 2);
        theta[(0, 1)] = angle;
        let rotation = build_rotation(&theta, 2).unwrap();
        let diag = DMatrix::from_diagonal(&DVector::from_vec(vec![
            sigma[0] * sigma[0],
            sigma[1] * sigma[1],
        ]));
        let target = rotation.matrix().transpose() * diag * rotation.matrix();

        let n = output.window.len() as f64;
        let mut mean = [0.0f64; 2];
        for point in output.window.iter() {
            mean[0] += point.coords[0];
            mean[1] += point.coords[1];
        }
        mean[0] /= n;
        mean[1] /= n;
        for j in 0..2 {
            // 5% of the center, read against the per-axis scale when the
            // center coordinate is zero.
            let scale = center[j].abs().max(target[(j, j)].sqrt());
            criterion.check(
                (mean[j] - center[j]).abs() <= 0.05 * scale,
                &format!("{name}: mean[{j}] = {} vs center {}", mean[j], center[j]),
            );
        }
        let mut cov = [[0.0f64; 2]; 2];
        for point in output.window.iter() {
            let dx = point.coords[0] - mean[0];
            let dy = point.coords[1] - mean[1];
            cov[0][0] += dx * dx;
            cov[0][1] += dx * dy;
            cov[1][0] += dy * dx;
            cov[1][1] += dy * dy;
        }
        let scale = (target[(0, 0)] * target[(1, 1)]).sqrt();
        for i in 0..2 {
            for j in 0..2 {
                let got = cov[i][j] / n;
                criterion.check(
                    (got - target[(i, j)]).abs() <= 0.05 * scale,
                    &format!("{name}: cov[{i}][{j}] = {got} vs {}", target[(i, j)]),
                );
            }
        }
    }
    criterion.check(
        criterion.elapsed() < Duration::from_secs(10),
        "exceeded the 10 s budget",
    );
    criterion.pass();
}

#[test]
fn criterion_03_weight_proportionality() {
    let criterion = Criterion::start(3, "weight proportionality");
    let mut config = preset("static-mixture").unwrap();
    config.sampling.window_capacity = 100_000;
    let output = run(&config, Some(3003), Some(0)).unwrap();
    let n = output.window.len() as f64;
    let mut counts = [0usize; 3];
    for point in output.window.iter() {
        counts[point.source_dgc] += 1;
    }
    for (i, expected) in [0.3, 0.5, 0.2].into_iter().enumerate() {
        let share = counts[i] as f64 / n;
        criterion.check(
            (share - expected).abs() <= 0.01,
            &format!("component {i} share {share} vs {expected}"),
        );
    }
    criterion.pass();
}

#[test]
fn criterion_04_correlation_ordering() {
    let criterion = Criterion::start(4, "correlation ordering");
    let bounds = wide_bounds(1000.0, 2);
    let replicates = 100;
    let median_displacement = |rho: f64, salt: u64| {
        let mut finals: Vec<f64> = (0..replicates)
            .map(|rep| {
                let mut dgc = drift_component(4000 + salt * 1000 + rep, rho);
                for _ in 0..1000 {
                    shift_center(&mut dgc, &bounds).unwrap();
                }
                dgc.center.norm()
            })
            .collect();
        finals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        (finals[replicates as usize / 2 - 1] + finals[replicates as usize / 2]) / 2.0
    };
    let low = median_displacement(0.0, 1);
    let mid = median_displacement(0.5, 2);
    let high = median_displacement(0.9, 3);
    criterion.check(
        low < mid && mid < high,
        &format!("medians not increasing: {low} {mid} {high}"),
    );
    criterion.check(
        low < 0.2 * high,
        &format!("rho 0.0 median {low} not below 0.2 x rho 0.9 median {high}"),
    );
    criterion.check(
        criterion.elapsed() < Duration::from_secs(60),
        "exceeded the 60 s budget",
    );
    criterion.pass();
}

#[test]
fn criterion_05_drift_regimes() {
    let criterion = Criterion::start(5, "drift regimes");

    // Sawtooth: severity 1, flip probability 0. Direction changes only at
    // boundary reflections, and the walk sweeps boundary to boundary.
    let range = Interval::new(0.0, 100.0);
    let mut stream = RandomStream::master(5005);
    let mut value = 50.0;
    let mut dir = Sign::Plus;
    let mut bounces = 0;
    for _ in 0..1000 {
        let out = drift_scalar(value, dir, 1.0, range, 0.0, &mut stream).unwrap();
        criterion.check(!out.random_flip, "random flip with flip_prob 0");
        if out.dir != dir {
            criterion.check(out.boundary_flip, "direction changed without a reflection");
            bounces += 1;
        }
        value = out.value;
        dir = out.dir;
    }
    criterion.check(bounces >= 3, &format!("only {bounces} boundary bounces"));

    // Uncorrelated small steps: severity 0.1, flip probability 0.5 keeps the
    // walk within 25 of its start in at least 95% of replicates.
    let replicates = 1000;
    let mut near = 0;
    for rep in 0..replicates {
        let mut stream = RandomStream::master(50_000 + rep);
        let mut value = 50.0;
        let mut dir = Sign::Plus;
        for _ in 0..1000 {
            let out = drift_scalar(value, dir, 0.1, range, 0.5, &mut stream).unwrap();
            value = out.value;
            dir = out.dir;
        }
        if (value - 50.0).abs() < 25.0 {
            near += 1;
        }
    }
    criterion.check(
        near as f64 >= 0.95 * replicates as f64,
        &format!("{near}/{replicates} replicates stayed near the start"),
    );
    criterion.pass();
}

#[test]
fn criterion_06_heavy_tail_shocks() {
    let criterion = Criterion::start(6, "heavy-tail shocks");
    let mut stream = RandomStream::master(6006);
    let n = 1_000_000;
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut tail = 0usize;
    let mut core = 0usize;
    for _ in 0..n {
        let x = stream.beta_symmetric(0.1).unwrap();
        sum += x;
        sum_sq += x * x;
        if x.abs() > 0.9 {
            tail += 1;
        }
        if x.abs() < 0.1 {
            core += 1;
        }
    }
    let mean = sum / n as f64;
    let variance = sum_sq / n as f64 - mean * mean;
    let expected = 1.0 / (2.0 * 0.1 + 1.0);
    criterion.check(
        (variance - expected).abs() <= 0.02,
        &format!("variance {variance} vs {expected}"),
    );
    criterion.check(
        tail > core,
        &format!("tail mass {tail} not above center mass {core}"),
    );
    criterion.pass();
}

#[test]
fn criterion_07_event_rate_calibration() {
    let criterion = Criterion::start(7, "event-rate calibration");
    let mut config = preset("kitchen-sink").unwrap();
    let p = 0.05;
    config.ticks = 100_000;
    config.sampling.window_capacity = 100;
    config.local.change_prob = p;
    config.global.prob = p;
    config.structure.dgc_count_prob = p;
    config.structure.var_count_prob = p;
    config.structure.cluster_count_prob = p;
    config.sampling.prob = p;

    let mut engine = Engine::from_config(&config).unwrap();
    let mut local_fired = 0u64;
    let mut local_opportunities = 0u64;
    let mut fired = [0u64; 4]; // global, dgc-count, var-count, cluster-count
    let mut sampling_fired = 0u64;
    let mut sampling_opportunities = 0u64;
    for _ in 0..config.ticks {
        local_opportunities += engine.state.dgc_count() as u64;
        let events = engine.advance().unwrap();
        let mut resampled = false;
        for event in events {
            match event.kind {
                EventKind::Local { .. } => local_fired += 1,
                EventKind::GlobalShock { .. } => fired[0] += 1,
                EventKind::DgcCount { .. } => fired[1] += 1,
                EventKind::VarCount { .. } => fired[2] += 1,
                EventKind::ClusterCount { .. } => fired[3] += 1,
                EventKind::IncrementalSample { .. } => sampling_fired += 1,
                EventKind::FullResample { .. } => resampled = true,
            }
        }
        // The sampling gate is only drawn on ticks without a full resample.
        if !resampled {
            sampling_opportunities += 1;
        }
    }
    let ticks = config.ticks as f64;
    let mut rates = vec![
        ("local", local_fired as f64 / local_opportunities as f64),
        ("global-shock", fired[0] as f64 / ticks),
        ("dgc-count", fired[1] as f64 / ticks),
        ("var-count", fired[2] as f64 / ticks),
        ("cluster-count", fired[3] as f64 / ticks),
    ];
    rates.push((
        "incremental-sample",
        sampling_fired as f64 / sampling_opportunities as f64,
    ));
    for (gate, rate) in rates {
        criterion.check(
            (rate - p).abs() <= 0.1 * p,
            &format!("{gate} fired at {rate:.4}, expected {p} +/- 10%"),
        );
    }
    criterion.pass();
}

#[test]
fn criterion_08_structural_integrity_fuzz() {
    let criterion = Criterion::start(8, "structural integrity fuzz");
    let mut config = preset("kitchen-sink").unwrap();
    config.ticks = 1_000_000;
    config.sampling.window_capacity = 200;
    config.local.change_prob = 0.02;
    config.global.prob = 1e-3;
    config.structure.dgc_count_prob = 1e-3;
    config.structure.var_count_prob = 1e-3;
    config.structure.cluster_count_prob = 1e-3;

    let mut engine = Engine::from_config(&config).unwrap();
    for tick in 0..config.ticks {
        let resample_trigger;
        let resampled;
        {
            let events = engine.advance().unwrap();
            resample_trigger = events.iter().any(|e| {
                matches!(
                    e.kind,
                    EventKind::GlobalShock { .. }
                        | EventKind::DgcCount { .. }
                        | EventKind::VarCount { .. }
                )
            });
            resampled = events
                .iter()
                .any(|e| matches!(e.kind, EventKind::FullResample { .. }));
        }
        if let Err(violation) = engine.check_invariants() {
            criterion.check(false, &format!("tick {tick}: {violation}"));
        }
        criterion.check(
            resample_trigger == resampled,
            &format!("tick {tick} broke the resample pairing rule"),
        );
    }
    criterion.pass();
}

#[test]
fn criterion_09_determinism() {
    let criterion = Criterion::start(9, "determinism");
    for name in ["static-mixture", "drift-rho09", "kitchen-sink"] {
        let mut config = preset(name).unwrap();
        config.ticks = config.ticks.min(3000);
        let a = run(&config, Some(909), None).unwrap();
        let b = run(&config, Some(909), None).unwrap();
        criterion.check(
            event_log_string(&a.header, &a.events).unwrap()
                == event_log_string(&b.header, &b.events).unwrap(),
            &format!("{name}: event logs diverged"),
        );
        criterion.check(
            window_csv(&a.window.to_points(), a.state.dims)
                == window_csv(&b.window.to_points(), b.state.dims),
            &format!("{name}: exported datasets diverged"),
        );
    }
    criterion.pass();
}

#[test]
fn criterion_10_metric_oracles() {
    let criterion = Criterion::start(10, "metric oracles");

    // Intra-cluster distance vs. a brute-force double loop.
    let mut stream = RandomStream::master(1010);
    for _ in 0..100 {
        let d = 2 + stream.uniform_index(3);
        let points: Vec<Vec<f64>> = (0..60)
            .map(|_| (0..d).map(|_| stream.uniform(-50.0, 50.0)).collect())
            .collect();
        let centers: Vec<Vec<f64>> = (0..3)
            .map(|_| (0..d).map(|_| stream.uniform(-50.0, 50.0)).collect())
            .collect();
        let window = ddg::engine::DatasetWindow::from_raw_points(
            points
                .iter()
                .map(|p| ddg::engine::DataPoint {
                    coords: DVector::from_vec(p.clone()),
                    birth_tick: 0,
                    source_dgc: 0,
                })
                .collect(),
        );
        let solution = ClusteringSolution::new(
            centers.iter().map(|c| DVector::from_vec(c.clone())).collect(),
        )
        .unwrap();
        let got = intra_cluster_distance(&solution, &window).unwrap();
        let mut expected = 0.0;
        for p in &points {
            let mut best = f64::INFINITY;
            for c in &centers {
                let dist: f64 = p
                    .iter()
                    .zip(c)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                best = best.min(dist);
            }
            expected += best;
        }
        criterion.check(
            (got - expected).abs() < 1e-9,
            &format!("distance {got} vs oracle {expected}"),
        );
    }

    // Offline performance vs. an independent log replay, on real records
    // from a dynamic run.
    let mut config = preset("kitchen-sink").unwrap();
    config.ticks = 2000;
    config.sampling.window_capacity = 150;
    config.sampling.prob = 0.2;
    let mut engine = Engine::from_config(&config).unwrap();
    let mut optimizer = RandomStream::new(config.seed, Substream::Optimizer);
    let records =
        baseline_optimize(&mut engine, &IntraClusterDistance, 2000, 4000.0, &mut optimizer)
            .unwrap();
    let mut best = f64::INFINITY;
    let mut total = 0.0;
    for record in &records {
        if let Some(rescored) = record.rescored_incumbent {
            best = rescored;
        }
        best = best.min(record.evaluated);
        total += best;
    }
    let replayed = total / records.len() as f64;
    criterion.check(
        offline_performance(&records) == replayed,
        &format!(
            "offline performance {} vs replay {replayed}",
            offline_performance(&records)
        ),
    );

    // Robustness survival vs. hand-built synthetic logs.
    let make = |deployed: f64| EvaluationRecord {
        tick: 0,
        evaluated: deployed,
        rescored_incumbent: None,
        running_best: deployed,
        deployed_value: deployed,
        redeployed: false,
    };
    let mut synthetic = Vec::new();
    for i in 1..=300u64 {
        let breach = i == 100 || i == 150 || i == 300;
        synthetic.push(make(if breach { 10.0 } else { 1.0 }));
    }
    criterion.check(
        root_survival(&synthetic, 5.0).unwrap() == 100.0,
        "synthetic intervals [100, 50, 150] must average 100",
    );
    let steady: Vec<_> = (0..777).map(|_| make(1.0)).collect();
    criterion.check(
        root_survival(&steady, 5.0).unwrap() == 777.0,
        "a never-breached run is one interval",
    );
    let churn: Vec<_> = (0..50).map(|_| make(10.0)).collect();
    criterion.check(
        root_survival(&churn, 5.0).unwrap() == 1.0,
        "breaching every tick must average 1",
    );
    criterion.pass();
}

#[test]
fn criterion_11_end_to_end() {
    let criterion = Criterion::start(11, "end to end");

    // Baseline on a static single-component 2-D scenario: within 10% of a
    // fine grid oracle on the same window within 10^4 evaluations.
    let mut config = preset("single-isotropic").unwrap();
    config.ticks = 10_000;
    config.sampling.window_capacity = 2500;
    let mut engine = Engine::from_config(&config).unwrap();
    let window_for_oracle = engine.window.clone();
    let mut optimizer = RandomStream::new(config.seed, Substream::Optimizer);
    let records =
        baseline_optimize(&mut engine, &IntraClusterDistance, 10_000, 1e12, &mut optimizer)
            .unwrap();
    let reached = records.last().unwrap().running_best;

    // Grid oracle: evaluate the 1-median objective at every cell center of a
    // 200x200 grid over the window's bounding box.
    let (mut x_lo, mut x_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y_lo, mut y_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in window_for_oracle.iter() {
        x_lo = x_lo.min(p.coords[0]);
        x_hi = x_hi.max(p.coords[0]);
        y_lo = y_lo.min(p.coords[1]);
        y_hi = y_hi.max(p.coords[1]);
    }
    let cells = 200;
    let mut grid_best = f64::INFINITY;
    for iy in 0..cells {
        let y = y_lo + (iy as f64 + 0.5) * (y_hi - y_lo) / cells as f64;
        for ix in 0..cells {
            let x = x_lo + (ix as f64 + 0.5) * (x_hi - x_lo) / cells as f64;
            let mut total = 0.0;
            for p in window_for_oracle.iter() {
                let dx = p.coords[0] - x;
                let dy = p.coords[1] - y;
                total += (dx * dx + dy * dy).sqrt();
            }
            grid_best = grid_best.min(total);
        }
    }
    criterion.check(
        reached <= 1.10 * grid_best,
        &format!("baseline reached {reached}, grid oracle {grid_best}"),
    );

    // The kitchen sink completes 10^5 ticks under the harness and emits a
    // well-formed report within the time budget.
    let started = Instant::now();
    let mut config = preset("kitchen-sink").unwrap();
    config.ticks = 100_000;
    let mut engine = Engine::from_config(&config).unwrap();
    let mut optimizer = RandomStream::new(config.seed, Substream::Optimizer);
    let records = baseline_optimize(
        &mut engine,
        &IntraClusterDistance,
        100_000,
        60_000.0,
        &mut optimizer,
    )
    .unwrap();
    let report = ddg::evaluation::metrics_report(&records, engine.events(), 60_000.0);
    criterion.check(records.len() == 100_000, "harness lost evaluations");
    criterion.check(
        report.contains("offline performance:") && report.contains("root survival"),
        "report is missing required metrics",
    );
    criterion.check(
        started.elapsed() < Duration::from_secs(60),
        &format!(
            "kitchen-sink run took {:.1}s, budget is 60s",
            started.elapsed().as_secs_f64()
        ),
    );
    criterion.pass();
}
