//! Clustering objectives and dynamic performance measurement, plus a small
//! reference optimizer so a scenario can be benchmarked end to end.
//!
//! Performance in a changing environment is measured over every function
//! evaluation rather than per environment: the running best is re-scored on
//! the new window after every dataset change, and offline performance is the
//! mean of the running best across all evaluations. Robustness over time is
//! scored by how long a deployed solution keeps acceptable quality before it
//! must be replaced.

use nalgebra::DVector;

use crate::engine::{DatasetWindow, Engine};
use crate::error::{Error, Result};
use crate::stochastics::RandomStream;

/// Prototype-based clustering solution: one center per cluster, in the data
/// space.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringSolution {
    centers: Vec<DVector<f64>>,
}

impl ClusteringSolution {
    pub fn new(centers: Vec<DVector<f64>>) -> Result<Self> {
        if centers.is_empty() {
            return Err(Error::ModelViolation(
                "a solution needs at least one center".into(),
            ));
        }
        let d = centers[0].len();
        for (i, center) in centers.iter().enumerate() {
            if center.len() != d {
                return Err(Error::ModelViolation(format!(
                    "center {i} has {} dims, center 0 has {d}",
                    center.len()
                )));
            }
            if center.iter().any(|x| !x.is_finite()) {
                return Err(Error::ModelViolation(format!("center {i} is not finite")));
            }
        }
        Ok(Self { centers })
    }

    pub fn centers(&self) -> &[DVector<f64>] {
        &self.centers
    }

    pub fn kappa(&self) -> usize {
        self.centers.len()
    }

    pub fn dims(&self) -> usize {
        self.centers[0].len()
    }
}

/// The single contract every clustering objective implements. Only the
/// intra-cluster-distance objective ships; alternatives plug in here.
pub trait ClusteringObjective {
    fn evaluate(&self, solution: &ClusteringSolution, window: &DatasetWindow) -> Result<f64>;
}

/// Sum over all points of the Euclidean distance to the nearest center
/// (the |P|-median objective in real-valued space).
pub struct IntraClusterDistance;

impl ClusteringObjective for IntraClusterDistance {
    fn evaluate(&self, solution: &ClusteringSolution, window: &DatasetWindow) -> Result<f64> {
        intra_cluster_distance(solution, window)
    }
}

fn squared_distance(a: &DVector<f64>, b: &DVector<f64>) -> f64 {
    let mut acc = 0.0;
    for i in 0..a.len() {
        let diff = a[i] - b[i];
        acc += diff * diff;
    }
    acc
}

/// Sum of distances from every window point to its nearest center. Ties
/// between centers go to the lowest center index. A solution built for a
/// different dimensionality fails with a stale-solution error so harnesses
/// can trigger repair.
pub fn intra_cluster_distance(
    solution: &ClusteringSolution,
    window: &DatasetWindow,
) -> Result<f64> {
    let Some(window_dims) = window.dims() else {
        return Ok(0.0);
    };
    if solution.dims() != window_dims {
        return Err(Error::StaleSolution {
            solution_dims: solution.dims(),
            window_dims,
        });
    }
    let mut total = 0.0;
    for point in window.iter() {
        let mut best = f64::INFINITY;
        for center in &solution.centers {
            let dist = squared_distance(&point.coords, center);
            if dist < best {
                best = dist;
            }
        }
        total += best.sqrt();
    }
    Ok(total)
}

/// Index of each point's nearest center, lowest index winning ties.
fn assign_points(solution: &ClusteringSolution, window: &DatasetWindow) -> Vec<usize> {
    window
        .iter()
        .map(|point| {
            let mut best = f64::INFINITY;
            let mut index = 0;
            for (i, center) in solution.centers.iter().enumerate() {
                let dist = squared_distance(&point.coords, center);
                if dist < best {
                    best = dist;
                    index = i;
                }
            }
            index
        })
        .collect()
}

/// One function evaluation's bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationRecord {
    /// Engine tick at which the evaluation happened.
    pub tick: u64,
    /// Objective value of the solution evaluated this tick.
    pub evaluated: f64,
    /// Re-scored objective of the incumbent, present when the dataset
    /// changed just before this evaluation.
    pub rescored_incumbent: Option<f64>,
    /// Running best after this evaluation: the minimum over evaluations
    /// since the last dataset change, seeded by the re-scored incumbent.
    pub running_best: f64,
    /// Objective of the currently deployed solution on this tick's window.
    pub deployed_value: f64,
    /// Whether the deployment was replaced at this tick (its value breached
    /// the acceptable-quality threshold).
    pub redeployed: bool,
}

/// Mean of the running best over every function evaluation.
pub fn offline_performance(records: &[EvaluationRecord]) -> f64 {
    assert!(
        !records.is_empty(),
        "offline performance needs at least one record"
    );
    records.iter().map(|r| r.running_best).sum::<f64>() / records.len() as f64
}

/// Mean length, in function evaluations, of the deployment intervals: a
/// solution stays deployed until its re-evaluated objective exceeds
/// `threshold`, at which point the current best takes its place. The final,
/// still-open interval counts.
pub fn root_survival(records: &[EvaluationRecord], threshold: f64) -> Result<f64> {
    if !threshold.is_finite() {
        return Err(Error::config(
            "root_threshold",
            "acceptable-quality threshold must be finite",
        ));
    }
    if records.is_empty() {
        return Err(Error::config(
            "records",
            "robustness scoring needs at least one deployment",
        ));
    }
    let mut lengths: Vec<u64> = Vec::new();
    let mut current = 0u64;
    for record in records {
        current += 1;
        if record.deployed_value > threshold {
            lengths.push(current);
            current = 0;
        }
    }
    if current > 0 {
        lengths.push(current);
    }
    Ok(lengths.iter().sum::<u64>() as f64 / lengths.len() as f64)
}

/// Centers placed on uniformly chosen window points.
fn seed_solution(
    window: &DatasetWindow,
    kappa: usize,
    stream: &mut RandomStream,
) -> Result<ClusteringSolution> {
    let points: Vec<&DVector<f64>> = window.iter().map(|p| &p.coords).collect();
    if points.is_empty() {
        return Err(Error::ModelViolation(
            "cannot seed a solution from an empty window".into(),
        ));
    }
    let centers = (0..kappa)
        .map(|_| points[stream.uniform_index(points.len())].clone())
        .collect();
    ClusteringSolution::new(centers)
}

/// Gaussian perturbation of every center, followed by a repair step that
/// re-seeds any center left without assigned points onto a random window
/// point.
fn perturb(
    solution: &ClusteringSolution,
    step: f64,
    window: &DatasetWindow,
    stream: &mut RandomStream,
) -> Result<ClusteringSolution> {
    let centers: Vec<DVector<f64>> = solution
        .centers
        .iter()
        .map(|c| DVector::from_fn(c.len(), |j, _| c[j] + stream.normal() * step))
        .collect();
    let mut candidate = ClusteringSolution::new(centers)?;
    let assignments = assign_points(&candidate, window);
    let mut counts = vec![0usize; candidate.kappa()];
    for a in &assignments {
        counts[*a] += 1;
    }
    let points: Vec<&DVector<f64>> = window.iter().map(|p| &p.coords).collect();
    for (i, count) in counts.iter().enumerate() {
        if *count == 0 && !points.is_empty() {
            candidate.centers[i] = points[stream.uniform_index(points.len())].clone();
        }
    }
    Ok(candidate)
}

/// Resize a solution after a cluster-count change: extra centers seed on
/// random window points, surplus centers drop from the end.
fn resize_solution(
    solution: &ClusteringSolution,
    kappa: usize,
    window: &DatasetWindow,
    stream: &mut RandomStream,
) -> Result<ClusteringSolution> {
    let mut centers = solution.centers.to_vec();
    centers.truncate(kappa);
    let points: Vec<&DVector<f64>> = window.iter().map(|p| &p.coords).collect();
    while centers.len() < kappa {
        centers.push(points[stream.uniform_index(points.len())].clone());
    }
    ClusteringSolution::new(centers)
}

const ADAPT_EVERY: u64 = 20;
const STEP_GROW: f64 = 1.3;
const STEP_SHRINK: f64 = 0.75;

/// A (1+1) evolution strategy over center positions, driving the engine one
/// tick per objective call.
///
/// On every dataset change the incumbent is re-scored (bookkeeping only, no
/// tick consumed). Cluster-count events resize the solutions; a variable
/// count change invalidates them, and they are re-seeded from the freshly
/// resampled window. The deployed solution is replaced whenever its quality
/// breaches `root_threshold`. Deterministic given the engine seed and
/// `stream`.
pub fn baseline_optimize(
    engine: &mut Engine,
    objective: &dyn ClusteringObjective,
    budget: u64,
    root_threshold: f64,
    stream: &mut RandomStream,
) -> Result<Vec<EvaluationRecord>> {
    if budget < 1 {
        return Err(Error::config("budget", "needs at least one evaluation"));
    }
    if !root_threshold.is_finite() {
        return Err(Error::config(
            "root_threshold",
            "acceptable-quality threshold must be finite",
        ));
    }

    let mut incumbent = seed_solution(&engine.window, engine.state.kappa, stream)?;
    let mut incumbent_value: Option<f64> = None;
    let mut deployed = incumbent.clone();

    let span = engine
        .state
        .bounds
        .lower
        .iter()
        .zip(&engine.state.bounds.upper)
        .map(|(lb, ub)| ub - lb)
        .sum::<f64>()
        / engine.state.dims as f64;
    let mut step = 0.1 * span;
    let mut successes = 0u64;
    let mut records = Vec::with_capacity(budget as usize);

    for eval in 0..budget {
        let data_changed = match engine.advance() {
            Ok(events) => events.iter().any(|e| e.kind.is_data_change()),
            Err(Error::RunComplete { .. }) => break,
            Err(other) => return Err(other),
        };
        let kappa = engine.state.kappa;
        let tick = engine.state.tick;

        // Structural repairs before anything is scored.
        if incumbent.dims() != engine.state.dims {
            incumbent = seed_solution(&engine.window, kappa, stream)?;
            incumbent_value = None;
            deployed = incumbent.clone();
        }
        if incumbent.kappa() != kappa {
            incumbent = resize_solution(&incumbent, kappa, &engine.window, stream)?;
            incumbent_value = None;
        }
        if deployed.kappa() != kappa {
            deployed = resize_solution(&deployed, kappa, &engine.window, stream)?;
        }

        // Mandatory post-change re-evaluation of the incumbent; bookkeeping
        // only, no tick consumed.
        let rescored_incumbent = if data_changed || incumbent_value.is_none() {
            let value = objective.evaluate(&incumbent, &engine.window)?;
            incumbent_value = Some(value);
            Some(value)
        } else {
            None
        };

        // The budgeted evaluation for this tick.
        let candidate = if eval == 0 {
            incumbent.clone()
        } else {
            perturb(&incumbent, step, &engine.window, stream)?
        };
        let evaluated = objective.evaluate(&candidate, &engine.window)?;
        let current = incumbent_value.expect("set above");
        if evaluated <= current {
            incumbent = candidate;
            incumbent_value = Some(evaluated);
            successes += 1;
        }
        let running_best = incumbent_value.expect("set above");

        let deployed_value = objective.evaluate(&deployed, &engine.window)?;
        let redeployed = deployed_value > root_threshold;
        if redeployed {
            deployed = incumbent.clone();
        }

        records.push(EvaluationRecord {
            tick,
            evaluated,
            rescored_incumbent,
            running_best,
            deployed_value,
            redeployed,
        });

        // 1/5-style step adaptation.
        if (eval + 1) % ADAPT_EVERY == 0 {
            if successes as f64 / ADAPT_EVERY as f64 > 0.2 {
                step *= STEP_GROW;
            } else {
                step *= STEP_SHRINK;
            }
            step = step.clamp(1e-9 * span, 2.0 * span);
            successes = 0;
        }
    }
    Ok(records)
}

/// Human-readable summary of a benchmarked run.
pub fn metrics_report(
    records: &[EvaluationRecord],
    events: &[crate::engine::ChangeEvent],
    root_threshold: f64,
) -> String {
    use std::collections::BTreeMap;
    use std::fmt::Write;

    let mut out = String::new();
    let _ = writeln!(out, "evaluations: {}", records.len());
    if !records.is_empty() {
        let _ = writeln!(out, "offline performance: {:.6}", offline_performance(records));
        match root_survival(records, root_threshold) {
            Ok(survival) => {
                let deployments = records.iter().filter(|r| r.redeployed).count() + 1;
                let _ = writeln!(
                    out,
                    "root survival (threshold {root_threshold}): {survival:.3} evaluations over {deployments} deployments"
                );
            }
            Err(e) => {
                let _ = writeln!(out, "root survival: unavailable ({e})");
            }
        }
        let _ = writeln!(
            out,
            "final running best: {:.6}",
            records.last().map(|r| r.running_best).unwrap_or(f64::NAN)
        );
    }
    let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
    for event in events {
        *counts.entry(event.kind.name()).or_default() += 1;
    }
    let _ = writeln!(out, "events:");
    for (name, count) in counts {
        let _ = writeln!(out, "  {name}: {count}");
    }
    out
}
