//! The discrete-event run loop: one time tick per function evaluation, with
//! every dynamic fired as an independent Bernoulli gate, a fixed-size FIFO
//! dataset window, weight-proportional sampling, and a change-event log.
//!
//! Gate order within a tick is fixed: local bundles per component (in index
//! order), global shock, component count, variable count, cluster count, then
//! data refresh. A fired shock, component-count, or variable-count change
//! triggers a full resample of the window; otherwise the sampling gate may
//! replace the oldest fraction of points. Cluster-count changes never touch
//! the window.

use std::collections::VecDeque;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::config::{DgcPin, ScenarioConfig};
use crate::dynamics::global::{
    apply_global_shock, change_cluster_count, change_dgc_count, change_var_count, GlobalSeverities,
};
use crate::dynamics::local::{apply_local_bundle, FlipRecord};
use crate::error::{Error, Result};
use crate::model::{Bounds, DgcState, LocalDynamics, Sign};
use crate::stochastics::{RandomStream, Substream, PRNG_ID};

/// The named substreams one engine owns. Component-local streams live inside
/// each [`DgcState`].
#[derive(Debug, Clone)]
pub(crate) struct EngineStreams {
    pub(crate) sampling: RandomStream,
    pub(crate) global: RandomStream,
    pub(crate) dgc_count: RandomStream,
    pub(crate) var_count: RandomStream,
    pub(crate) cluster_count: RandomStream,
}

impl EngineStreams {
    fn new(seed: u64) -> Self {
        Self {
            sampling: RandomStream::new(seed, Substream::Sampling),
            global: RandomStream::new(seed, Substream::GlobalShock),
            dgc_count: RandomStream::new(seed, Substream::DgcCount),
            var_count: RandomStream::new(seed, Substream::VarCount),
            cluster_count: RandomStream::new(seed, Substream::ClusterCount),
        }
    }
}

/// The full environment at one tick: components, counts, ranges, severities,
/// and the engine's private random streams.
#[derive(Debug, Clone)]
pub struct GeneratorState {
    /// Current tick (function evaluation index).
    pub tick: u64,
    /// Current variable count.
    pub dims: usize,
    /// Current cluster count handed to consumers.
    pub kappa: usize,
    /// The live components; the component count is `dgcs.len()`.
    pub dgcs: Vec<DgcState>,
    /// Active parameter ranges (data bounds track `dims`).
    pub bounds: Bounds,
    /// Global-event severities and gate probabilities.
    pub globals: GlobalSeverities,
    /// Per-tick probability of an incremental sampling event.
    pub sample_prob: f64,
    /// Fraction of the window replaced per incremental sampling event.
    pub refresh_fraction: f64,
    /// Fixed window capacity.
    pub window_capacity: usize,
    /// Local-dynamics knobs given to newly spawned components.
    pub default_local: LocalDynamics,
    pub(crate) streams: EngineStreams,
    pub(crate) pending_resample: bool,
    /// Configured data bounds for every dimension slot up to the maximum
    /// variable count; a dimension added when `d` are active takes slot `d`.
    pub(crate) master_lower: Vec<f64>,
    pub(crate) master_upper: Vec<f64>,
    seed: u64,
    spawn_count: u64,
}

impl GeneratorState {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        seed: u64,
        dims: usize,
        kappa: usize,
        bounds: Bounds,
        globals: GlobalSeverities,
        sample_prob: f64,
        refresh_fraction: f64,
        window_capacity: usize,
        default_local: LocalDynamics,
        master_lower: Vec<f64>,
        master_upper: Vec<f64>,
    ) -> Self {
        Self {
            tick: 0,
            dims,
            kappa,
            dgcs: Vec::new(),
            bounds,
            globals,
            sample_prob,
            refresh_fraction,
            window_capacity,
            default_local,
            streams: EngineStreams::new(seed),
            pending_resample: false,
            master_lower,
            master_upper,
            seed,
            spawn_count: 0,
        }
    }

    /// Current component count.
    pub fn dgc_count(&self) -> usize {
        self.dgcs.len()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Spawn a component with every parameter drawn uniformly in its range
    /// (except where `pin` fixes a value), a fresh unit-vector heading,
    /// random ±1 direction factors, and the scenario's default local
    /// dynamics. The component gets its own private stream, derived from the
    /// master seed and a monotone spawn counter so later structural changes
    /// cannot perturb it.
    pub(crate) fn spawn_dgc(&mut self, pin: Option<&DgcPin>) -> Result<DgcState> {
        let mut stream = RandomStream::new(self.seed, Substream::DgcLocal(self.spawn_count));
        self.spawn_count += 1;
        let d = self.dims;

        let center = match pin.and_then(|p| p.center.as_ref()) {
            Some(values) => {
                if values.len() != d {
                    return Err(Error::config(
                        "dgc.center",
                        format!("expected {d} coordinates, got {}", values.len()),
                    ));
                }
                DVector::from_vec(values.clone())
            }
            None => DVector::from_fn(d, |j, _| {
                stream.uniform(self.bounds.lower[j], self.bounds.upper[j])
            }),
        };
        let sigma = match pin.and_then(|p| p.sigma.as_ref()) {
            Some(values) => {
                if values.len() != d {
                    return Err(Error::config(
                        "dgc.sigma",
                        format!("expected {d} widths, got {}", values.len()),
                    ));
                }
                DVector::from_vec(values.clone())
            }
            None => {
                DVector::from_fn(d, |_, _| stream.uniform(self.bounds.sigma.min, self.bounds.sigma.max))
            }
        };
        let theta = match pin.map(|p| &p.theta) {
            Some(pins) if !pins.is_empty() => {
                let mut theta = DMatrix::zeros(d, d);
                for entry in pins {
                    if entry.row >= entry.col || entry.col >= d {
                        return Err(Error::config(
                            "dgc.theta",
                            format!(
                                "angle entry ({}, {}) must sit strictly above the diagonal of a {d}x{d} matrix",
                                entry.row, entry.col
                            ),
                        ));
                    }
                    theta[(entry.row, entry.col)] = entry.angle;
                }
                theta
            }
            // A pinned component without angle entries means "no rotation";
            // only fully random components draw their angles.
            Some(_) => DMatrix::zeros(d, d),
            None => {
                let mut theta = DMatrix::zeros(d, d);
                for j in 0..d {
                    for k in (j + 1)..d {
                        theta[(j, k)] = stream.uniform(self.bounds.angle.min, self.bounds.angle.max);
                    }
                }
                theta
            }
        };
        let weight = match pin.and_then(|p| p.weight) {
            Some(w) => w,
            None => stream.uniform(self.bounds.weight.min, self.bounds.weight.max),
        };
        let velocity = stream.unit_vector(d);
        let dir_sigma: Vec<Sign> = (0..d).map(|_| stream.rand_sign()).collect();
        let dir_weight = stream.rand_sign();
        let mut dir_theta = DMatrix::from_element(d, d, Sign::Plus);
        for j in 0..d {
            for k in (j + 1)..d {
                dir_theta[(j, k)] = stream.rand_sign();
            }
        }
        let dynamics = pin.map_or(self.default_local, |p| p.local_overrides(self.default_local));

        let dgc = DgcState::new(
            center, sigma, theta, weight, velocity, dir_sigma, dir_weight, dir_theta, dynamics,
            stream,
        );
        dgc.check_invariants(&self.bounds)?;
        Ok(dgc)
    }

    /// Data bounds for the next dimension slot when growing to `d + 1` dims.
    pub(crate) fn master_bounds_slot(&self, slot: usize) -> Result<(f64, f64)> {
        match (self.master_lower.get(slot), self.master_upper.get(slot)) {
            (Some(&lb), Some(&ub)) => Ok((lb, ub)),
            _ => Err(Error::ModelViolation(format!(
                "no configured data bounds for dimension slot {slot}"
            ))),
        }
    }

    /// Check every state invariant: counts inside their ranges, bound lists
    /// tracking the dimension count, and every component internally valid.
    pub fn check_invariants(&self) -> Result<()> {
        if !self.bounds.dims.contains(self.dims) {
            return Err(Error::ModelViolation(format!(
                "dimension count {} outside its range",
                self.dims
            )));
        }
        if !self.bounds.dgcs.contains(self.dgcs.len()) {
            return Err(Error::ModelViolation(format!(
                "component count {} outside its range",
                self.dgcs.len()
            )));
        }
        if !self.bounds.clusters.contains(self.kappa) {
            return Err(Error::ModelViolation(format!(
                "cluster count {} outside its range",
                self.kappa
            )));
        }
        if self.bounds.lower.len() != self.dims || self.bounds.upper.len() != self.dims {
            return Err(Error::ModelViolation(
                "active data bounds disagree with the dimension count".into(),
            ));
        }
        for (i, dgc) in self.dgcs.iter().enumerate() {
            if dgc.dims() != self.dims {
                return Err(Error::ModelViolation(format!(
                    "component {i} has {} dims, state has {}",
                    dgc.dims(),
                    self.dims
                )));
            }
            dgc.check_invariants(&self.bounds)?;
        }
        Ok(())
    }
}

/// One generated data point and its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct DataPoint {
    pub coords: DVector<f64>,
    /// Tick at which the point entered the window.
    pub birth_tick: u64,
    /// Index of the component that generated it, at generation time.
    pub source_dgc: usize,
}

/// Fixed-capacity FIFO buffer of data points. Position is age: the front is
/// always the oldest point, and incremental refreshes evict from the front.
#[derive(Debug, Clone, PartialEq)]
pub struct DatasetWindow {
    points: VecDeque<DataPoint>,
    capacity: usize,
}

impl DatasetWindow {
    pub fn new(capacity: usize) -> Self {
        Self {
            points: VecDeque::with_capacity(capacity),
            capacity,
        }
    }

    /// Window holding exactly `points`, capacity equal to their number.
    /// Intended for harnesses scoring solutions against externally built
    /// datasets.
    pub fn from_raw_points(points: Vec<DataPoint>) -> Self {
        let capacity = points.len();
        Self {
            points: points.into(),
            capacity,
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Dimensionality of the stored points; `None` while empty.
    pub fn dims(&self) -> Option<usize> {
        self.points.front().map(|p| p.coords.len())
    }

    /// Oldest-to-newest iteration.
    pub fn iter(&self) -> impl Iterator<Item = &DataPoint> {
        self.points.iter()
    }

    pub fn to_points(&self) -> Vec<DataPoint> {
        self.points.iter().cloned().collect()
    }

    fn clear(&mut self) {
        self.points.clear();
    }

    fn evict_oldest(&mut self) -> Option<DataPoint> {
        self.points.pop_front()
    }

    fn push(&mut self, point: DataPoint) {
        self.points.push_back(point);
    }
}

/// Compact before/after record of one component's sampled parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DgcDigest {
    pub center: Vec<f64>,
    pub sigma: Vec<f64>,
    pub weight: f64,
    /// Strictly-upper angle entries, row-major.
    pub theta: Vec<f64>,
}

impl DgcDigest {
    pub fn of(dgc: &DgcState) -> Self {
        let d = dgc.dims();
        let mut theta = Vec::with_capacity(d * (d.saturating_sub(1)) / 2);
        for j in 0..d {
            for k in (j + 1)..d {
                theta.push(dgc.theta[(j, k)]);
            }
        }
        Self {
            center: dgc.center.iter().copied().collect(),
            sigma: dgc.sigma.iter().copied().collect(),
            weight: dgc.weight,
            theta,
        }
    }
}

/// What fired, with enough payload to audit the change.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EventKind {
    Local {
        dgc_index: usize,
        flips: Vec<FlipRecord>,
        before: DgcDigest,
        after: DgcDigest,
    },
    GlobalShock {
        before: Vec<DgcDigest>,
        after: Vec<DgcDigest>,
    },
    DgcCount {
        before: usize,
        after: usize,
    },
    VarCount {
        before: usize,
        after: usize,
    },
    ClusterCount {
        before: usize,
        after: usize,
    },
    IncrementalSample {
        replaced: usize,
    },
    FullResample {
        points: usize,
    },
}

impl EventKind {
    pub fn name(&self) -> &'static str {
        match self {
            EventKind::Local { .. } => "local",
            EventKind::GlobalShock { .. } => "global-shock",
            EventKind::DgcCount { .. } => "dgc-count",
            EventKind::VarCount { .. } => "var-count",
            EventKind::ClusterCount { .. } => "cluster-count",
            EventKind::IncrementalSample { .. } => "incremental-sample",
            EventKind::FullResample { .. } => "full-resample",
        }
    }

    /// Emission rank within a tick; events are strictly ordered by
    /// `(tick, rank, dgc_index)`.
    pub fn order_rank(&self) -> u8 {
        match self {
            EventKind::Local { .. } => 0,
            EventKind::GlobalShock { .. } => 1,
            EventKind::DgcCount { .. } => 2,
            EventKind::VarCount { .. } => 3,
            EventKind::ClusterCount { .. } => 4,
            EventKind::IncrementalSample { .. } => 5,
            EventKind::FullResample { .. } => 5,
        }
    }

    /// Did this event replace window contents?
    pub fn is_data_change(&self) -> bool {
        matches!(
            self,
            EventKind::IncrementalSample { .. } | EventKind::FullResample { .. }
        )
    }
}

/// One logged change: which dynamic fired at which tick.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChangeEvent {
    pub tick: u64,
    #[serde(flatten)]
    pub kind: EventKind,
}

/// Pick a component index with probability proportional to its weight.
pub fn draw_dgc_index(state: &mut GeneratorState) -> Result<usize> {
    if state.dgcs.is_empty() {
        return Err(Error::ModelViolation("no components to sample from".into()));
    }
    let total: f64 = state.dgcs.iter().map(|g| g.weight).sum();
    if !total.is_finite() || total <= 0.0 {
        return Err(Error::ModelViolation(format!(
            "component weights must sum to a positive finite value, got {total}"
        )));
    }
    let u = state.streams.sampling.uniform(0.0, total);
    let mut acc = 0.0;
    for (i, dgc) in state.dgcs.iter().enumerate() {
        acc += dgc.weight;
        if u < acc {
            return Ok(i);
        }
    }
    // u landed on the accumulated-rounding edge.
    Ok(state.dgcs.len() - 1)
}

fn generate_point(state: &mut GeneratorState) -> Result<DataPoint> {
    let index = draw_dgc_index(state)?;
    let d = state.dims;
    let noise = DVector::from_fn(d, |_, _| state.streams.sampling.normal());
    let coords = state.dgcs[index].sample(&noise)?;
    Ok(DataPoint {
        coords,
        birth_tick: state.tick,
        source_dgc: index,
    })
}

/// Replace the `⌈refresh_fraction · capacity⌉` oldest points with fresh draws
/// from the current state. Returns the number replaced.
pub fn incremental_sample(
    state: &mut GeneratorState,
    window: &mut DatasetWindow,
) -> Result<usize> {
    let count = (state.refresh_fraction * window.capacity() as f64).ceil() as usize;
    let count = count.min(window.len());
    for _ in 0..count {
        window.evict_oldest();
    }
    for _ in 0..count {
        let point = generate_point(state)?;
        window.push(point);
    }
    Ok(count)
}

/// Discard the whole window and refill it from the current state. Every new
/// point carries the current tick as its birth tick.
pub fn full_resample(state: &mut GeneratorState, window: &mut DatasetWindow) -> Result<()> {
    window.clear();
    for _ in 0..window.capacity() {
        let point = generate_point(state)?;
        window.push(point);
    }
    Ok(())
}

/// A running scenario: state, window, tick budget, and the accumulated event
/// log. One engine is strictly single-threaded; parallelism comes from
/// running independently seeded engines.
#[derive(Debug, Clone)]
pub struct Engine {
    pub state: GeneratorState,
    pub window: DatasetWindow,
    events: Vec<ChangeEvent>,
    t_max: u64,
}

impl Engine {
    /// Build the initial environment: spawn the configured components, then
    /// fill the window with an initial full resample. The initial fill counts
    /// as tick 0 and fires no dynamics.
    pub fn from_config(config: &ScenarioConfig) -> Result<Self> {
        config.validate()?;
        let mut state = config.build_state()?;
        let pins = &config.dgc;
        let count = if pins.is_empty() {
            config.components.count
        } else {
            pins.len()
        };
        for i in 0..count {
            let dgc = state.spawn_dgc(pins.get(i))?;
            state.dgcs.push(dgc);
        }
        state.check_invariants()?;

        let mut window = DatasetWindow::new(state.window_capacity);
        full_resample(&mut state, &mut window)?;
        let events = vec![ChangeEvent {
            tick: 0,
            kind: EventKind::FullResample {
                points: window.len(),
            },
        }];
        Ok(Self {
            state,
            window,
            events,
            t_max: config.ticks,
        })
    }

    pub fn tick(&self) -> u64 {
        self.state.tick
    }

    pub fn t_max(&self) -> u64 {
        self.t_max
    }

    /// Full event log, oldest first.
    pub fn events(&self) -> &[ChangeEvent] {
        &self.events
    }

    /// Advance one tick: evaluate every gate in the fixed order and refresh
    /// the window as required. Returns the events fired during this tick.
    /// Fails with [`Error::RunComplete`] once the tick budget is exhausted.
    pub fn advance(&mut self) -> Result<&[ChangeEvent]> {
        if self.state.tick >= self.t_max {
            return Err(Error::RunComplete { t_max: self.t_max });
        }
        self.state.tick += 1;
        let tick = self.state.tick;
        let first_event = self.events.len();

        // (1) Local bundles, component by component. The gate is drawn from
        // each component's private stream whether or not it fires.
        for i in 0..self.state.dgcs.len() {
            let change_prob = self.state.dgcs[i].dynamics.change_prob;
            let fired = self.state.dgcs[i].stream.bernoulli(change_prob)?;
            if !fired {
                continue;
            }
            let before = DgcDigest::of(&self.state.dgcs[i]);
            let flips = apply_local_bundle(&mut self.state.dgcs[i], &self.state.bounds)?;
            let after = DgcDigest::of(&self.state.dgcs[i]);
            self.events.push(ChangeEvent {
                tick,
                kind: EventKind::Local {
                    dgc_index: i,
                    flips,
                    before,
                    after,
                },
            });
        }

        // (2) Global shock across every component.
        let shock_fired = self
            .state
            .streams
            .global
            .bernoulli(self.state.globals.prob_global)?;
        if shock_fired {
            let before: Vec<DgcDigest> = self.state.dgcs.iter().map(DgcDigest::of).collect();
            apply_global_shock(&mut self.state)?;
            let after: Vec<DgcDigest> = self.state.dgcs.iter().map(DgcDigest::of).collect();
            self.events.push(ChangeEvent {
                tick,
                kind: EventKind::GlobalShock { before, after },
            });
        }

        // (3)–(5) Structural changes.
        if let Some(change) = change_dgc_count(&mut self.state)? {
            self.events.push(ChangeEvent {
                tick,
                kind: EventKind::DgcCount {
                    before: change.before,
                    after: change.after,
                },
            });
        }
        if let Some(change) = change_var_count(&mut self.state)? {
            self.events.push(ChangeEvent {
                tick,
                kind: EventKind::VarCount {
                    before: change.before,
                    after: change.after,
                },
            });
        }
        if let Some(change) = change_cluster_count(&mut self.state)? {
            self.events.push(ChangeEvent {
                tick,
                kind: EventKind::ClusterCount {
                    before: change.before,
                    after: change.after,
                },
            });
        }

        // (6) Data refresh, last so the window reflects all of this tick's
        // parameter changes. At most one full resample per tick.
        if self.state.pending_resample {
            self.state.pending_resample = false;
            full_resample(&mut self.state, &mut self.window)?;
            self.events.push(ChangeEvent {
                tick,
                kind: EventKind::FullResample {
                    points: self.window.len(),
                },
            });
        } else if self.state.streams.sampling.bernoulli(self.state.sample_prob)? {
            let replaced = incremental_sample(&mut self.state, &mut self.window)?;
            self.events.push(ChangeEvent {
                tick,
                kind: EventKind::IncrementalSample { replaced },
            });
        }

        Ok(&self.events[first_event..])
    }

    /// State plus window-capacity invariants, for fuzzing and debugging.
    pub fn check_invariants(&self) -> Result<()> {
        self.state.check_invariants()?;
        if self.window.len() != self.window.capacity() {
            return Err(Error::ModelViolation(format!(
                "window holds {} points, capacity is {}",
                self.window.len(),
                self.window.capacity()
            )));
        }
        if let Some(window_dims) = self.window.dims() {
            if window_dims != self.state.dims {
                return Err(Error::ModelViolation(format!(
                    "window points have {window_dims} dims, state has {}",
                    self.state.dims
                )));
            }
        }
        Ok(())
    }
}

/// Header describing a run's artifacts: schema, PRNG identity, seed, and a
/// hash of the normalized scenario.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogHeader {
    pub schema: String,
    pub prng: String,
    pub seed: u64,
    pub config_hash: String,
}

pub const EVENT_LOG_SCHEMA: &str = "ddg-events/1";

impl LogHeader {
    pub fn for_config(config: &ScenarioConfig) -> Result<Self> {
        Ok(Self {
            schema: EVENT_LOG_SCHEMA.to_string(),
            prng: PRNG_ID.to_string(),
            seed: config.seed,
            config_hash: crate::export::config_hash(config)?,
        })
    }
}

/// A copy of the window taken at one tick.
#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub tick: u64,
    pub points: Vec<DataPoint>,
}

/// Everything a finished run produces.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub header: LogHeader,
    pub state: GeneratorState,
    pub window: DatasetWindow,
    pub events: Vec<ChangeEvent>,
    pub snapshots: Vec<Snapshot>,
}

/// Run a scenario to completion in generate-only mode: initialize, then
/// advance through the full tick budget, collecting snapshots per the
/// configured policy. Deterministic given `(config, seed)`.
pub fn run(config: &ScenarioConfig, seed: Option<u64>, t_max: Option<u64>) -> Result<RunOutput> {
    let mut config = config.clone();
    if let Some(seed) = seed {
        config.seed = seed;
    }
    if let Some(ticks) = t_max {
        config.ticks = ticks;
    }
    let header = LogHeader::for_config(&config)?;
    let mut engine = Engine::from_config(&config)?;

    let every = config.snapshots.every;
    let on_resample = config.snapshots.on_resample;
    let mut snapshots = Vec::new();
    if on_resample {
        // The initial fill is a resample.
        snapshots.push(Snapshot {
            tick: 0,
            points: engine.window.to_points(),
        });
    }
    for _ in 0..config.ticks {
        let events = engine.advance()?;
        let resampled = events
            .iter()
            .any(|e| matches!(e.kind, EventKind::FullResample { .. }));
        let tick = engine.state.tick;
        if (on_resample && resampled) || (every > 0 && tick % every == 0) {
            snapshots.push(Snapshot {
                tick,
                points: engine.window.to_points(),
            });
        }
    }
    Ok(RunOutput {
        header,
        state: engine.state,
        window: engine.window,
        events: engine.events,
        snapshots,
    })
}


#[cfg(test)]
mod tests {
    use super::testutil::test_state;
    use super::*;

    #[test]
    fn weighted_selection_matches_fig_weights() {
        let mut state = test_state(40, 3, 2);
        state.dgcs[0].weight = 0.3;
        state.dgcs[1].weight = 0.5;
        state.dgcs[2].weight = 0.2;
        let trials = 100_000;
        let mut counts = [0usize; 3];
        for _ in 0..trials {
            counts[draw_dgc_index(&mut state).unwrap()] += 1;
        }
        let shares: Vec<f64> = counts.iter().map(|c| *c as f64 / trials as f64).collect();
        assert!((shares[0] - 0.3).abs() < 0.01, "{shares:?}");
        assert!((shares[1] - 0.5).abs() < 0.01, "{shares:?}");
        assert!((shares[2] - 0.2).abs() < 0.01, "{shares:?}");
    }

    #[test]
    fn single_component_always_selected() {
        let mut state = test_state(41, 1, 2);
        for _ in 0..100 {
            assert_eq!(draw_dgc_index(&mut state).unwrap(), 0);
        }
    }

    #[test]
    fn equal_weights_select_uniformly() {
        let mut state = test_state(42, 4, 2);
        for dgc in &mut state.dgcs {
            dgc.weight = 1.5;
        }
        let trials = 100_000;
        let mut counts = [0usize; 4];
        for _ in 0..trials {
            counts[draw_dgc_index(&mut state).unwrap()] += 1;
        }
        for c in counts {
            assert!((c as f64 / trials as f64 - 0.25).abs() < 0.01);
        }
    }

    #[test]
    fn selection_rejects_nonpositive_weight_sum() {
        let mut state = test_state(43, 2, 2);
        state.dgcs[0].weight = 0.0;
        state.dgcs[1].weight = 0.0;
        assert!(matches!(
            draw_dgc_index(&mut state),
            Err(Error::ModelViolation(_))
        ));
    }

    #[test]
    fn incremental_refresh_replaces_the_oldest_fraction() {
        let mut state = test_state(44, 2, 2);
        state.window_capacity = 1000;
        state.refresh_fraction = 0.05;
        let mut window = DatasetWindow::new(1000);
        full_resample(&mut state, &mut window).unwrap();
        assert_eq!(window.len(), 1000);

        state.tick = 7;
        // Queue oracle: mirror the FIFO with a plain vector.
        let mut oracle: Vec<u64> = window.iter().map(|p| p.birth_tick).collect();
        let evicted: Vec<u64> = oracle[..50].to_vec();
        let replaced = incremental_sample(&mut state, &mut window).unwrap();
        assert_eq!(replaced, 50);
        assert_eq!(window.len(), 1000);
        oracle.drain(0..50);
        oracle.extend(std::iter::repeat_n(7, 50));
        let got: Vec<u64> = window.iter().map(|p| p.birth_tick).collect();
        assert_eq!(got, oracle);

        // Survivors are all at least as young as every evicted point.
        let oldest_survivor = window.iter().map(|p| p.birth_tick).min().unwrap();
        let youngest_evicted = evicted.into_iter().max().unwrap();
        assert!(oldest_survivor >= youngest_evicted);
    }

    #[test]
    fn zero_refresh_fraction_is_a_no_op() {
        let mut state = test_state(45, 2, 2);
        state.refresh_fraction = 0.0;
        let mut window = DatasetWindow::new(100);
        full_resample(&mut state, &mut window).unwrap();
        let before = window.clone();
        let replaced = incremental_sample(&mut state, &mut window).unwrap();
        assert_eq!(replaced, 0);
        assert_eq!(window, before);
    }

    #[test]
    fn full_resample_restamps_every_birth_tick() {
        let mut state = test_state(46, 2, 2);
        let mut window = DatasetWindow::new(64);
        full_resample(&mut state, &mut window).unwrap();
        state.tick = 12;
        full_resample(&mut state, &mut window).unwrap();
        assert_eq!(window.len(), 64);
        assert!(window.iter().all(|p| p.birth_tick == 12));
        assert!(window.iter().all(|p| p.coords.len() == 2));
    }

    #[test]
    fn resampled_mean_tracks_the_single_component_center() {
        let mut state = test_state(47, 1, 2);
        state.dgcs[0].center = nalgebra::DVector::from_vec(vec![40.0, -20.0]);
        state.dgcs[0].sigma = nalgebra::DVector::from_vec(vec![3.0, 3.0]);
        state.dgcs[0].theta = nalgebra::DMatrix::zeros(2, 2);
        state.dgcs[0].invalidate_rotation();
        state.window_capacity = 20_000;
        let mut window = DatasetWindow::new(20_000);
        full_resample(&mut state, &mut window).unwrap();
        let n = window.len() as f64;
        let mean0: f64 = window.iter().map(|p| p.coords[0]).sum::<f64>() / n;
        let mean1: f64 = window.iter().map(|p| p.coords[1]).sum::<f64>() / n;
        assert!((mean0 - 40.0).abs() < 0.05 * 40.0);
        assert!((mean1 + 20.0).abs() < 0.05 * 20.0);
    }

    #[test]
    fn event_ordering_key_is_monotone() {
        let kinds = [
            EventKind::Local {
                dgc_index: 0,
                flips: vec![],
                before: DgcDigest {
                    center: vec![],
                    sigma: vec![],
                    weight: 1.0,
                    theta: vec![],
                },
                after: DgcDigest {
                    center: vec![],
                    sigma: vec![],
                    weight: 1.0,
                    theta: vec![],
                },
            },
            EventKind::GlobalShock {
                before: vec![],
                after: vec![],
            },
            EventKind::DgcCount {
                before: 3,
                after: 4,
            },
            EventKind::VarCount {
                before: 2,
                after: 3,
            },
            EventKind::ClusterCount {
                before: 3,
                after: 2,
            },
            EventKind::FullResample { points: 10 },
        ];
        for pair in kinds.windows(2) {
            assert!(pair[0].order_rank() <= pair[1].order_rank());
        }
    }
}
