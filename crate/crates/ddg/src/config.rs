//! Scenario configuration: a TOML schema covering every range, severity, and
//! probability of a run, plus named presets for common setups.
//!
//! Unknown keys are rejected. A parsed configuration serializes back to an
//! identical normalized form, and every numeric default is a repository
//! choice, documented here rather than inherited from any external source.

use serde::{Deserialize, Serialize};

use crate::dynamics::global::GlobalSeverities;
use crate::engine::GeneratorState;
use crate::error::{Error, Result};
use crate::model::{Bounds, CountRange, Interval, LocalDynamics};

const TAU: f64 = std::f64::consts::TAU;
const PI: f64 = std::f64::consts::PI;

/// Complete description of one scenario.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioConfig {
    /// Master seed; every substream of a run derives from it.
    pub seed: u64,
    /// Tick budget (one tick per function evaluation).
    pub ticks: u64,
    pub space: SpaceConfig,
    pub components: ComponentsConfig,
    pub clusters: ClustersConfig,
    /// Default local-dynamics knobs handed to every component; individual
    /// `[[dgc]]` entries may override them.
    pub local: LocalDynamics,
    pub global: GlobalConfig,
    pub structure: StructureConfig,
    pub sampling: SamplingConfig,
    pub snapshots: SnapshotConfig,
    /// Pinned initial components. When non-empty, the initial component
    /// count is the number of entries; omitted fields are drawn randomly.
    pub dgc: Vec<DgcPin>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            ticks: 100_000,
            space: SpaceConfig::default(),
            components: ComponentsConfig::default(),
            clusters: ClustersConfig::default(),
            local: default_local(),
            global: GlobalConfig::default(),
            structure: StructureConfig::default(),
            sampling: SamplingConfig::default(),
            snapshots: SnapshotConfig::default(),
            dgc: Vec::new(),
        }
    }
}

fn default_local() -> LocalDynamics {
    LocalDynamics {
        shift_severity: 1.0,
        sigma_severity: 1.0,
        weight_severity: 0.125,
        theta_severity: 0.05 * TAU,
        rho: 0.9,
        flip_prob: 0.05,
        change_prob: 0.05,
    }
}

/// Search-space geometry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SpaceConfig {
    /// Initial variable count.
    pub dimensions: usize,
    /// `[min, max]` variable-count range.
    pub dimension_range: [usize; 2],
    /// Per-dimension lower data bounds; must cover every slot up to the
    /// maximum variable count.
    pub lower_bounds: Vec<f64>,
    /// Per-dimension upper data bounds, same length as `lower_bounds`.
    pub upper_bounds: Vec<f64>,
}

impl Default for SpaceConfig {
    fn default() -> Self {
        Self {
            dimensions: 2,
            dimension_range: [2, 5],
            lower_bounds: vec![-100.0; 5],
            upper_bounds: vec![100.0; 5],
        }
    }
}

/// Component population and parameter ranges.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ComponentsConfig {
    /// Initial component count (ignored when `[[dgc]]` entries pin the
    /// initial population).
    pub count: usize,
    /// `[min, max]` component-count range.
    pub count_range: [usize; 2],
    /// Weight range; the minimum must stay positive.
    pub weight_range: [f64; 2],
    /// Width range per dimension.
    pub sigma_range: [f64; 2],
    /// Rotation-angle range in radians.
    pub angle_range: [f64; 2],
}

impl Default for ComponentsConfig {
    fn default() -> Self {
        Self {
            count: 5,
            count_range: [3, 10],
            weight_range: [0.5, 3.0],
            sigma_range: [5.0, 25.0],
            angle_range: [-PI, PI],
        }
    }
}

/// Cluster count handed to consumers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ClustersConfig {
    pub count: usize,
    pub count_range: [usize; 2],
}

impl Default for ClustersConfig {
    fn default() -> Self {
        Self {
            count: 5,
            count_range: [2, 10],
        }
    }
}

/// Global-shock severities and gate probability.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GlobalConfig {
    /// Center displacement scale (substantially larger than the local shift
    /// severity by design intent).
    pub shift: f64,
    pub sigma: f64,
    pub weight: f64,
    pub theta: f64,
    /// Beta shape; small values concentrate shocks toward full severity.
    pub alpha: f64,
    /// Per-tick shock probability.
    pub prob: f64,
}

impl Default for GlobalConfig {
    fn default() -> Self {
        Self {
            shift: 30.0,
            sigma: 10.0,
            weight: 1.25,
            theta: PI,
            alpha: 0.1,
            prob: 1e-4,
        }
    }
}

/// Structural-change gates and step sizes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct StructureConfig {
    pub dgc_count_prob: f64,
    pub dgc_count_step: usize,
    pub var_count_prob: f64,
    pub var_count_step: usize,
    pub cluster_count_prob: f64,
    pub cluster_count_step: usize,
}

impl Default for StructureConfig {
    fn default() -> Self {
        Self {
            dgc_count_prob: 1e-4,
            dgc_count_step: 1,
            var_count_prob: 1e-4,
            var_count_step: 1,
            cluster_count_prob: 1e-4,
            cluster_count_step: 1,
        }
    }
}

/// Sampling schedule and window geometry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SamplingConfig {
    /// Per-tick probability of an incremental sampling event.
    pub prob: f64,
    /// Percentage of the window replaced per incremental event; stored as a
    /// percent for readability, used internally as a fraction.
    pub refresh_percent: f64,
    /// Fixed dataset size.
    pub window_capacity: usize,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        Self {
            prob: 0.05,
            refresh_percent: 2.0,
            window_capacity: 2500,
        }
    }
}

/// When to copy the window out of a run.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SnapshotConfig {
    /// Snapshot every N ticks; 0 disables periodic snapshots.
    pub every: u64,
    /// Snapshot after every full resample (including the initial fill).
    pub on_resample: bool,
}

/// One strictly-upper angle entry of a pinned component.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaPin {
    pub row: usize,
    pub col: usize,
    pub angle: f64,
}

/// Pinned initial values for one component. Omitted fields are drawn
/// uniformly within their ranges; a pinned component's angles default to
/// zero (no rotation) unless listed.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DgcPin {
    pub center: Option<Vec<f64>>,
    pub sigma: Option<Vec<f64>>,
    pub weight: Option<f64>,
    pub theta: Vec<ThetaPin>,
    pub shift_severity: Option<f64>,
    pub sigma_severity: Option<f64>,
    pub weight_severity: Option<f64>,
    pub theta_severity: Option<f64>,
    pub rho: Option<f64>,
    pub flip_prob: Option<f64>,
    pub change_prob: Option<f64>,
}

impl DgcPin {
    /// Scenario defaults with this component's overrides applied.
    pub fn local_overrides(&self, defaults: LocalDynamics) -> LocalDynamics {
        LocalDynamics {
            shift_severity: self.shift_severity.unwrap_or(defaults.shift_severity),
            sigma_severity: self.sigma_severity.unwrap_or(defaults.sigma_severity),
            weight_severity: self.weight_severity.unwrap_or(defaults.weight_severity),
            theta_severity: self.theta_severity.unwrap_or(defaults.theta_severity),
            rho: self.rho.unwrap_or(defaults.rho),
            flip_prob: self.flip_prob.unwrap_or(defaults.flip_prob),
            change_prob: self.change_prob.unwrap_or(defaults.change_prob),
        }
    }
}

/// Parse scenario text, rejecting unknown keys and invalid values. Syntax
/// errors carry the line and column; semantic errors carry the field path.
pub fn parse_config(text: &str) -> Result<ScenarioConfig> {
    let config: ScenarioConfig =
        toml::from_str(text).map_err(|e| Error::ConfigSyntax(e.to_string()))?;
    config.validate()?;
    Ok(config)
}

/// Normalized serialization; `parse_config(serialize_config(c))` returns a
/// config equal to `c`.
pub fn serialize_config(config: &ScenarioConfig) -> Result<String> {
    toml::to_string_pretty(config)
        .map_err(|e| Error::config("scenario", format!("cannot serialize: {e}")))
}

impl ScenarioConfig {
    /// Validate every invariant; on success, return non-fatal warnings
    /// (severity orderings, extreme sampling combinations).
    pub fn validate(&self) -> Result<Vec<String>> {
        let mut warnings = Vec::new();

        let dims = CountRange::new(self.space.dimension_range[0], self.space.dimension_range[1]);
        dims.validate("space.dimension_range")?;
        if !dims.contains(self.space.dimensions) {
            return Err(Error::config(
                "space.dimensions",
                "initial dimension count must lie within space.dimension_range",
            ));
        }
        if self.space.lower_bounds.len() < dims.max || self.space.upper_bounds.len() < dims.max {
            return Err(Error::config(
                "space.lower_bounds",
                format!(
                    "bounds must be supplied for every dimension slot up to the maximum ({})",
                    dims.max
                ),
            ));
        }
        if self.space.lower_bounds.len() != self.space.upper_bounds.len() {
            return Err(Error::config(
                "space.upper_bounds",
                "lower and upper bound lists must have equal length",
            ));
        }
        for (j, (lb, ub)) in self
            .space
            .lower_bounds
            .iter()
            .zip(&self.space.upper_bounds)
            .enumerate()
        {
            if !lb.is_finite() || !ub.is_finite() || lb >= ub {
                return Err(Error::config(
                    format!("space.lower_bounds[{j}]"),
                    "lower bound must be finite and strictly below the upper bound",
                ));
            }
        }

        let dgcs = CountRange::new(self.components.count_range[0], self.components.count_range[1]);
        dgcs.validate("components.count_range")?;
        if !dgcs.contains(self.components.count) {
            return Err(Error::config(
                "components.count",
                "initial component count must lie within components.count_range",
            ));
        }
        let weight = Interval::new(self.components.weight_range[0], self.components.weight_range[1]);
        weight.validate("components.weight_range")?;
        if weight.min <= 0.0 {
            return Err(Error::config(
                "components.weight_range",
                "weights must stay positive so selection probabilities are well defined",
            ));
        }
        let sigma = Interval::new(self.components.sigma_range[0], self.components.sigma_range[1]);
        sigma.validate("components.sigma_range")?;
        if sigma.min < 0.0 {
            return Err(Error::config(
                "components.sigma_range",
                "widths cannot be negative",
            ));
        }
        let angle = Interval::new(self.components.angle_range[0], self.components.angle_range[1]);
        angle.validate("components.angle_range")?;

        let clusters = CountRange::new(self.clusters.count_range[0], self.clusters.count_range[1]);
        clusters.validate("clusters.count_range")?;
        if !clusters.contains(self.clusters.count) {
            return Err(Error::config(
                "clusters.count",
                "initial cluster count must lie within clusters.count_range",
            ));
        }

        self.local.validate("local")?;
        self.globals().validate()?;

        if !(0.0..=1.0).contains(&self.sampling.prob) {
            return Err(Error::config(
                "sampling.prob",
                "probability must lie in [0, 1]",
            ));
        }
        if !self.sampling.refresh_percent.is_finite()
            || !(0.0..=100.0).contains(&self.sampling.refresh_percent)
        {
            return Err(Error::config(
                "sampling.refresh_percent",
                "must lie in [0, 100]",
            ));
        }
        if self.sampling.window_capacity == 0 {
            return Err(Error::config(
                "sampling.window_capacity",
                "window must hold at least one point",
            ));
        }

        if !self.dgc.is_empty() {
            if !dgcs.contains(self.dgc.len()) {
                return Err(Error::config(
                    "dgc",
                    format!(
                        "{} pinned components fall outside components.count_range",
                        self.dgc.len()
                    ),
                ));
            }
            for (i, pin) in self.dgc.iter().enumerate() {
                self.validate_pin(i, pin, &weight, &sigma, &angle)?;
            }
        }

        // Non-fatal advice.
        for (name, global, local) in [
            ("shift", self.global.shift, self.local.shift_severity),
            ("sigma", self.global.sigma, self.local.sigma_severity),
            ("weight", self.global.weight, self.local.weight_severity),
            ("theta", self.global.theta, self.local.theta_severity),
        ] {
            if global > 0.0 && local > 0.0 && global <= local {
                warnings.push(format!(
                    "global.{name} ({global}) does not exceed the local severity ({local}); \
                     shocks are meant to dwarf gradual changes"
                ));
            }
        }
        for (name, step, range) in [
            ("structure.dgc_count_step", self.structure.dgc_count_step, dgcs),
            ("structure.var_count_step", self.structure.var_count_step, dims),
            (
                "structure.cluster_count_step",
                self.structure.cluster_count_step,
                clusters,
            ),
        ] {
            if step > range.max - range.min {
                warnings.push(format!(
                    "{name} ({step}) exceeds the range width {}; steps will clamp",
                    range.max - range.min
                ));
            }
        }
        if self.sampling.prob >= 0.5 && self.sampling.refresh_percent >= 25.0 {
            warnings.push(
                "sampling.prob and sampling.refresh_percent are both high; \
                 the window will churn almost completely every few ticks"
                    .into(),
            );
        }
        if self.sampling.prob > 0.0 && self.sampling.refresh_percent == 0.0 {
            warnings.push(
                "sampling.prob is positive but sampling.refresh_percent is 0; \
                 sampling events will not change the window"
                    .into(),
            );
        }
        Ok(warnings)
    }

    fn validate_pin(
        &self,
        index: usize,
        pin: &DgcPin,
        weight: &Interval,
        sigma: &Interval,
        angle: &Interval,
    ) -> Result<()> {
        let d = self.space.dimensions;
        let path = |field: &str| format!("dgc[{index}].{field}");
        if let Some(center) = &pin.center {
            if center.len() != d {
                return Err(Error::config(
                    path("center"),
                    format!("expected {d} coordinates"),
                ));
            }
            for (j, c) in center.iter().enumerate() {
                if !(self.space.lower_bounds[j]..=self.space.upper_bounds[j]).contains(c) {
                    return Err(Error::config(
                        path("center"),
                        format!("coordinate {j} outside the data bounds"),
                    ));
                }
            }
        }
        if let Some(widths) = &pin.sigma {
            if widths.len() != d {
                return Err(Error::config(path("sigma"), format!("expected {d} widths")));
            }
            if widths.iter().any(|w| !sigma.contains(*w)) {
                return Err(Error::config(path("sigma"), "width outside sigma_range"));
            }
        }
        if let Some(w) = pin.weight {
            if !weight.contains(w) {
                return Err(Error::config(path("weight"), "outside weight_range"));
            }
        }
        for entry in &pin.theta {
            if entry.row >= entry.col || entry.col >= d {
                return Err(Error::config(
                    path("theta"),
                    format!(
                        "entry ({}, {}) must sit strictly above the diagonal of a {d}x{d} matrix",
                        entry.row, entry.col
                    ),
                ));
            }
            if !angle.contains(entry.angle) {
                return Err(Error::config(path("theta"), "angle outside angle_range"));
            }
        }
        pin.local_overrides(self.local)
            .validate(&format!("dgc[{index}]"))?;
        Ok(())
    }

    fn globals(&self) -> GlobalSeverities {
        GlobalSeverities {
            shift: self.global.shift,
            weight: self.global.weight,
            sigma: self.global.sigma,
            theta: self.global.theta,
            alpha: self.global.alpha,
            prob_global: self.global.prob,
            prob_dgc_count: self.structure.dgc_count_prob,
            prob_var_count: self.structure.var_count_prob,
            prob_cluster_count: self.structure.cluster_count_prob,
            step_dgc: self.structure.dgc_count_step,
            step_var: self.structure.var_count_step,
            step_cluster: self.structure.cluster_count_step,
        }
    }

    /// Assemble the (component-free) initial state for this scenario.
    pub(crate) fn build_state(&self) -> Result<GeneratorState> {
        let d0 = self.space.dimensions;
        let bounds = Bounds {
            lower: self.space.lower_bounds[..d0].to_vec(),
            upper: self.space.upper_bounds[..d0].to_vec(),
            sigma: Interval::new(self.components.sigma_range[0], self.components.sigma_range[1]),
            weight: Interval::new(
                self.components.weight_range[0],
                self.components.weight_range[1],
            ),
            angle: Interval::new(self.components.angle_range[0], self.components.angle_range[1]),
            dims: CountRange::new(self.space.dimension_range[0], self.space.dimension_range[1]),
            dgcs: CountRange::new(
                self.components.count_range[0],
                self.components.count_range[1],
            ),
            clusters: CountRange::new(self.clusters.count_range[0], self.clusters.count_range[1]),
        };
        bounds.validate()?;
        Ok(GeneratorState::new(
            self.seed,
            d0,
            self.clusters.count,
            bounds,
            self.globals(),
            self.sampling.prob,
            self.sampling.refresh_percent / 100.0,
            self.sampling.window_capacity,
            self.local,
            self.space.lower_bounds.clone(),
            self.space.upper_bounds.clone(),
        ))
    }
}

/// Names accepted by [`preset`].
pub const PRESET_NAMES: &[&str] = &[
    "static-mixture",
    "single-isotropic",
    "single-offset",
    "single-anisotropic",
    "single-rotated",
    "drift-rho00",
    "drift-rho05",
    "drift-rho09",
    "walk-s1-p00",
    "walk-s1-p01",
    "walk-s1-p05",
    "walk-s01-p05",
    "kitchen-sink",
];

/// Built-in scenarios.
///
/// The `static-mixture` and `single-*` presets freeze the dynamics to expose
/// the sampling model itself; the `drift-*` family isolates the momentum
/// walk of one component's center at three correlation levels; the `walk-*`
/// family isolates one scalar parameter's directed random walk at several
/// severity/flip-probability combinations; `kitchen-sink` enables every
/// dynamic at the repository defaults.
pub fn preset(name: &str) -> Result<ScenarioConfig> {
    match name {
        "static-mixture" => Ok(static_mixture()),
        "single-isotropic" => Ok(single_component([0.0, 0.0], [20.0, 20.0], None)),
        "single-offset" => Ok(single_component([-20.0, 50.0], [7.0, 7.0], None)),
        "single-anisotropic" => Ok(single_component([0.0, 0.0], [7.0, 20.0], None)),
        "single-rotated" => Ok(single_component(
            [0.0, 0.0],
            [7.0, 20.0],
            Some(std::f64::consts::FRAC_PI_4),
        )),
        "drift-rho00" => Ok(center_drift(0.0)),
        "drift-rho05" => Ok(center_drift(0.5)),
        "drift-rho09" => Ok(center_drift(0.9)),
        "walk-s1-p00" => Ok(scalar_walk(1.0, 0.0)),
        "walk-s1-p01" => Ok(scalar_walk(1.0, 0.1)),
        "walk-s1-p05" => Ok(scalar_walk(1.0, 0.5)),
        "walk-s01-p05" => Ok(scalar_walk(0.1, 0.5)),
        "kitchen-sink" => Ok(ScenarioConfig::default()),
        other => Err(Error::config(
            "preset",
            format!(
                "unknown preset `{other}`; expected one of {}",
                PRESET_NAMES.join(", ")
            ),
        )),
    }
}

/// Zero every event probability so nothing ever fires.
fn freeze_dynamics(config: &mut ScenarioConfig) {
    config.local.change_prob = 0.0;
    config.global.prob = 0.0;
    config.structure.dgc_count_prob = 0.0;
    config.structure.var_count_prob = 0.0;
    config.structure.cluster_count_prob = 0.0;
    config.sampling.prob = 0.0;
}

fn static_mixture() -> ScenarioConfig {
    let mut config = ScenarioConfig {
        ticks: 1000,
        ..ScenarioConfig::default()
    };
    freeze_dynamics(&mut config);
    config.space.dimension_range = [2, 3];
    config.space.lower_bounds = vec![-100.0; 3];
    config.space.upper_bounds = vec![100.0; 3];
    config.components.count = 3;
    config.components.count_range = [2, 4];
    config.components.weight_range = [0.1, 1.0];
    config.components.sigma_range = [5.0, 25.0];
    config.clusters.count = 3;
    config.clusters.count_range = [2, 4];
    config.sampling.window_capacity = 10_000;
    let pin = |center: [f64; 2], weight: f64, angle: f64| DgcPin {
        center: Some(center.to_vec()),
        sigma: Some(vec![15.0, 10.0]),
        weight: Some(weight),
        theta: vec![ThetaPin {
            row: 0,
            col: 1,
            angle,
        }],
        ..DgcPin::default()
    };
    config.dgc = vec![
        pin([0.0, 45.0], 0.3, 2.4),
        pin([-45.0, -30.0], 0.5, -0.6),
        pin([45.0, -35.0], 0.2, 0.9),
    ];
    config
}

fn single_component(center: [f64; 2], sigma: [f64; 2], angle: Option<f64>) -> ScenarioConfig {
    let mut config = ScenarioConfig {
        ticks: 100,
        ..ScenarioConfig::default()
    };
    freeze_dynamics(&mut config);
    config.space.dimension_range = [2, 3];
    config.space.lower_bounds = vec![-100.0; 3];
    config.space.upper_bounds = vec![100.0; 3];
    config.components.count = 1;
    config.components.count_range = [1, 2];
    config.components.sigma_range = [5.0, 25.0];
    config.clusters.count = 1;
    config.clusters.count_range = [1, 2];
    config.sampling.window_capacity = 300;
    config.dgc = vec![DgcPin {
        center: Some(center.to_vec()),
        sigma: Some(sigma.to_vec()),
        weight: Some(1.0),
        theta: angle
            .map(|angle| {
                vec![ThetaPin {
                    row: 0,
                    col: 1,
                    angle,
                }]
            })
            .unwrap_or_default(),
        ..DgcPin::default()
    }];
    config
}

fn center_drift(rho: f64) -> ScenarioConfig {
    let mut config = ScenarioConfig {
        ticks: 1000,
        ..ScenarioConfig::default()
    };
    freeze_dynamics(&mut config);
    config.space.dimension_range = [2, 3];
    config.space.lower_bounds = vec![-1000.0; 3];
    config.space.upper_bounds = vec![1000.0; 3];
    config.components.count = 1;
    config.components.count_range = [1, 2];
    config.clusters.count = 1;
    config.clusters.count_range = [1, 2];
    config.sampling.window_capacity = 100;
    config.local = LocalDynamics {
        shift_severity: 1.0,
        sigma_severity: 0.0,
        weight_severity: 0.0,
        theta_severity: 0.0,
        rho,
        flip_prob: 0.0,
        change_prob: 1.0,
    };
    config.dgc = vec![DgcPin {
        center: Some(vec![0.0, 0.0]),
        sigma: Some(vec![10.0, 10.0]),
        weight: Some(1.0),
        ..DgcPin::default()
    }];
    config
}

fn scalar_walk(severity: f64, flip_prob: f64) -> ScenarioConfig {
    let mut config = ScenarioConfig {
        ticks: 1000,
        ..ScenarioConfig::default()
    };
    freeze_dynamics(&mut config);
    config.space.dimension_range = [2, 3];
    config.space.lower_bounds = vec![-100.0; 3];
    config.space.upper_bounds = vec![100.0; 3];
    config.components.count = 1;
    config.components.count_range = [1, 2];
    config.components.sigma_range = [0.0, 100.0];
    config.clusters.count = 1;
    config.clusters.count_range = [1, 2];
    config.sampling.window_capacity = 100;
    config.local = LocalDynamics {
        shift_severity: 0.0,
        sigma_severity: severity,
        weight_severity: 0.0,
        theta_severity: 0.0,
        rho: 0.5,
        flip_prob,
        change_prob: 1.0,
    };
    config.dgc = vec![DgcPin {
        center: Some(vec![0.0, 0.0]),
        sigma: Some(vec![50.0, 50.0]),
        weight: Some(1.0),
        ..DgcPin::default()
    }];
    config
}
