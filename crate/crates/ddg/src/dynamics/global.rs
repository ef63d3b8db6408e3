//! Large-impact events: heavy-tailed shocks applied to every component at
//! once, and structural changes to the component, variable, and cluster
//! counts.
//!
//! Shock magnitudes are drawn from `2·Beta(α, α) − 1` with small α, so most
//! draws land near ±1 and a fired shock rarely degenerates into a negligible
//! change. Count changes step by a fixed amount in a random direction; a step
//! that would leave its range has its direction inverted instead, mirroring
//! the reflection principle used for scalar parameters.

use crate::engine::GeneratorState;
use crate::error::{Error, Result};
use crate::model::{reflect, CountRange, Sign};

/// Severities and gate probabilities of the large-impact dynamics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlobalSeverities {
    /// Center displacement scale (ŝ).
    pub shift: f64,
    /// Weight increment scale (ŵ).
    pub weight: f64,
    /// Width increment scale (σ̂).
    pub sigma: f64,
    /// Angle increment scale (θ̂).
    pub theta: f64,
    /// Shared Beta shape (α = β); small values give heavy tails.
    pub alpha: f64,
    /// Per-tick probability of a global shock.
    pub prob_global: f64,
    /// Per-tick probability of a component-count change.
    pub prob_dgc_count: f64,
    /// Per-tick probability of a variable-count change.
    pub prob_var_count: f64,
    /// Per-tick probability of a cluster-count change.
    pub prob_cluster_count: f64,
    /// Component-count step size (m̃).
    pub step_dgc: usize,
    /// Variable-count step size (d̃).
    pub step_var: usize,
    /// Cluster-count step size (κ̃).
    pub step_cluster: usize,
}

impl GlobalSeverities {
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("shift", self.shift),
            ("weight", self.weight),
            ("sigma", self.sigma),
            ("theta", self.theta),
        ] {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::config(
                    format!("global.{name}"),
                    "severity must be finite and non-negative",
                ));
            }
        }
        if !self.alpha.is_finite() || self.alpha <= 0.0 {
            return Err(Error::config("global.alpha", "Beta shape must be positive"));
        }
        for (name, p) in [
            ("global.prob", self.prob_global),
            ("structure.dgc_count_prob", self.prob_dgc_count),
            ("structure.var_count_prob", self.prob_var_count),
            ("structure.cluster_count_prob", self.prob_cluster_count),
        ] {
            if !p.is_finite() || !(0.0..=1.0).contains(&p) {
                return Err(Error::config(name, "probability must lie in [0, 1]"));
            }
        }
        for (name, step) in [
            ("structure.dgc_count_step", self.step_dgc),
            ("structure.var_count_step", self.step_var),
            ("structure.cluster_count_step", self.step_cluster),
        ] {
            if step < 1 {
                return Err(Error::config(name, "step must be at least 1"));
            }
        }
        Ok(())
    }
}

/// A fired count change.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountChange {
    pub before: usize,
    pub after: usize,
}

/// Draw the shock gate; when it fires, displace every component's center
/// along its own fresh random direction and step its weight, every width,
/// and every angle, each by an independent heavy-tailed amount. All results
/// reflect into their ranges; rotation caches are invalidated. Returns
/// whether the shock fired.
pub fn global_shock(state: &mut GeneratorState) -> Result<bool> {
    let fired = state
        .streams
        .global
        .bernoulli(state.globals.prob_global)?;
    if fired {
        apply_global_shock(state)?;
    }
    Ok(fired)
}

/// Shock body, applied unconditionally. The engine draws the gate itself so
/// it can digest the pre-shock state only when needed.
pub(crate) fn apply_global_shock(state: &mut GeneratorState) -> Result<()> {
    let severities = state.globals;
    let d = state.dims;
    for dgc in &mut state.dgcs {
        // Per-component direction, one heavy-tailed magnitude for the whole
        // center displacement.
        let direction = state.streams.global.unit_vector(d);
        let magnitude = state.streams.global.beta_symmetric(severities.alpha)?;
        for j in 0..d {
            let moved = dgc.center[j] + magnitude * severities.shift * direction[j];
            dgc.center[j] = reflect(moved, state.bounds.lower[j], state.bounds.upper[j])?.0;
        }

        let magnitude = state.streams.global.beta_symmetric(severities.alpha)?;
        dgc.weight = reflect(
            dgc.weight + magnitude * severities.weight,
            state.bounds.weight.min,
            state.bounds.weight.max,
        )?
        .0;

        // Fresh draw per scalar from here on.
        for j in 0..d {
            let magnitude = state.streams.global.beta_symmetric(severities.alpha)?;
            dgc.sigma[j] = reflect(
                dgc.sigma[j] + magnitude * severities.sigma,
                state.bounds.sigma.min,
                state.bounds.sigma.max,
            )?
            .0;
        }
        for j in 0..d {
            for k in (j + 1)..d {
                let magnitude = state.streams.global.beta_symmetric(severities.alpha)?;
                dgc.theta[(j, k)] = reflect(
                    dgc.theta[(j, k)] + magnitude * severities.theta,
                    state.bounds.angle.min,
                    state.bounds.angle.max,
                )?
                .0;
            }
        }
        dgc.invalidate_rotation();
    }
    state.pending_resample = true;
    Ok(())
}

/// Step `current` by `step` in direction `b`, inverting the direction if the
/// step would leave `range`; if both directions leave it, clamp instead.
fn stepped_count(current: usize, step: usize, b: Sign, range: CountRange) -> usize {
    let step = step as i64;
    let signed = current as i64;
    let dir = match b {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    let forward = signed + dir * step;
    let in_range = |v: i64| v >= range.min as i64 && v <= range.max as i64;
    if in_range(forward) {
        return forward as usize;
    }
    let backward = signed - dir * step;
    if in_range(backward) {
        return backward as usize;
    }
    forward.clamp(range.min as i64, range.max as i64) as usize
}

/// Draw the component-count gate; when it fires, add or remove `step_dgc`
/// components. Removal deletes uniformly random components; addition spawns
/// fully random ones. Marks the state for a full resample.
pub fn change_dgc_count(state: &mut GeneratorState) -> Result<Option<CountChange>> {
    let fired = state
        .streams
        .dgc_count
        .bernoulli(state.globals.prob_dgc_count)?;
    if !fired {
        return Ok(None);
    }
    let before = state.dgcs.len();
    let b = state.streams.dgc_count.rand_sign();
    let target = stepped_count(before, state.globals.step_dgc, b, state.bounds.dgcs);
    while state.dgcs.len() > target {
        let index = state.streams.dgc_count.uniform_index(state.dgcs.len());
        state.dgcs.remove(index);
    }
    while state.dgcs.len() < target {
        let dgc = state.spawn_dgc(None)?;
        state.dgcs.push(dgc);
    }
    state.pending_resample = true;
    Ok(Some(CountChange {
        before,
        after: state.dgcs.len(),
    }))
}

/// Draw the variable-count gate; when it fires, remove or insert `step_var`
/// dimensions one at a time. Marks the state for a full resample.
pub fn change_var_count(state: &mut GeneratorState) -> Result<Option<CountChange>> {
    let fired = state
        .streams
        .var_count
        .bernoulli(state.globals.prob_var_count)?;
    if !fired {
        return Ok(None);
    }
    let before = state.dims;
    let b = state.streams.var_count.rand_sign();
    let target = stepped_count(before, state.globals.step_var, b, state.bounds.dims);
    while state.dims > target {
        let index = state.streams.var_count.uniform_index(state.dims);
        remove_dimension_at(state, index)?;
    }
    while state.dims < target {
        let index = state.streams.var_count.uniform_int(0, state.dims as i64) as usize;
        insert_dimension_at(state, index)?;
    }
    state.pending_resample = true;
    Ok(Some(CountChange {
        before,
        after: state.dims,
    }))
}

/// Delete dimension `j` from the data bounds and from every component:
/// the j-th entry of center, widths, heading, and per-dimension direction
/// factors, plus row j and column j of the angle matrices. Headings are
/// renormalized afterwards.
pub(crate) fn remove_dimension_at(state: &mut GeneratorState, j: usize) -> Result<()> {
    let d = state.dims;
    if d <= 1 || j >= d {
        return Err(Error::ModelViolation(format!(
            "cannot remove dimension {j} from a {d}-dimensional state"
        )));
    }
    state.bounds.lower.remove(j);
    state.bounds.upper.remove(j);
    for dgc in &mut state.dgcs {
        dgc.center = dgc.center.clone().remove_row(j);
        dgc.sigma = dgc.sigma.clone().remove_row(j);
        dgc.dir_sigma.remove(j);
        dgc.velocity = dgc.velocity.clone().remove_row(j);
        let norm = dgc.velocity.norm();
        if norm > 1e-12 {
            dgc.velocity /= norm;
        } else {
            // The heading pointed entirely along the removed axis.
            dgc.velocity = state.streams.var_count.unit_vector(d - 1);
        }
        dgc.theta = dgc.theta.clone().remove_row(j).remove_column(j);
        dgc.dir_theta = dgc.dir_theta.clone().remove_row(j).remove_column(j);
        dgc.invalidate_rotation();
    }
    state.dims -= 1;
    Ok(())
}

/// Insert a new dimension at position `j` (existing indices `k ≥ j` shift up
/// by one). The new coordinate of every component is drawn uniformly within
/// its range; the new data bounds come from the config's next unused slot.
pub(crate) fn insert_dimension_at(state: &mut GeneratorState, j: usize) -> Result<()> {
    let d = state.dims;
    if j > d {
        return Err(Error::ModelViolation(format!(
            "insertion index {j} out of range for a {d}-dimensional state"
        )));
    }
    let (lb, ub) = state.master_bounds_slot(d)?;
    state.bounds.lower.insert(j, lb);
    state.bounds.upper.insert(j, ub);
    let sigma_range = state.bounds.sigma;
    let angle_range = state.bounds.angle;
    for dgc in &mut state.dgcs {
        let coordinate = state.streams.var_count.uniform(lb, ub);
        dgc.center = dgc.center.clone().insert_row(j, coordinate);
        let width = state
            .streams
            .var_count
            .uniform(sigma_range.min, sigma_range.max);
        dgc.sigma = dgc.sigma.clone().insert_row(j, width);
        dgc.dir_sigma.insert(j, state.streams.var_count.rand_sign());
        let component = state.streams.var_count.normal();
        dgc.velocity = dgc.velocity.clone().insert_row(j, component);
        dgc.velocity /= dgc.velocity.norm();
        dgc.theta = dgc.theta.clone().insert_row(j, 0.0).insert_column(j, 0.0);
        dgc.dir_theta = dgc
            .dir_theta
            .clone()
            .insert_row(j, Sign::Plus)
            .insert_column(j, Sign::Plus);
        for i in 0..j {
            dgc.theta[(i, j)] = state
                .streams
                .var_count
                .uniform(angle_range.min, angle_range.max);
            dgc.dir_theta[(i, j)] = state.streams.var_count.rand_sign();
        }
        for k in (j + 1)..=d {
            dgc.theta[(j, k)] = state
                .streams
                .var_count
                .uniform(angle_range.min, angle_range.max);
            dgc.dir_theta[(j, k)] = state.streams.var_count.rand_sign();
        }
        dgc.invalidate_rotation();
    }
    state.dims += 1;
    Ok(())
}

/// Draw the cluster-count gate; when it fires, step the cluster count within
/// its range. Never touches the dataset window: cluster-count changes do not
/// trigger resampling.
pub fn change_cluster_count(state: &mut GeneratorState) -> Result<Option<CountChange>> {
    let fired = state
        .streams
        .cluster_count
        .bernoulli(state.globals.prob_cluster_count)?;
    if !fired {
        return Ok(None);
    }
    let before = state.kappa;
    let b = state.streams.cluster_count.rand_sign();
    state.kappa = stepped_count(before, state.globals.step_cluster, b, state.bounds.clusters);
    Ok(Some(CountChange {
        before,
        after: state.kappa,
    }))
}
