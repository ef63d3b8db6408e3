//! Gradual, per-component changes: center drift with momentum, and directed
//! random walks over widths, weight, and rotation angles with probabilistic
//! direction inversion.
//!
//! Each component carries a per-tick probability that its whole change bundle
//! fires. When it does, the center shifts along a momentum-blended unit
//! heading, and every width, the weight, and every angle take one step of a
//! directed walk whose ±1 direction factor inverts at random (per
//! `flip_prob`) or on boundary reflection.

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::{reflect, Bounds, DgcState, Interval, Sign};
use crate::stochastics::RandomStream;

/// Which scalar a direction-factor flip belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DriftParam {
    Sigma { dim: usize },
    Weight,
    Theta { row: usize, col: usize },
}

/// Why a direction factor inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlipCause {
    /// The per-step inversion gate fired.
    Random,
    /// The stepped value left its range and was reflected back.
    Boundary,
}

/// One direction-factor inversion that happened during a bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipRecord {
    pub param: DriftParam,
    pub cause: FlipCause,
}

/// Result of one per-component change opportunity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalChangeOutcome {
    /// Did the bundle fire this tick?
    pub changed: bool,
    /// Direction-factor inversions, empty whenever `changed` is false.
    pub flips: Vec<FlipRecord>,
}

impl LocalChangeOutcome {
    fn unchanged() -> Self {
        Self {
            changed: false,
            flips: Vec::new(),
        }
    }
}

/// One step of a directed scalar walk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriftOutcome {
    pub value: f64,
    pub dir: Sign,
    pub random_flip: bool,
    pub boundary_flip: bool,
}

/// Blend the previous heading with a fresh random direction and renormalize:
/// `((1 − rho)·u + rho·v) / ‖·‖`. At `rho = 0` the result is the fresh
/// direction itself; near 1 the heading barely turns. Consumes `d` draws
/// (plus `d` per redraw of an exactly cancelling blend).
pub fn update_velocity(
    velocity: &DVector<f64>,
    rho: f64,
    stream: &mut RandomStream,
) -> DVector<f64> {
    let d = velocity.len();
    loop {
        let fresh = stream.unit_vector(d);
        let blend = fresh * (1.0 - rho) + velocity * rho;
        let norm = blend.norm();
        if norm > 0.0 {
            return blend / norm;
        }
        // Antipodal draw cancelled the blend exactly; redraw.
    }
}

/// Shift a component's center: update the heading first, then move
/// `half_normal() · shift_severity` along it, reflecting every coordinate
/// into its data bounds. The heading stays a unit vector either way.
pub fn shift_center(dgc: &mut DgcState, bounds: &Bounds) -> Result<()> {
    dgc.velocity = update_velocity(&dgc.velocity, dgc.dynamics.rho, &mut dgc.stream);
    let step = dgc.stream.half_normal() * dgc.dynamics.shift_severity;
    for j in 0..dgc.dims() {
        let moved = dgc.center[j] + step * dgc.velocity[j];
        let (folded, _) = reflect(moved, bounds.lower[j], bounds.upper[j])?;
        dgc.center[j] = folded;
    }
    Ok(())
}

/// One step of `y ← y + dir · half_normal() · severity` with direction
/// management: `dir` inverts with probability `flip_prob` before stepping and
/// inverts again if the step reflected off a boundary. Draw order per call:
/// one flip gate, one half-normal.
pub fn drift_scalar(
    value: f64,
    dir: Sign,
    severity: f64,
    range: Interval,
    flip_prob: f64,
    stream: &mut RandomStream,
) -> Result<DriftOutcome> {
    let mut dir = dir;
    let random_flip = stream.bernoulli(flip_prob)?;
    if random_flip {
        dir.flip();
    }
    let step = stream.half_normal() * severity;
    let (folded, boundary_flip) = reflect(value + dir.value() * step, range.min, range.max)?;
    if boundary_flip {
        dir.flip();
    }
    Ok(DriftOutcome {
        value: folded,
        dir,
        random_flip,
        boundary_flip,
    })
}

/// Draw the component's change gate; when it fires, apply the whole bundle:
/// center shift, then every width, the weight, and every angle in row-major
/// order. All draws come from the component's private stream.
pub fn apply_local_changes(dgc: &mut DgcState, bounds: &Bounds) -> Result<LocalChangeOutcome> {
    let change_prob = dgc.dynamics.change_prob;
    if !dgc.stream.bernoulli(change_prob)? {
        return Ok(LocalChangeOutcome::unchanged());
    }
    let flips = apply_local_bundle(dgc, bounds)?;
    Ok(LocalChangeOutcome {
        changed: true,
        flips,
    })
}

/// The bundle body, applied unconditionally. Kept separate so the engine can
/// draw the gate itself, digest the pre-change state only when needed, and
/// still consume draws in exactly the order of [`apply_local_changes`].
pub(crate) fn apply_local_bundle(dgc: &mut DgcState, bounds: &Bounds) -> Result<Vec<FlipRecord>> {
    let mut flips = Vec::new();
    let knobs = dgc.dynamics;

    shift_center(dgc, bounds)?;

    let d = dgc.dims();
    for j in 0..d {
        let out = drift_scalar(
            dgc.sigma[j],
            dgc.dir_sigma[j],
            knobs.sigma_severity,
            bounds.sigma,
            knobs.flip_prob,
            &mut dgc.stream,
        )?;
        dgc.sigma[j] = out.value;
        dgc.dir_sigma[j] = out.dir;
        record_flips(&mut flips, DriftParam::Sigma { dim: j }, out);
    }

    let out = drift_scalar(
        dgc.weight,
        dgc.dir_weight,
        knobs.weight_severity,
        bounds.weight,
        knobs.flip_prob,
        &mut dgc.stream,
    )?;
    dgc.weight = out.value;
    dgc.dir_weight = out.dir;
    record_flips(&mut flips, DriftParam::Weight, out);

    let mut angle_moved = false;
    for j in 0..d {
        for k in (j + 1)..d {
            let out = drift_scalar(
                dgc.theta[(j, k)],
                dgc.dir_theta[(j, k)],
                knobs.theta_severity,
                bounds.angle,
                knobs.flip_prob,
                &mut dgc.stream,
            )?;
            if out.value != dgc.theta[(j, k)] {
                angle_moved = true;
            }
            dgc.theta[(j, k)] = out.value;
            dgc.dir_theta[(j, k)] = out.dir;
            record_flips(&mut flips, DriftParam::Theta { row: j, col: k }, out);
        }
    }
    if angle_moved {
        dgc.invalidate_rotation();
    }
    Ok(flips)
}

fn record_flips(flips: &mut Vec<FlipRecord>, param: DriftParam, out: DriftOutcome) {
    if out.random_flip {
        flips.push(FlipRecord {
            param,
            cause: FlipCause::Random,
        });
    }
    if out.boundary_flip {
        flips.push(FlipRecord {
            param,
            cause: FlipCause::Boundary,
        });
    }
}
