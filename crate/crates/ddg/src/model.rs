//! Static generator model: dynamic Gaussian component (DGC) parameterization,
//! rotation-matrix construction, point synthesis, and boundary reflection.
//!
//! A DGC generates points as `r σ R + c` under a row-vector convention: the
//! standard-normal noise row `r` is scaled per dimension by the widths `σ`,
//! rotated on the right by `R`, and translated to the center `c`. `R` is the
//! product of planar rotations, one per nonzero strictly-upper entry of the
//! angle matrix.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stochastics::RandomStream;

/// Direction factor: the ±1 sign a drifting scalar currently follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn flip(&mut self) {
        *self = self.flipped();
    }
}

/// Closed scalar range `[min, max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub min: f64,
    pub max: f64,
}

impl Interval {
    pub fn new(min: f64, max: f64) -> Self {
        Self { min, max }
    }

    pub fn width(self) -> f64 {
        self.max - self.min
    }

    pub fn contains(self, v: f64) -> bool {
        v >= self.min && v <= self.max
    }

    pub fn validate(self, path: &str) -> Result<()> {
        if !self.min.is_finite() || !self.max.is_finite() {
            return Err(Error::config(path, "range endpoints must be finite"));
        }
        if self.min >= self.max {
            return Err(Error::config(path, "min must be strictly less than max"));
        }
        Ok(())
    }
}

/// Inclusive integer range `{min, ..., max}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRange {
    pub min: usize,
    pub max: usize,
}

impl CountRange {
    pub fn new(min: usize, max: usize) -> Self {
        Self { min, max }
    }

    pub fn contains(self, v: usize) -> bool {
        v >= self.min && v <= self.max
    }

    pub fn validate(self, path: &str) -> Result<()> {
        if self.min < 1 {
            return Err(Error::config(path, "min must be at least 1"));
        }
        if !(self.min < self.max) {
            return Err(Error::config(path, "min must be strictly less than max"));
        }
        Ok(())
    }
}

/// Stationary parameter ranges for a run.
///
/// `lower`/`upper` hold the data bounds of the currently active dimensions;
/// they shrink and grow in step with variable-count changes. All other ranges
/// are immutable for the lifetime of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    /// Per-dimension lower data bounds (length = current dimension count).
    pub lower: Vec<f64>,
    /// Per-dimension upper data bounds.
    pub upper: Vec<f64>,
    /// Width range for every component and dimension.
    pub sigma: Interval,
    /// Weight range; the minimum must stay positive so normalized weights
    /// remain valid selection probabilities.
    pub weight: Interval,
    /// Rotation-angle range, in radians.
    pub angle: Interval,
    /// Variable-count range.
    pub dims: CountRange,
    /// Component-count range.
    pub dgcs: CountRange,
    /// Cluster-count range.
    pub clusters: CountRange,
}

impl Bounds {
    pub fn validate(&self) -> Result<()> {
        if self.lower.len() != self.upper.len() {
            return Err(Error::config(
                "bounds",
                "lower and upper bound lists must have equal length",
            ));
        }
        for (j, (lb, ub)) in self.lower.iter().zip(&self.upper).enumerate() {
            if !lb.is_finite() || !ub.is_finite() || lb >= ub {
                return Err(Error::config(
                    format!("bounds[{j}]"),
                    "lower bound must be finite and strictly below upper bound",
                ));
            }
        }
        self.sigma.validate("sigma_range")?;
        if self.sigma.min < 0.0 {
            return Err(Error::config("sigma_range", "widths cannot be negative"));
        }
        self.weight.validate("weight_range")?;
        if self.weight.min <= 0.0 {
            return Err(Error::config(
                "weight_range",
                "weights must stay positive for component selection",
            ));
        }
        self.angle.validate("angle_range")?;
        self.dims.validate("dimension_range")?;
        self.dgcs.validate("dgc_count_range")?;
        self.clusters.validate("cluster_count_range")?;
        Ok(())
    }

    /// Data range of dimension `j`.
    pub fn data_range(&self, j: usize) -> Interval {
        Interval::new(self.lower[j], self.upper[j])
    }
}

/// Per-component local-dynamics knobs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocalDynamics {
    /// Scale of one center displacement.
    pub shift_severity: f64,
    /// Scale of one width step, per dimension.
    pub sigma_severity: f64,
    /// Scale of one weight step.
    pub weight_severity: f64,
    /// Scale of one angle step, per plane.
    pub theta_severity: f64,
    /// Momentum of the center walk: 0 draws a fresh direction every change,
    /// values near 1 keep the previous heading.
    pub rho: f64,
    /// Per-scalar probability of inverting the direction factor before a step.
    pub flip_prob: f64,
    /// Per-tick probability that the whole local-change bundle fires.
    pub change_prob: f64,
}

impl LocalDynamics {
    pub fn validate(&self, path: &str) -> Result<()> {
        for (name, v) in [
            ("shift_severity", self.shift_severity),
            ("sigma_severity", self.sigma_severity),
            ("weight_severity", self.weight_severity),
            ("theta_severity", self.theta_severity),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::config(
                    format!("{path}.{name}"),
                    "severity must be finite and non-negative",
                ));
            }
        }
        if !self.rho.is_finite() || !(0.0..1.0).contains(&self.rho) {
            return Err(Error::config(format!("{path}.rho"), "must lie in [0, 1)"));
        }
        for (name, p) in [
            ("flip_prob", self.flip_prob),
            ("change_prob", self.change_prob),
        ] {
            if !p.is_finite() || !(0.0..=1.0).contains(&p) {
                return Err(Error::config(
                    format!("{path}.{name}"),
                    "probability must lie in [0, 1]",
                ));
            }
        }
        Ok(())
    }
}

/// One dynamic Gaussian component: its sampling parameters plus the private
/// state its dynamics carry between ticks (velocity, direction factors, its
/// own random stream, and the cached rotation).
#[derive(Debug, Clone)]
pub struct DgcState {
    /// Center position, in data units.
    pub center: DVector<f64>,
    /// Per-dimension widths (standard deviations).
    pub sigma: DVector<f64>,
    /// Strictly-upper-triangular rotation angles, radians. Entry `(j, k)`
    /// with `j < k` rotates the `x_j`–`x_k` plane; everything on and below
    /// the diagonal is exactly zero.
    pub theta: DMatrix<f64>,
    /// Selection weight.
    pub weight: f64,
    /// Unit heading of the center walk.
    pub velocity: DVector<f64>,
    /// Direction factor per width dimension.
    pub dir_sigma: Vec<Sign>,
    /// Direction factor of the weight walk.
    pub dir_weight: Sign,
    /// Direction factor per angle plane (strictly-upper entries meaningful).
    pub dir_theta: DMatrix<Sign>,
    /// This component's local-dynamics knobs.
    pub dynamics: LocalDynamics,
    /// Private random stream; one component's dynamics never consume draws
    /// from another's.
    pub stream: RandomStream,
    rotation: Option<RotationMatrix>,
}

impl DgcState {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        center: DVector<f64>,
        sigma: DVector<f64>,
        theta: DMatrix<f64>,
        weight: f64,
        velocity: DVector<f64>,
        dir_sigma: Vec<Sign>,
        dir_weight: Sign,
        dir_theta: DMatrix<Sign>,
        dynamics: LocalDynamics,
        stream: RandomStream,
    ) -> Self {
        Self {
            center,
            sigma,
            theta,
            weight,
            velocity,
            dir_sigma,
            dir_weight,
            dir_theta,
            dynamics,
            stream,
            rotation: None,
        }
    }

    pub fn dims(&self) -> usize {
        self.center.len()
    }

    /// Rotation for the current angles, rebuilt lazily and cached until
    /// [`DgcState::invalidate_rotation`] is called.
    pub fn rotation(&mut self) -> Result<&RotationMatrix> {
        if self.rotation.is_none() {
            self.rotation = Some(build_rotation(&self.theta, self.dims())?);
        }
        Ok(self.rotation.as_ref().expect("just built"))
    }

    /// Drop the cached rotation. Must follow any change to `theta` or to the
    /// dimension count.
    pub fn invalidate_rotation(&mut self) {
        self.rotation = None;
    }

    #[cfg(test)]
    pub(crate) fn has_cached_rotation(&self) -> bool {
        self.rotation.is_some()
    }

    /// Sample one point through this component's cached rotation.
    pub fn sample(&mut self, noise: &DVector<f64>) -> Result<DVector<f64>> {
        self.rotation()?;
        let rotation = self.rotation.as_ref().expect("just built");
        sample_point(self, rotation, noise)
    }

    /// Check every state invariant against `bounds`.
    pub fn check_invariants(&self, bounds: &Bounds) -> Result<()> {
        let d = self.dims();
        if bounds.lower.len() != d {
            return Err(Error::ModelViolation(format!(
                "component has {d} dims but bounds list {}",
                bounds.lower.len()
            )));
        }
        if self.sigma.len() != d
            || self.velocity.len() != d
            || self.dir_sigma.len() != d
            || self.theta.nrows() != d
            || self.theta.ncols() != d
            || self.dir_theta.nrows() != d
            || self.dir_theta.ncols() != d
        {
            return Err(Error::ModelViolation(
                "component vector/matrix shapes disagree with its dimension count".into(),
            ));
        }
        check_strictly_upper(&self.theta)?;
        if (self.velocity.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::ModelViolation(format!(
                "velocity norm {} deviates from 1",
                self.velocity.norm()
            )));
        }
        for j in 0..d {
            if !(self.center[j] >= bounds.lower[j] && self.center[j] <= bounds.upper[j]) {
                return Err(Error::ModelViolation(format!(
                    "center[{j}] = {} outside data bounds",
                    self.center[j]
                )));
            }
            if !bounds.sigma.contains(self.sigma[j]) {
                return Err(Error::ModelViolation(format!(
                    "sigma[{j}] = {} outside width range",
                    self.sigma[j]
                )));
            }
        }
        if !bounds.weight.contains(self.weight) {
            return Err(Error::ModelViolation(format!(
                "weight {} outside weight range",
                self.weight
            )));
        }
        for j in 0..d {
            for k in (j + 1)..d {
                let angle = self.theta[(j, k)];
                if angle != 0.0 && !bounds.angle.contains(angle) {
                    return Err(Error::ModelViolation(format!(
                        "theta[({j}, {k})] = {angle} outside angle range"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Orthonormal rotation with determinant +1, assembled from planar angles.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationMatrix {
    m: DMatrix<f64>,
}

impl RotationMatrix {
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn dims(&self) -> usize {
        self.m.nrows()
    }
}

fn check_strictly_upper(theta: &DMatrix<f64>) -> Result<()> {
    if theta.nrows() != theta.ncols() {
        return Err(Error::ModelViolation(format!(
            "angle matrix is {}x{}, expected square",
            theta.nrows(),
            theta.ncols()
        )));
    }
    for j in 0..theta.nrows() {
        for k in 0..theta.ncols() {
            let v = theta[(j, k)];
            if !v.is_finite() {
                return Err(Error::ModelViolation(format!(
                    "angle ({j}, {k}) is not finite"
                )));
            }
            if k <= j && v != 0.0 {
                return Err(Error::ModelViolation(format!(
                    "angle matrix entry ({j}, {k}) on or below the diagonal must be zero"
                )));
            }
        }
    }
    Ok(())
}

/// Build the rotation for an angle matrix: the row-major product of planar
/// rotations, one per nonzero strictly-upper entry. The factor for entry
/// `(j, k)` has `cos θ` at `(j, j)` and `(k, k)`, `−sin θ` at `(j, k)`, and
/// `sin θ` at `(k, j)`; identity factors for zero angles are skipped.
pub fn build_rotation(theta: &DMatrix<f64>, d: usize) -> Result<RotationMatrix> {
    if theta.nrows() != d || theta.ncols() != d {
        return Err(Error::ModelViolation(format!(
            "angle matrix is {}x{}, expected {d}x{d}",
            theta.nrows(),
            theta.ncols()
        )));
    }
    check_strictly_upper(theta)?;
    let mut m = DMatrix::<f64>::identity(d, d);
    for j in 0..d {
        for k in (j + 1)..d {
            let angle = theta[(j, k)];
            if angle == 0.0 {
                continue;
            }
            let (sin, cos) = angle.sin_cos();
            // Right-multiplying by the planar factor touches only columns j, k.
            for row in 0..d {
                let a = m[(row, j)];
                let b = m[(row, k)];
                m[(row, j)] = a * cos + b * sin;
                m[(row, k)] = -a * sin + b * cos;
            }
        }
    }
    Ok(RotationMatrix { m })
}

/// Synthesize one point from a component: `(noise ⊙ sigma) · R + center`,
/// with the scaled noise treated as a row vector multiplied on the right by
/// the rotation. The output is deliberately not clipped to the data bounds;
/// only component parameters are bounded, samples are free.
pub fn sample_point(
    dgc: &DgcState,
    rotation: &RotationMatrix,
    noise: &DVector<f64>,
) -> Result<DVector<f64>> {
    let d = dgc.dims();
    if noise.len() != d {
        return Err(Error::ModelViolation(format!(
            "noise vector has length {}, component expects {d}",
            noise.len()
        )));
    }
    if rotation.dims() != d {
        return Err(Error::ModelViolation(format!(
            "rotation is {r}x{r}, component expects {d}x{d}",
            r = rotation.dims()
        )));
    }
    let scaled = noise.component_mul(&dgc.sigma);
    let rotated = (scaled.transpose() * rotation.matrix()).transpose();
    Ok(rotated + &dgc.center)
}

/// Fold `value` back into `[lo, hi]` by repeated boundary reflection:
/// an undershoot maps to `2·lo − value`, an overshoot to `2·hi − value`,
/// until the result is in range. Returns the folded value and whether any
/// reflection occurred (callers invert direction factors on `true`).
pub fn reflect(value: f64, lo: f64, hi: f64) -> Result<(f64, bool)> {
    if !value.is_finite() {
        return Err(Error::ModelViolation(format!(
            "cannot reflect non-finite value {value}"
        )));
    }
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::ModelViolation(format!(
            "invalid reflection range [{lo}, {hi}]"
        )));
    }
    let mut v = value;
    let mut flipped = false;
    let mut steps = 0u32;
    while v < lo || v > hi {
        flipped = true;
        if v < lo {
            v = 2.0 * lo - v;
        } else {
            v = 2.0 * hi - v;
        }
        steps += 1;
        if steps >= 64 {
            // Many periods out of range: jump straight to the equivalent
            // triangle-wave fold instead of iterating.
            let width = hi - lo;
            let t = (v - lo).rem_euclid(2.0 * width);
            v = if t <= width { lo + t } else { hi - (t - width) };
        }
    }
    Ok((v, flipped))
}
