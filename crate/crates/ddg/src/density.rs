//! Grid evaluation of the mixture density for contour plotting.
//!
//! The ensemble of components defines a multimodal joint density: at any
//! point, the density is the weight-normalized sum of every component's
//! Gaussian contribution, with covariance `Rᵀ diag(σ²) R` under the row
//! convention. With equal widths, peak heights follow the weights directly.

use nalgebra::DVector;

use crate::engine::GeneratorState;
use crate::error::{Error, Result};
use crate::model::build_rotation;

/// Density sampled on a regular grid of cell centers over the 2-D data
/// bounds. `values[iy][ix]` pairs with `(xs[ix], ys[iy])`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityGrid {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub values: Vec<Vec<f64>>,
    pub cell_area: f64,
}

impl DensityGrid {
    /// Sum over cells times cell area; close to 1 when the grid covers
    /// essentially all of the mixture's mass.
    pub fn integral(&self) -> f64 {
        self.values
            .iter()
            .map(|row| row.iter().sum::<f64>())
            .sum::<f64>()
            * self.cell_area
    }

    /// Grid coordinates of the largest value.
    pub fn argmax(&self) -> (f64, f64) {
        let mut best = f64::NEG_INFINITY;
        let mut at = (0, 0);
        for (iy, row) in self.values.iter().enumerate() {
            for (ix, v) in row.iter().enumerate() {
                if *v > best {
                    best = *v;
                    at = (ix, iy);
                }
            }
        }
        (self.xs[at.0], self.ys[at.1])
    }
}

/// Weight-normalized mixture density at `point`. Works in any dimension; the
/// grid export below is restricted to 2-D.
pub fn mixture_density(state: &GeneratorState, point: &DVector<f64>) -> Result<f64> {
    let d = state.dims;
    if point.len() != d {
        return Err(Error::ModelViolation(format!(
            "density point has {} dims, state has {d}",
            point.len()
        )));
    }
    let total_weight: f64 = state.dgcs.iter().map(|g| g.weight).sum();
    if !total_weight.is_finite() || total_weight <= 0.0 {
        return Err(Error::ModelViolation(
            "component weights must sum to a positive value".into(),
        ));
    }
    let norm_const = (2.0 * std::f64::consts::PI).powf(d as f64 / 2.0);
    let mut density = 0.0;
    for dgc in &state.dgcs {
        let rotation = build_rotation(&dgc.theta, d)?;
        let offset = point - &dgc.center;
        // Row convention: v = u Rᵀ whitens the offset, so the quadratic form
        // is Σ v_j² / σ_j².
        let r = rotation.matrix();
        let mut quad = 0.0;
        let mut width_product = 1.0;
        for j in 0..d {
            let mut v = 0.0;
            for i in 0..d {
                v += offset[i] * r[(j, i)];
            }
            quad += (v / dgc.sigma[j]).powi(2);
            width_product *= dgc.sigma[j];
        }
        let pdf = (-0.5 * quad).exp() / (norm_const * width_product);
        density += dgc.weight / total_weight * pdf;
    }
    Ok(density)
}

/// Evaluate the mixture density on a `resolution × resolution` grid of cell
/// centers spanning the 2-D data bounds. Only defined for two dimensions.
pub fn density_grid(state: &GeneratorState, resolution: usize) -> Result<DensityGrid> {
    if state.dims != 2 {
        return Err(Error::UnsupportedExport(format!(
            "density grids need a 2-dimensional state, this one has {}",
            state.dims
        )));
    }
    if resolution < 2 {
        return Err(Error::config("resolution", "needs at least 2 cells per axis"));
    }
    let (x_lo, x_hi) = (state.bounds.lower[0], state.bounds.upper[0]);
    let (y_lo, y_hi) = (state.bounds.lower[1], state.bounds.upper[1]);
    let dx = (x_hi - x_lo) / resolution as f64;
    let dy = (y_hi - y_lo) / resolution as f64;
    let xs: Vec<f64> = (0..resolution)
        .map(|i| x_lo + (i as f64 + 0.5) * dx)
        .collect();
    let ys: Vec<f64> = (0..resolution)
        .map(|i| y_lo + (i as f64 + 0.5) * dy)
        .collect();
    let mut values = Vec::with_capacity(resolution);
    let mut point = DVector::zeros(2);
    for y in &ys {
        let mut row = Vec::with_capacity(resolution);
        for x in &xs {
            point[0] = *x;
            point[1] = *y;
            row.push(mixture_density(state, &point)?);
        }
        values.push(row);
    }
    Ok(DensityGrid {
        xs,
        ys,
        values,
        cell_area: dx * dy,
    })
}
