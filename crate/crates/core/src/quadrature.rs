//! Asymptotic energy per vertex as an average over the Brillouin-zone torus.
//!
//! Each integrand here is an energy-per-vertex density: its mean over
//! `[0, 2π)^d` is the limiting energy per vertex of the lattice, and the
//! finite toroidal lattice's energy per vertex is the same mean taken over a
//! uniform grid of phases. The quadrature is a tensor midpoint rule refined
//! by doubling; the densities have kinks (absolute values) and conical zeros
//! (square roots), so higher-order rules buy nothing here.

use std::f64::consts::PI;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::energy::energy;
use crate::error::{Error, Result};
use crate::format::serialize_sig15;
use crate::lattice::{Family, LatticeSpec};
use crate::spectra::{closed_form_spectrum, honeycomb_radicand};

pub const MIN_TOLERANCE: f64 = 1e-6;
pub const START_POINTS_PER_AXIS: usize = 64;
pub const MAX_POINTS_PER_AXIS: usize = 4096;
/// Total grid size limit for the k-dimensional integrands.
const MAX_TOTAL_POINTS: usize = 1 << 27;
pub const MAX_HYPERCUBIC_DIM: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegrandId {
    Square,
    Triangular,
    TriSquare,
    Hexagonal,
    /// Product of `k` cycles; `k = 2` is the square lattice.
    Hypercubic(u32),
}

impl IntegrandId {
    pub fn dimension(self) -> usize {
        match self {
            IntegrandId::Hypercubic(k) => k as usize,
            _ => 2,
        }
    }

    fn validate(self) -> Result<()> {
        match self {
            IntegrandId::Hypercubic(k) if k == 0 || k > MAX_HYPERCUBIC_DIM => {
                Err(Error::DimensionMismatch { got: k as usize, expected: 1 })
            }
            _ => Ok(()),
        }
    }

    fn max_points_per_axis(self) -> usize {
        let d = self.dimension() as u32;
        let mut n = MAX_POINTS_PER_AXIS;
        while n > 2 && n.checked_pow(d).map_or(true, |t| t > MAX_TOTAL_POINTS) {
            n /= 2;
        }
        n
    }
}

impl From<Family> for IntegrandId {
    fn from(f: Family) -> Self {
        match f {
            Family::Square => IntegrandId::Square,
            Family::Triangular => IntegrandId::Triangular,
            Family::TriSquare => IntegrandId::TriSquare,
            Family::Hexagonal => IntegrandId::Hexagonal,
        }
    }
}

impl fmt::Display for IntegrandId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntegrandId::Square => f.write_str("square"),
            IntegrandId::Triangular => f.write_str("triangular"),
            IntegrandId::TriSquare => f.write_str("trisquare"),
            IntegrandId::Hexagonal => f.write_str("hexagonal"),
            IntegrandId::Hypercubic(k) => write!(f, "hypercubic-{k}"),
        }
    }
}

impl Serialize for IntegrandId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub integrand: IntegrandId,
    #[serde(serialize_with = "serialize_sig15")]
    pub value: f64,
    /// Difference between the last two grid levels. An estimate, not a bound.
    #[serde(serialize_with = "serialize_sig15")]
    pub error_estimate: f64,
    pub grid_points_per_axis: usize,
    pub converged: bool,
}

/// Density from cosines of the two phases and of their sum.
fn density_2d(id: IntegrandId, cx: f64, cy: f64, cxy: f64) -> f64 {
    let radicand = || {
        let r = 3.0 + 2.0 * cx + 2.0 * cy + 2.0 * cxy;
        debug_assert!(r > -1e-12, "negative radicand {r}");
        r.max(0.0)
    };
    match id {
        IntegrandId::Square => (2.0 * cx + 2.0 * cy).abs(),
        IntegrandId::Triangular => (2.0 * (cx + cy + cxy)).abs(),
        IntegrandId::TriSquare => {
            // two bands per two-vertex cell
            let centre = 2.0 * cx;
            let r = radicand().sqrt();
            0.5 * ((centre + r).abs() + (centre - r).abs())
        }
        IntegrandId::Hexagonal => radicand().sqrt(),
        IntegrandId::Hypercubic(_) => unreachable!("hypercubic density is not two-dimensional"),
    }
}

/// Energy-per-vertex density at `point`.
///
/// Squares and triangles carry the factor 2 of their eigenvalues
/// (`2cos x + 2cos y` rather than `cos x + cos y`); the two-band lattices
/// average both bands over their two-vertex cell.
pub fn integrand(id: IntegrandId, point: &[f64]) -> Result<f64> {
    id.validate()?;
    if point.len() != id.dimension() {
        return Err(Error::DimensionMismatch { got: point.len(), expected: id.dimension() });
    }
    Ok(match id {
        IntegrandId::Hypercubic(_) => point.iter().map(|x| 2.0 * x.cos()).sum::<f64>().abs(),
        IntegrandId::Hexagonal => honeycomb_radicand(point[0], point[1]).sqrt(),
        _ => {
            let (x, y) = (point[0], point[1]);
            density_2d(id, x.cos(), y.cos(), (x + y).cos())
        }
    })
}

/// Midpoint-rule mean of the density on an `n`-per-axis grid.
pub fn midpoint_mean(id: IntegrandId, n: usize) -> Result<f64> {
    id.validate()?;
    assert!(n > 0, "grid must have at least one point per axis");
    let h = 2.0 * PI / n as f64;
    let cos_mid: Vec<f64> = (0..n).map(|i| ((i as f64 + 0.5) * h).cos()).collect();

    if let IntegrandId::Hypercubic(k) = id {
        return Ok(hypercubic_sum(&cos_mid, k as usize, 0.0) / (n as f64).powi(k as i32));
    }

    // x_i + y_j = (i + j + 1) h
    let cos_sum: Vec<f64> = (0..2 * n).map(|k| (k as f64 * h).cos()).collect();
    let mut total = 0.0;
    for (i, &cx) in cos_mid.iter().enumerate() {
        let row: f64 = cos_mid
            .iter()
            .enumerate()
            .map(|(j, &cy)| density_2d(id, cx, cy, cos_sum[i + j + 1]))
            .sum();
        total += row;
    }
    Ok(total / (n * n) as f64)
}

fn hypercubic_sum(cos_mid: &[f64], depth: usize, partial: f64) -> f64 {
    if depth == 0 {
        return (2.0 * partial).abs();
    }
    cos_mid.iter().map(|c| hypercubic_sum(cos_mid, depth - 1, partial + c)).sum()
}

/// Limiting energy per vertex, refined by doubling the grid from 64 points
/// per axis until two successive levels differ by less than `tol`.
///
/// Gives up at 4096 points per axis (fewer for the higher-dimensional
/// integrands) and reports `converged = false` with the finest value.
pub fn asymptotic_constant(id: IntegrandId, tol: f64) -> Result<QuadratureResult> {
    if !(tol >= MIN_TOLERANCE) {
        return Err(Error::ToleranceTooTight(tol));
    }
    id.validate()?;
    let cap = id.max_points_per_axis();
    let mut n = START_POINTS_PER_AXIS.min(cap / 2);
    let mut value = midpoint_mean(id, n)?;
    loop {
        let finer = midpoint_mean(id, 2 * n)?;
        let error_estimate = (finer - value).abs();
        n *= 2;
        value = finer;
        let converged = error_estimate < tol;
        if converged || 2 * n > cap {
            return Ok(QuadratureResult { integrand: id, value, error_estimate, grid_points_per_axis: n, converged });
        }
    }
}

/// Energy per vertex of a finite lattice from its closed-form spectrum: the
/// Riemann sum whose limit is [`asymptotic_constant`].
pub fn riemann_energy_per_vertex(spec: &LatticeSpec) -> Result<f64> {
    let s = closed_form_spectrum(spec)?;
    Ok(energy(&s) / spec.vertex_count() as f64)
}
