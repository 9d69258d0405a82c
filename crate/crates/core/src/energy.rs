//! Graph energy and the inequalities that bound how it moves when edges are
//! added or removed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::serialize_sig15;
use crate::lattice::{edge_delta, remove_edges, Edge, Graph};
use crate::spectra::{numeric_spectrum, Spectrum};

/// Slack applied to every inequality check; the eigensolver is accurate to
/// roughly 1e-9, and several inequalities are tight.
pub const INEQUALITY_SLACK: f64 = 1e-8;

/// Sum of absolute eigenvalues, accumulated from the largest magnitude down.
pub fn energy(s: &Spectrum) -> f64 {
    let mut mags: Vec<f64> = s.eigenvalues().iter().map(|v| v.abs()).collect();
    mags.sort_by(|a, b| b.total_cmp(a));
    mags.iter().sum()
}

/// Koolen–Moulton upper bound for a graph with `n` vertices and `m` edges:
/// `2m/n + sqrt((n - 1)(2m - (2m/n)^2))` when `2m >= n`, otherwise `2m`.
pub fn koolen_moulton_bound(n: usize, m: usize) -> f64 {
    let twice_m = 2.0 * m as f64;
    if n == 0 || 2 * m < n {
        return twice_m;
    }
    let n_f = n as f64;
    let avg = twice_m / n_f;
    avg + ((n_f - 1.0) * (twice_m - avg * avg)).max(0.0).sqrt()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyReport {
    #[serde(serialize_with = "serialize_sig15")]
    pub energy: f64,
    pub vertex_count: usize,
    pub edge_count: usize,
    #[serde(serialize_with = "serialize_sig15")]
    pub energy_per_vertex: f64,
    /// `2|E|`, which no graph's energy exceeds.
    #[serde(serialize_with = "serialize_sig15")]
    pub trivial_bound: f64,
    #[serde(serialize_with = "serialize_sig15")]
    pub km_bound: f64,
    pub bounds_satisfied: bool,
}

/// Energy of `g` from its spectrum `s`, checked against both upper bounds.
///
/// Fails if `s` cannot be the spectrum of `g`: wrong length, or a sum of
/// squares that differs from `2|E|`.
pub fn energy_report(g: &Graph, s: &Spectrum) -> Result<EnergyReport> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if s.source_vertex_count() != n {
        return Err(Error::SpectrumLength { got: s.source_vertex_count(), expected: n });
    }
    let sum_sq: f64 = s.eigenvalues().iter().map(|v| v * v).sum();
    if (sum_sq - 2.0 * m as f64).abs() > 1e-6 * (2.0 * m as f64).max(1.0) {
        return Err(Error::SpectrumMismatch { sum_sq, twice_edges: 2 * m });
    }
    let e = energy(s);
    let trivial_bound = 2.0 * m as f64;
    let km_bound = koolen_moulton_bound(n, m);
    Ok(EnergyReport {
        energy: e,
        vertex_count: n,
        edge_count: m,
        energy_per_vertex: if n == 0 { 0.0 } else { e / n as f64 },
        trivial_bound,
        km_bound,
        bounds_satisfied: e <= trivial_bound + INEQUALITY_SLACK && e <= km_bound + INEQUALITY_SLACK,
    })
}

/// Two-sided bound on the energy of `G - E(H)` for a subgraph `H`:
/// `|E(G) - E(H)| <= E(G - E(H)) <= E(G) + E(H)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DaySoReport {
    #[serde(serialize_with = "serialize_sig15")]
    pub energy_g: f64,
    #[serde(serialize_with = "serialize_sig15")]
    pub energy_h: f64,
    #[serde(serialize_with = "serialize_sig15")]
    pub energy_g_minus_eh: f64,
    #[serde(serialize_with = "serialize_sig15")]
    pub lower: f64,
    #[serde(serialize_with = "serialize_sig15")]
    pub upper: f64,
    pub holds: bool,
}

impl DaySoReport {
    pub(crate) fn from_energies(energy_g: f64, energy_h: f64, energy_g_minus_eh: f64) -> Self {
        let lower = (energy_g - energy_h).abs();
        let upper = energy_g + energy_h;
        let holds = lower - INEQUALITY_SLACK <= energy_g_minus_eh
            && energy_g_minus_eh <= upper + INEQUALITY_SLACK;
        Self { energy_g, energy_h, energy_g_minus_eh, lower, upper, holds }
    }
}

/// Checks the edge-deletion inequality with `H` the spanning subgraph of `g`
/// on `h_edges`. Every energy comes from the numeric eigensolver.
pub fn verify_day_so<I, E>(g: &Graph, h_edges: I) -> Result<DaySoReport>
where
    I: IntoIterator<Item = E>,
    E: Into<Edge>,
{
    let h_edges: Vec<Edge> = h_edges.into_iter().map(Into::into).collect();
    let remainder = remove_edges(g, h_edges.iter().copied())?;
    let h = Graph::new(g.vertex_count(), h_edges)?;
    let e_g = energy(&numeric_spectrum(g)?);
    let e_h = energy(&numeric_spectrum(&h)?);
    let e_rest = energy(&numeric_spectrum(&remainder)?);
    Ok(DaySoReport::from_energies(e_g, e_h, e_rest))
}

/// `|E(H)/E(G) - 1| <= 2 Δ(G, H) / E(G)`, with Δ the size of the symmetric
/// difference of the edge sets.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioBoundReport {
    pub delta: usize,
    #[serde(serialize_with = "serialize_sig15")]
    pub energy_g: f64,
    /// Infinite (serialized as `null`) when `E(G) = 0 < E(H)`.
    #[serde(serialize_with = "serialize_sig15")]
    pub ratio_deviation: f64,
    #[serde(serialize_with = "serialize_sig15")]
    pub bound: f64,
    pub holds: bool,
}

impl RatioBoundReport {
    pub(crate) fn from_energies(delta: usize, energy_g: f64, energy_h: f64) -> Self {
        if energy_g == 0.0 {
            // bound is infinite; holds only if H has no energy either
            let (ratio_deviation, holds) = if energy_h == 0.0 { (0.0, true) } else { (f64::INFINITY, false) };
            return Self { delta, energy_g, ratio_deviation, bound: f64::INFINITY, holds };
        }
        let ratio_deviation = (energy_h / energy_g - 1.0).abs();
        let bound = 2.0 * delta as f64 / energy_g;
        Self { delta, energy_g, ratio_deviation, bound, holds: ratio_deviation <= bound + 1e-10 }
    }
}

pub fn ratio_bound_check(g: &Graph, h: &Graph) -> Result<RatioBoundReport> {
    let delta = edge_delta(g, h)?.delta;
    let e_g = energy(&numeric_spectrum(g)?);
    let e_h = energy(&numeric_spectrum(h)?);
    Ok(RatioBoundReport::from_energies(delta, e_g, e_h))
}

/// Fraction of vertices whose degree is the same in `g` and in its spanning
/// subgraph `g_sub`. Tends to 1 along a boundary-condition sequence that
/// only disturbs the boundary.
pub fn degree_preserved_fraction(g: &Graph, g_sub: &Graph) -> Result<f64> {
    if g.vertex_count() != g_sub.vertex_count() {
        return Err(Error::VertexCountMismatch { left: g.vertex_count(), right: g_sub.vertex_count() });
    }
    if let Some(e) = g_sub.edge_set().difference(g.edge_set()).next() {
        let (a, b) = e.endpoints();
        return Err(Error::NotSubgraph(a, b));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(1.0);
    }
    let same = g.degrees().iter().zip(g_sub.degrees()).filter(|(a, b)| **a == *b).count();
    Ok(same as f64 / n as f64)
}
