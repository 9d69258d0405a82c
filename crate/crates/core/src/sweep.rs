//! Bound verification across all boundary conditions of one lattice.

use serde::Serialize;

use crate::energy::{energy, energy_report, DaySoReport, EnergyReport, RatioBoundReport};
use crate::error::Result;
use crate::lattice::{build_lattice, edge_delta, Boundary, Edge, Family, Graph, LatticeSpec};
use crate::spectra::{numeric_spectrum_with_cap, DEFAULT_SIZE_CAP};

/// One verification result. Serializes as the bare report object.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Check {
    Bounds(EnergyReport),
    RatioBound(RatioBoundReport),
    DaySo(DaySoReport),
}

impl Check {
    pub fn passed(&self) -> bool {
        match self {
            Check::Bounds(r) => r.bounds_satisfied,
            Check::RatioBound(r) => r.holds,
            Check::DaySo(r) => r.holds,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub size_cap: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { size_cap: DEFAULT_SIZE_CAP }
    }
}

/// Runs every check for `family` at `rows x cols`, in a fixed order:
///
/// 1. energy bounds for each boundary condition, in [`Boundary::ALL`] order;
/// 2. the ratio bound for every ordered pair of distinct boundaries;
/// 3. the edge-deletion inequality for every ordered pair `(G, H)` where
///    `H` is a proper spanning subgraph of `G`, deleting `E(G) \ E(H)`.
pub fn verify_family(family: Family, rows: usize, cols: usize, opts: SweepOptions) -> Result<Vec<Check>> {
    let lattices: Vec<Graph> = Boundary::ALL
        .iter()
        .map(|&b| LatticeSpec::new(family, b, rows, cols).map(|s| build_lattice(&s)))
        .collect::<Result<_>>()?;
    let energy_of = |g: &Graph| numeric_spectrum_with_cap(g, opts.size_cap).map(|s| energy(&s));

    let mut checks = Vec::new();
    let mut energies = Vec::with_capacity(lattices.len());
    for g in &lattices {
        let s = numeric_spectrum_with_cap(g, opts.size_cap)?;
        energies.push(energy(&s));
        checks.push(Check::Bounds(energy_report(g, &s)?));
    }

    for (i, g) in lattices.iter().enumerate() {
        for (j, h) in lattices.iter().enumerate() {
            if i != j {
                let delta = edge_delta(g, h)?.delta;
                checks.push(Check::RatioBound(RatioBoundReport::from_energies(delta, energies[i], energies[j])));
            }
        }
    }

    for (i, g) in lattices.iter().enumerate() {
        for (j, h) in lattices.iter().enumerate() {
            let d = edge_delta(g, h)?;
            if i == j || !d.only_in_h.is_empty() || d.only_in_g.is_empty() {
                continue;
            }
            // G - E(H') with H' = the deleted seam is exactly h
            let seam = Graph::new(g.vertex_count(), d.only_in_g.iter().copied().map(Edge::from))?;
            let e_seam = energy_of(&seam)?;
            checks.push(Check::DaySo(DaySoReport::from_energies(energies[i], e_seam, energies[j])));
        }
    }
    Ok(checks)
}
