//! Energy of planar lattice graphs.
//!
//! Builds square, triangular, 3³.4² and hexagonal lattices under toroidal,
//! cylindrical, Möbius-band, Klein-bottle and free boundary conditions,
//! computes their adjacency spectra (closed form where the lattice is
//! translation invariant, dense eigensolver otherwise), and evaluates graph
//! energy, the standard upper bounds, the edge-deletion inequalities and the
//! limiting energy per vertex.
//!
//! ```
//! use lattice_energy::{build_lattice, closed_form_spectrum, energy, numeric_spectrum};
//! use lattice_energy::{Boundary, Family, LatticeSpec};
//!
//! let spec = LatticeSpec::new(Family::Triangular, Boundary::Toroidal, 3, 3)?;
//! let closed = closed_form_spectrum(&spec)?;
//! let numeric = numeric_spectrum(&build_lattice(&spec))?;
//! assert!((energy(&closed) - 12.0).abs() < 1e-9);
//! assert!(closed.max_abs_diff(&numeric).unwrap() < 1e-9);
//! # Ok::<(), lattice_energy::Error>(())
//! ```

pub mod eigen;
pub mod energy;
pub mod error;
pub mod format;
pub mod lattice;
pub mod quadrature;
pub mod spectra;
pub mod sweep;

pub use energy::{
    degree_preserved_fraction, energy, energy_report, koolen_moulton_bound, ratio_bound_check, verify_day_so,
    DaySoReport, EnergyReport, RatioBoundReport,
};
pub use error::{Error, Result};
pub use lattice::{
    build_lattice, degree_histogram, edge_delta, remove_edges, Boundary, Edge, EdgeDelta, Family, Graph,
    LatticeSpec,
};
pub use quadrature::{asymptotic_constant, integrand, midpoint_mean, riemann_energy_per_vertex, IntegrandId, QuadratureResult};
pub use spectra::{
    closed_form_spectrum, lattice_spectrum, numeric_spectrum, numeric_spectrum_with_cap, spectral_moment,
    Provenance, Spectrum, DEFAULT_SIZE_CAP,
};
pub use sweep::{verify_family, Check, SweepOptions};
