//! Adjacency spectra: closed-form enumeration for the lattices whose
//! adjacency matrix block-diagonalizes under the discrete Fourier basis, and
//! a dense numeric route that serves every graph.

use std::f64::consts::PI;

use serde::Serialize;

use crate::eigen::SymmetricMatrix;
use crate::error::{Error, Result};
use crate::lattice::{Boundary, Family, Graph, LatticeSpec};

/// Largest vertex count the dense eigensolver accepts by default.
pub const DEFAULT_SIZE_CAP: usize = 6000;

/// Radicands this far below zero are rounding noise at a conical zero.
const RADICAND_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    Numeric,
}

/// A multiset of eigenvalues, kept sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    provenance: Provenance,
}

impl Spectrum {
    pub fn new(mut eigenvalues: Vec<f64>, provenance: Provenance, vertex_count: usize) -> Result<Self> {
        if eigenvalues.len() != vertex_count {
            return Err(Error::SpectrumLength { got: eigenvalues.len(), expected: vertex_count });
        }
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Ok(Self { eigenvalues, provenance })
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn source_vertex_count(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Largest entrywise difference against another spectrum of equal length.
    pub fn max_abs_diff(&self, other: &Spectrum) -> Option<f64> {
        (self.eigenvalues.len() == other.eigenvalues.len()).then(|| {
            self.eigenvalues
                .iter()
                .zip(&other.eigenvalues)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    /// CSV with header `index,eigenvalue`, descending, 15 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,eigenvalue\n");
        for (i, v) in self.eigenvalues.iter().enumerate() {
            out.push_str(&format!("{i},{}\n", crate::format::sig15(*v)));
        }
        out
    }
}

/// `3 + 2cos x + 2cos y + 2cos(x + y) = |1 + e^{ix} + e^{iy}|^2`, clamped at
/// zero.
pub(crate) fn honeycomb_radicand(x: f64, y: f64) -> f64 {
    let r = 3.0 + 2.0 * x.cos() + 2.0 * y.cos() + 2.0 * (x + y).cos();
    debug_assert!(r > -RADICAND_SLACK, "negative radicand {r}");
    r.max(0.0)
}

fn cycle_phases(n: usize) -> impl Iterator<Item = f64> + Clone {
    (0..n).map(move |i| 2.0 * PI * i as f64 / n as f64)
}

/// Eigenvalues of the path `P_n`.
fn path_eigenvalues(n: usize) -> impl Iterator<Item = f64> + Clone {
    (1..=n).map(move |i| 2.0 * (i as f64 * PI / (n + 1) as f64).cos())
}

/// Eigenvalues of the cycle `C_n`.
fn cycle_eigenvalues(n: usize) -> impl Iterator<Item = f64> + Clone {
    cycle_phases(n).map(|t| 2.0 * t.cos())
}

fn sum_product(a: impl Iterator<Item = f64>, b: impl Iterator<Item = f64> + Clone) -> Vec<f64> {
    a.flat_map(|x| b.clone().map(move |y| x + y)).collect()
}

/// Spectrum from the Fourier block-diagonalization of the lattice.
///
/// Available for every family on the torus and, as a Cartesian product of
/// paths and cycles, for the square lattice on the cylinder and with free
/// boundaries.
pub fn closed_form_spectrum(spec: &LatticeSpec) -> Result<Spectrum> {
    let (n, m) = (spec.rows(), spec.cols());
    let values = match (spec.family(), spec.boundary()) {
        (Family::Square, Boundary::Toroidal) => sum_product(cycle_eigenvalues(n), cycle_eigenvalues(m)),
        (Family::Square, Boundary::Cylindrical) => sum_product(cycle_eigenvalues(n), path_eigenvalues(m)),
        (Family::Square, Boundary::Free) => sum_product(path_eigenvalues(n), path_eigenvalues(m)),
        (Family::Triangular, Boundary::Toroidal) => cycle_phases(n)
            .flat_map(|x| cycle_phases(m).map(move |y| 2.0 * (x.cos() + y.cos() + (x + y).cos())))
            .collect(),
        (Family::TriSquare, Boundary::Toroidal) => {
            // two-vertex cell per column pair
            let cells = m / 2;
            cycle_phases(n)
                .flat_map(|x| {
                    cycle_phases(cells).flat_map(move |y| {
                        let centre = 2.0 * x.cos();
                        let radius = honeycomb_radicand(x, y).sqrt();
                        [centre + radius, centre - radius]
                    })
                })
                .collect()
        }
        (Family::Hexagonal, Boundary::Toroidal) => cycle_phases(n)
            .flat_map(|x| {
                cycle_phases(m).flat_map(move |y| {
                    let radius = honeycomb_radicand(x, y).sqrt();
                    [radius, -radius]
                })
            })
            .collect(),
        _ => return Err(Error::NoClosedForm(spec.to_string())),
    };
    Spectrum::new(values, Provenance::ClosedForm, spec.vertex_count())
}

pub fn numeric_spectrum(g: &Graph) -> Result<Spectrum> {
    numeric_spectrum_with_cap(g, DEFAULT_SIZE_CAP)
}

/// Full spectrum from the dense symmetric eigensolver, refusing graphs with
/// more than `cap` vertices.
pub fn numeric_spectrum_with_cap(g: &Graph, cap: usize) -> Result<Spectrum> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::TooLarge { vertices: n, cap });
    }
    let values = SymmetricMatrix::from_row_major(n, g.adjacency_matrix()).eigenvalues();
    Spectrum::new(values, Provenance::Numeric, n)
}

/// Closed form where one exists, the numeric solver otherwise.
pub fn lattice_spectrum(spec: &LatticeSpec, cap: usize) -> Result<Spectrum> {
    match closed_form_spectrum(spec) {
        Err(Error::NoClosedForm(_)) => numeric_spectrum_with_cap(&crate::lattice::build_lattice(spec), cap),
        other => other,
    }
}

/// `k`-th power sum of the eigenvalues, which counts closed walks of length
/// `k`: 0 for `k = 1`, `2|E|` for `k = 2`, six times the triangles for `k = 3`.
pub fn spectral_moment(s: &Spectrum, k: u32) -> f64 {
    assert!(k >= 1, "moment order must be positive");
    s.eigenvalues.iter().map(|v| v.powi(k as i32)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;
    use approx::assert_abs_diff_eq;

    fn spec(f: Family, b: Boundary, n: usize, m: usize) -> LatticeSpec {
        LatticeSpec::new(f, b, n, m).unwrap()
    }

    fn assert_multiset(got: &Spectrum, want: &[(f64, usize)]) {
        let mut expanded: Vec<f64> = want
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat(v).take(k))
            .collect();
        expanded.sort_by(|a, b| b.total_cmp(a));
        assert_eq!(got.eigenvalues().len(), expanded.len());
        for (g, w) in got.eigenvalues().iter().zip(&expanded) {
            assert_abs_diff_eq!(*g, *w, epsilon = 1e-12);
        }
    }

    #[test]
    fn triangular_torus_3x3() {
        let s = closed_form_spectrum(&spec(Family::Triangular, Boundary::Toroidal, 3, 3)).unwrap();
        assert_multiset(&s, &[(6.0, 1), (0.0, 6), (-3.0, 2)]);
        assert_abs_diff_eq!(spectral_moment(&s, 2), 54.0, epsilon = 1e-12);
        assert_eq!(s.provenance(), Provenance::ClosedForm);
    }

    #[test]
    fn square_torus_4x4() {
        let s = closed_form_spectrum(&spec(Family::Square, Boundary::Toroidal, 4, 4)).unwrap();
        assert_multiset(&s, &[(4.0, 1), (2.0, 4), (0.0, 6), (-2.0, 4), (-4.0, 1)]);
    }

    #[test]
    fn hexagonal_torus_is_symmetric() {
        let s = closed_form_spectrum(&spec(Family::Hexagonal, Boundary::Toroidal, 5, 7)).unwrap();
        let v = s.eigenvalues();
        for (a, b) in v.iter().zip(v.iter().rev()) {
            assert_abs_diff_eq!(*a, -*b, epsilon = 1e-12);
        }
    }

    #[test]
    fn unsupported_combinations() {
        for (f, b) in [
            (Family::Triangular, Boundary::Free),
            (Family::Hexagonal, Boundary::Cylindrical),
            (Family::Square, Boundary::MobiusBand),
            (Family::TriSquare, Boundary::KleinBottle),
        ] {
            assert!(matches!(
                closed_form_spectrum(&spec(f, b, 4, 4)),
                Err(Error::NoClosedForm(_))
            ));
        }
    }

    #[test]
    fn small_numeric_spectra() {
        let edge = Graph::new(2, [(0, 1)]).unwrap();
        assert_multiset(&numeric_spectrum(&edge).unwrap(), &[(1.0, 1), (-1.0, 1)]);
        let c4 = build_lattice(&spec(Family::Square, Boundary::Free, 2, 2));
        let s = numeric_spectrum(&c4).unwrap();
        assert_multiset(&s, &[(2.0, 1), (0.0, 2), (-2.0, 1)]);
        assert_eq!(s.provenance(), Provenance::Numeric);
    }

    #[test]
    fn numeric_agrees_with_closed_form_on_triangular_3x3() {
        let sp = spec(Family::Triangular, Boundary::Toroidal, 3, 3);
        let closed = closed_form_spectrum(&sp).unwrap();
        let numeric = numeric_spectrum(&build_lattice(&sp)).unwrap();
        assert!(closed.max_abs_diff(&numeric).unwrap() <= 1e-9);
    }

    #[test]
    fn square_closed_forms_match_numeric_on_open_boundaries() {
        for b in [Boundary::Cylindrical, Boundary::Free] {
            let sp = spec(Family::Square, b, 5, 7);
            let closed = closed_form_spectrum(&sp).unwrap();
            let numeric = numeric_spectrum(&build_lattice(&sp)).unwrap();
            assert!(closed.max_abs_diff(&numeric).unwrap() <= 1e-10, "{b}");
        }
    }

    #[test]
    fn size_cap_is_enforced() {
        let g = Graph::empty(11);
        assert_eq!(
            numeric_spectrum_with_cap(&g, 10),
            Err(Error::TooLarge { vertices: 11, cap: 10 })
        );
        let s = lattice_spectrum(&spec(Family::Hexagonal, Boundary::Free, 3, 3), 100).unwrap();
        assert_eq!(s.provenance(), Provenance::Numeric);
    }

    #[test]
    fn spectrum_length_is_checked() {
        assert!(Spectrum::new(vec![1.0], Provenance::Numeric, 2).is_err());
    }

    #[test]
    fn csv_layout() {
        let s = Spectrum::new(vec![-1.0, 1.0 / 3.0], Provenance::Numeric, 2).unwrap();
        assert_eq!(s.to_csv(), "index,eigenvalue\n0,0.333333333333333\n1,-1\n");
    }
}
