//! Planar lattice graphs under toroidal, cylindrical, Möbius-band, Klein-bottle
//! and free boundary conditions.
//!
//! Every lattice lives on an `rows x cols` grid of unit cells. Vertices are
//! numbered row-major, with the sublattice index innermost for the two-vertex
//! hexagonal cell, so the same site has the same label under every boundary
//! condition. That makes the boundary variants directly comparable edge by
//! edge: `Free ⊆ Cylindrical ⊆ Toroidal` and `Free ⊆ MobiusBand ⊆ KleinBottle`.
//!
//! Rows are the periodic direction of the cylinder. The Möbius band closes the
//! rows with a reversal of the column index (`col -> cols - 1 - col`), and the
//! Klein bottle is the Möbius band with the columns also wrapped.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Square,
    Triangular,
    /// The 3³.4² Archimedean lattice: a square grid with a diagonal in every
    /// other square of each row strip.
    TriSquare,
    Hexagonal,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Square,
        Family::Triangular,
        Family::TriSquare,
        Family::Hexagonal,
    ];

    /// Vertices per grid cell.
    pub fn cell_size(self) -> usize {
        match self {
            Family::Hexagonal => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Square => "square",
            Family::Triangular => "triangular",
            Family::TriSquare => "trisquare",
            Family::Hexagonal => "hexagonal",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown lattice family `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Boundary {
    #[serde(rename = "toroidal")]
    Toroidal,
    #[serde(rename = "cylindrical")]
    Cylindrical,
    #[serde(rename = "mobius")]
    MobiusBand,
    #[serde(rename = "klein")]
    KleinBottle,
    #[serde(rename = "free")]
    Free,
}

impl Boundary {
    pub const ALL: [Boundary; 5] = [
        Boundary::Toroidal,
        Boundary::Cylindrical,
        Boundary::MobiusBand,
        Boundary::KleinBottle,
        Boundary::Free,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Boundary::Toroidal => "toroidal",
            Boundary::Cylindrical => "cylindrical",
            Boundary::MobiusBand => "mobius",
            Boundary::KleinBottle => "klein",
            Boundary::Free => "free",
        }
    }

    pub fn wraps_rows(self) -> bool {
        !matches!(self, Boundary::Free)
    }

    /// Whether the row identification reverses the column index.
    pub fn twists_rows(self) -> bool {
        matches!(self, Boundary::MobiusBand | Boundary::KleinBottle)
    }

    pub fn wraps_cols(self) -> bool {
        matches!(self, Boundary::Toroidal | Boundary::KleinBottle)
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Boundary {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Boundary::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown boundary condition `{s}`"))
    }
}

/// A validated lattice description: family, boundary condition and grid size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeSpec {
    family: Family,
    boundary: Boundary,
    rows: usize,
    cols: usize,
}

impl LatticeSpec {
    /// Wrapped dimensions must be at least 3 so the result stays simple, and
    /// the 3³.4² lattice needs an even column count because its diagonals
    /// pair up columns.
    pub fn new(family: Family, boundary: Boundary, rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 {
            return Err(Error::EmptyDimension { dimension: "rows" });
        }
        if cols == 0 {
            return Err(Error::EmptyDimension { dimension: "cols" });
        }
        if boundary.wraps_rows() && rows < 3 {
            return Err(Error::DimensionTooSmall { dimension: "rows", value: rows });
        }
        if boundary.wraps_cols() && cols < 3 {
            return Err(Error::DimensionTooSmall { dimension: "cols", value: cols });
        }
        if family == Family::TriSquare && cols % 2 != 0 {
            return Err(Error::OddColumns { cols });
        }
        Ok(Self { family, boundary, rows, cols })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vertex_count(&self) -> usize {
        self.rows * self.cols * self.family.cell_size()
    }

    /// Same family and size under another boundary condition.
    pub fn with_boundary(&self, boundary: Boundary) -> Result<Self> {
        Self::new(self.family, boundary, self.rows, self.cols)
    }

    fn index(&self, row: usize, col: usize, sub: usize) -> usize {
        (row * self.cols + col) * self.family.cell_size() + sub
    }

    /// Grid cell reached from `(row, col)` by the offset, or `None` when the
    /// step leaves an open side.
    fn step(&self, row: usize, col: usize, dr: isize, dc: isize) -> Option<(usize, usize)> {
        let n = self.rows as isize;
        let m = self.cols as isize;
        let mut r = row as isize + dr;
        let mut c = col as isize + dc;
        if !(0..m).contains(&c) {
            if !self.boundary.wraps_cols() {
                return None;
            }
            c = c.rem_euclid(m);
        }
        if !(0..n).contains(&r) {
            if !self.boundary.wraps_rows() {
                return None;
            }
            r = r.rem_euclid(n);
            if self.boundary.twists_rows() {
                c = m - 1 - c;
            }
        }
        Some((r as usize, c as usize))
    }
}

impl fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}x{}", self.family, self.boundary, self.rows, self.cols)
    }
}

/// An undirected edge stored with its smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// repeated edges.
    pub fn new<I, E>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut set = BTreeSet::new();
        for e in edges {
            let e = e.into();
            let (a, b) = e.endpoints();
            if a == b || b >= vertex_count {
                return Err(Error::InvalidEdge(a, b, vertex_count));
            }
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Self { vertex_count, edges: set })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self { vertex_count, edges: BTreeSet::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&Edge::new(a, b))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for Edge(a, b) in self.edges() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Dense row-major 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.vertex_count;
        let mut a = vec![0.0; n * n];
        for Edge(i, j) in self.edges() {
            a[i * n + j] = 1.0;
            a[j * n + i] = 1.0;
        }
        a
    }

    /// Renames vertex `v` to `perm[v]`.
    ///
    /// # Panics
    ///
    /// Panics if `perm` is not a permutation of `0..vertex_count`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count, "permutation length");
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(p < perm.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        Graph {
            vertex_count: self.vertex_count,
            edges: self.edges().map(|Edge(a, b)| Edge::new(perm[a], perm[b])).collect(),
        }
    }

    /// Disjoint union with `other`'s vertices shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let edges = self
            .edges()
            .chain(other.edges().map(|Edge(a, b)| Edge(a + shift, b + shift)))
            .collect();
        Graph { vertex_count: self.vertex_count + other.vertex_count, edges }
    }

    /// Serializes as `p <vertices> <edges>` followed by one `e <i> <j>` line
    /// per edge, sorted, with `i < j`.
    pub fn to_edge_list(&self) -> String {
        use std::fmt::Write;

        let mut out = String::with_capacity(16 * (self.edges.len() + 1));
        writeln!(out, "p {} {}", self.vertex_count, self.edges.len()).unwrap();
        for Edge(a, b) in self.edges() {
            writeln!(out, "e {a} {b}").unwrap();
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let parse_err = |line: usize, reason: &str| Error::Parse { line, reason: reason.to_string() };
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (vertices, edge_count) = match fields.as_slice() {
            ["p", v, e] => (
                v.parse::<usize>().map_err(|_| parse_err(hline + 1, "bad vertex count"))?,
                e.parse::<usize>().map_err(|_| parse_err(hline + 1, "bad edge count"))?,
            ),
            _ => return Err(parse_err(hline + 1, "expected `p <vertices> <edges>`")),
        };
        let mut edges = Vec::with_capacity(edge_count);
        for (i, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["e", a, b] => {
                    let a = a.parse::<usize>().map_err(|_| parse_err(i + 1, "bad endpoint"))?;
                    let b = b.parse::<usize>().map_err(|_| parse_err(i + 1, "bad endpoint"))?;
                    edges.push(Edge::new(a, b));
                }
                _ => return Err(parse_err(i + 1, "expected `e <i> <j>`")),
            }
        }
        if edges.len() != edge_count {
            return Err(parse_err(hline + 1, "edge count does not match header"));
        }
        Graph::new(vertices, edges)
    }
}

/// Symmetric difference of two edge sets on a shared labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDelta {
    pub only_in_g: BTreeSet<Edge>,
    pub only_in_h: BTreeSet<Edge>,
    pub delta: usize,
}

/// Offsets `(from_sub, d_row, d_col, to_sub)` of the bonds leaving a cell,
/// listed once per undirected edge.
fn stencil(family: Family, col: usize) -> &'static [(usize, isize, isize, usize)] {
    match family {
        Family::Square => &[(0, 0, 1, 0), (0, 1, 0, 0)],
        Family::Triangular => &[(0, 0, 1, 0), (0, 1, 0, 0), (0, 1, 1, 0)],
        Family::TriSquare if col % 2 == 1 => &[(0, 0, 1, 0), (0, 1, 0, 0), (0, 1, -1, 0)],
        Family::TriSquare => &[(0, 0, 1, 0), (0, 1, 0, 0)],
        // sublattice A (0) bonds to B (1) in its own cell, the cell to the
        // left and the cell above
        Family::Hexagonal => &[(0, 0, 0, 1), (0, 0, -1, 1), (0, -1, 0, 1)],
    }
}

pub fn build_lattice(spec: &LatticeSpec) -> Graph {
    let mut edges = BTreeSet::new();
    for row in 0..spec.rows {
        for col in 0..spec.cols {
            for &(from, dr, dc, to) in stencil(spec.family, col) {
                if let Some((r2, c2)) = spec.step(row, col, dr, dc) {
                    let a = spec.index(row, col, from);
                    let b = spec.index(r2, c2, to);
                    debug_assert_ne!(a, b, "self-loop in {spec}");
                    let fresh = edges.insert(Edge::new(a, b));
                    debug_assert!(fresh, "parallel edge in {spec}");
                }
            }
        }
    }
    Graph { vertex_count: spec.vertex_count(), edges }
}

pub fn edge_delta(g: &Graph, h: &Graph) -> Result<EdgeDelta> {
    if g.vertex_count != h.vertex_count {
        return Err(Error::VertexCountMismatch { left: g.vertex_count, right: h.vertex_count });
    }
    let only_in_g: BTreeSet<Edge> = g.edges.difference(&h.edges).copied().collect();
    let only_in_h: BTreeSet<Edge> = h.edges.difference(&g.edges).copied().collect();
    let delta = only_in_g.len() + only_in_h.len();
    Ok(EdgeDelta { only_in_g, only_in_h, delta })
}

pub fn remove_edges<I, E>(g: &Graph, edges: I) -> Result<Graph>
where
    I: IntoIterator<Item = E>,
    E: Into<Edge>,
{
    let mut out = g.clone();
    for e in edges {
        let e = e.into();
        if !out.edges.remove(&e) {
            let (a, b) = e.endpoints();
            return Err(Error::EdgeNotPresent(a, b));
        }
    }
    Ok(out)
}

/// Number of vertices of each degree.
pub fn degree_histogram(g: &Graph) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for d in g.degrees() {
        *hist.entry(d).or_insert(0) += 1;
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(f: Family, b: Boundary, n: usize, m: usize) -> Graph {
        build_lattice(&LatticeSpec::new(f, b, n, m).unwrap())
    }

    #[test]
    fn free_square_2x2_is_a_four_cycle() {
        let g = lattice(Family::Square, Boundary::Free, 2, 2);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn toroidal_regularity() {
        for (n, m) in [(3, 3), (4, 7), (6, 5)] {
            let t = lattice(Family::Triangular, Boundary::Toroidal, n, m);
            assert_eq!((t.vertex_count(), t.edge_count()), (n * m, 3 * n * m));
            assert_eq!(degree_histogram(&t), BTreeMap::from([(6, n * m)]));

            let h = lattice(Family::Hexagonal, Boundary::Toroidal, n, m);
            assert_eq!((h.vertex_count(), h.edge_count()), (2 * n * m, 3 * n * m));
            assert_eq!(degree_histogram(&h), BTreeMap::from([(3, 2 * n * m)]));

            let s = lattice(Family::Square, Boundary::Toroidal, n, m);
            assert_eq!(degree_histogram(&s), BTreeMap::from([(4, n * m)]));
        }
    }

    #[test]
    fn trisquare_toroidal_4x6() {
        let g = lattice(Family::TriSquare, Boundary::Toroidal, 4, 6);
        assert_eq!(g.vertex_count(), 24);
        assert_eq!(g.edge_count(), 60);
        assert_eq!(degree_histogram(&g), BTreeMap::from([(5, 24)]));
    }

    #[test]
    fn spec_validation() {
        assert_eq!(
            LatticeSpec::new(Family::Square, Boundary::Toroidal, 2, 5),
            Err(Error::DimensionTooSmall { dimension: "rows", value: 2 })
        );
        assert_eq!(
            LatticeSpec::new(Family::Square, Boundary::KleinBottle, 5, 2),
            Err(Error::DimensionTooSmall { dimension: "cols", value: 2 })
        );
        // cylinder leaves columns open
        assert!(LatticeSpec::new(Family::Square, Boundary::Cylindrical, 3, 1).is_ok());
        assert!(LatticeSpec::new(Family::Square, Boundary::Free, 1, 1).is_ok());
        assert_eq!(
            LatticeSpec::new(Family::TriSquare, Boundary::Free, 4, 5),
            Err(Error::OddColumns { cols: 5 })
        );
        assert!(LatticeSpec::new(Family::Hexagonal, Boundary::Free, 0, 3).is_err());
    }

    #[test]
    fn square_free_3x3_histogram() {
        let g = lattice(Family::Square, Boundary::Free, 3, 3);
        assert_eq!(degree_histogram(&g), BTreeMap::from([(2, 4), (3, 4), (4, 1)]));
    }

    #[test]
    fn triangular_cylinder_seam_is_2n() {
        for (n, m) in [(4, 4), (5, 7), (9, 3)] {
            let t = lattice(Family::Triangular, Boundary::Toroidal, n, m);
            let c = lattice(Family::Triangular, Boundary::Cylindrical, n, m);
            let d = edge_delta(&t, &c).unwrap();
            assert_eq!(d.delta, 2 * n);
            assert!(d.only_in_h.is_empty());
            let stripped = remove_edges(&t, d.only_in_g.iter().copied()).unwrap();
            assert_eq!(stripped, c);
        }
    }

    #[test]
    fn hexagonal_cylinder_to_free_removes_one_row_seam() {
        for (n, m) in [(4, 4), (5, 7), (6, 3)] {
            let c = lattice(Family::Hexagonal, Boundary::Cylindrical, n, m);
            let f = lattice(Family::Hexagonal, Boundary::Free, n, m);
            assert_eq!(edge_delta(&c, &f).unwrap().delta, m);
        }
    }

    #[test]
    fn trisquare_seams_follow_deletion_lists() {
        // toroidal -> cylindrical drops the n column-seam edges; cylindrical
        // -> free drops the 2m' straight plus m' diagonal row-seam edges
        let (n, cols) = (5, 8);
        let t = lattice(Family::TriSquare, Boundary::Toroidal, n, cols);
        let c = lattice(Family::TriSquare, Boundary::Cylindrical, n, cols);
        let f = lattice(Family::TriSquare, Boundary::Free, n, cols);
        assert_eq!(edge_delta(&t, &c).unwrap().delta, n);
        assert_eq!(edge_delta(&c, &f).unwrap().delta, cols + cols / 2);
    }

    #[test]
    fn edge_delta_identity_and_mismatch() {
        let g = lattice(Family::Hexagonal, Boundary::KleinBottle, 4, 4);
        assert_eq!(edge_delta(&g, &g).unwrap().delta, 0);
        let h = Graph::empty(3);
        assert_eq!(
            edge_delta(&g, &h),
            Err(Error::VertexCountMismatch { left: 32, right: 3 })
        );
    }

    #[test]
    fn remove_edges_cases() {
        let c4 = lattice(Family::Square, Boundary::Free, 2, 2);
        let all: Vec<Edge> = c4.edges().collect();
        let bare = remove_edges(&c4, all).unwrap();
        assert_eq!((bare.vertex_count(), bare.edge_count()), (4, 0));
        assert_eq!(remove_edges(&c4, Vec::<Edge>::new()).unwrap(), c4);
        assert_eq!(remove_edges(&c4, [(0, 3)]), Err(Error::EdgeNotPresent(0, 3)));
    }

    #[test]
    fn twisted_variants_keep_counts() {
        for f in Family::ALL {
            let (n, m) = (5, 6);
            let count = |b| lattice(f, b, n, m).edge_count();
            assert_eq!(count(Boundary::MobiusBand), count(Boundary::Cylindrical), "{f}");
            assert_eq!(count(Boundary::KleinBottle), count(Boundary::Toroidal), "{f}");
        }
    }

    #[test]
    fn mobius_reverses_columns_across_the_seam() {
        let g = lattice(Family::Square, Boundary::MobiusBand, 3, 4);
        // (2, 0) joins (0, 3) rather than (0, 0)
        assert!(g.contains(2 * 4, 3));
        assert!(!g.contains(2 * 4, 0));
    }

    #[test]
    fn graph_rejects_non_simple_input() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::InvalidEdge(1, 1, 3)));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::InvalidEdge(0, 3, 3)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
    }

    #[test]
    fn edge_list_format() {
        let g = lattice(Family::Square, Boundary::Free, 2, 2);
        assert_eq!(g.to_edge_list(), "p 4 4\ne 0 1\ne 0 2\ne 1 3\ne 2 3\n");
        assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(Graph::from_edge_list("p 2 2\ne 0 1\n").is_err());
        assert!(Graph::from_edge_list("q 2 1\ne 0 1\n").is_err());
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        for b in Boundary::ALL {
            assert_eq!(b.name().parse::<Boundary>().unwrap(), b);
        }
        assert!("mobius-band".parse::<Boundary>().is_err());
    }
}
