use thiserror::Error;

/// Errors produced by lattice construction, spectra and energy analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{dimension} = {value} is too small for a wrapped dimension (need at least 3)")]
    DimensionTooSmall { dimension: &'static str, value: usize },

    #[error("{dimension} must be positive")]
    EmptyDimension { dimension: &'static str },

    #[error("the 3^3.4^2 lattice needs an even column count, got {cols}")]
    OddColumns { cols: usize },

    #[error("vertex counts differ: {left} vs {right}")]
    VertexCountMismatch { left: usize, right: usize },

    #[error("edge ({0}, {1}) is not present in the graph")]
    EdgeNotPresent(usize, usize),

    #[error("invalid edge ({0}, {1}) for a graph on {2} vertices")]
    InvalidEdge(usize, usize, usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("no closed-form spectrum for {0}")]
    NoClosedForm(String),

    #[error("{vertices} vertices exceeds the dense eigensolver cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },

    #[error("spectrum has {got} eigenvalues, expected {expected}")]
    SpectrumLength { got: usize, expected: usize },

    #[error("spectrum does not match graph: sum of squares {sum_sq} but 2|E| = {twice_edges}")]
    SpectrumMismatch { sum_sq: f64, twice_edges: usize },

    #[error("not a spanning subgraph: edge ({0}, {1}) is missing from the larger graph")]
    NotSubgraph(usize, usize),

    #[error("point has dimension {got}, integrand expects {expected}")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("tolerance {0} is below the supported minimum of 1e-6")]
    ToleranceTooTight(f64),

    #[error("malformed edge list at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
