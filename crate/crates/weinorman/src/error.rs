use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported basis `{0}`")]
    UnsupportedBasis(String),

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("basis not closed under bracket: worst pair ({i}, {j}) has residual {residual:.3e}")]
    BasisNotClosed { i: usize, j: usize, residual: f64 },

    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("eigenvalue computation failed: {0}")]
    EigensolveFailed(String),

    #[error("singular confluent interpolation system (condition estimate {cond:.3e})")]
    SingularConfluentSystem { cond: f64 },

    #[error("β coefficients have imaginary residue {residue:.3e}, spectrum is inconsistent")]
    ComplexResidue { residue: f64 },

    #[error(
        "chart singularity: |det Ξ| = {det:.6e} <= threshold {threshold:.3e} at γ = {gamma:?}"
    )]
    ChartSingularity {
        gamma: Vec<f64>,
        det: f64,
        threshold: f64,
    },

    #[error("chart is singular at the origin; start from a point where it is invertible or use a different chart")]
    ChartSingularAtOrigin,

    #[error("non-finite input")]
    NonFiniteInput,

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
