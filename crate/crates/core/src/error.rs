//! Crate-wide error type.

/// Errors shared by the geometry, solver, measure, and flow layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("support value not positive at angle index {index} (h = {value:.6e})")]
    OriginOutside { index: usize, value: f64 },
    #[error("body is not convex: radius of curvature {min_radius:.6e} at angle index {index}")]
    NonConvex { index: usize, min_radius: f64 },
    #[error("angle grids differ: {left} vs {right} samples")]
    GridMismatch { left: usize, right: usize },
    #[error("halfspace intersection has empty interior")]
    DegenerateIntersection,
    #[error("mesh generation failed: {0}")]
    MeshFailure(String),
    #[error("linear solver failed: {0}")]
    SolverFailure(String),
    #[error("eigen iteration did not converge within {0} iterations")]
    NonConvergence(usize),
    #[error("recovered boundary gradient is not strictly inward at boundary node {node}")]
    HopfViolation { node: usize },
    #[error("capacity is undefined in dimension {0}")]
    DimensionError(usize),
    #[error("boundary trace uncertified: residual {residual:.3e} exceeds gate {gate:.3e}")]
    UncertifiedTrace { residual: f64, gate: f64 },
    #[error("measure carries atoms; operation requires a pure density")]
    AtomsPresent,
    #[error("body is not centrally symmetric: asymmetry {0:.3e}")]
    SymmetryViolation(f64),
    #[error("time step fell below dt_min = {dt_min:.3e} at t = {t:.6}: {reason}")]
    StepFailure { t: f64, dt_min: f64, reason: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
