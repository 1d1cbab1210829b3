//! Crate-wide error type.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("resource limit exceeded: {what} needs {requested} sites/qubits, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitIndex { index: usize, n_qubits: usize },

    #[error("control and target qubits overlap at index {0}")]
    OverlappingQubits(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not unitary (max deviation {deviation:.3e})")]
    NonUnitary { deviation: f64 },

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("degenerate partial-trace request: keep-set must be a proper non-empty subset")]
    DegenerateKeepSet,

    #[error("unsupported sector: {0}")]
    UnsupportedSector(String),

    #[error("parameter vector size mismatch: expected {expected}, got {actual}")]
    ParameterSize { expected: usize, actual: usize },

    #[error("optimization failed: {0}")]
    OptimizationFailed(String),
}
