use airloc_geom::GeomError;

use crate::FilterKind;

/// Errors raised by trace handling and the attitude filters.
#[derive(Debug, thiserror::Error)]
pub enum FusionError {
    #[error("trace is empty")]
    EmptyTrace,

    #[error("timestamps must be strictly increasing (violation at sample {index})")]
    NonMonotonicTimestamps { index: usize },

    #[error("sample {index} contains a non-finite value")]
    NonFiniteSample { index: usize },

    #[error("time step must be positive, got {dt}")]
    BadTimeStep { dt: f64 },

    #[error("filter gains must be non-negative")]
    NegativeGain,

    #[error("provided gains do not match filter kind {kind:?}")]
    GainKindMismatch { kind: FilterKind },

    #[error("truth sequence has {truth} entries but the trace has {trace} samples")]
    TruthLengthMismatch { trace: usize, truth: usize },

    #[error(transparent)]
    Geom(#[from] GeomError),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("CSV parse error on line {line}: {message}")]
    CsvParse { line: usize, message: String },
}
