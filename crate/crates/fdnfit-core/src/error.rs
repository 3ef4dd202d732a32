use std::path::PathBuf;

/// Errors produced by the synthesis, analysis, and fitting pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("numerical instability at frequency bin {bin}: {detail}")]
    NumericalInstability { bin: usize, detail: String },

    #[error("time-domain rendering diverged at sample {sample}")]
    Divergence { sample: usize },

    #[error("insufficient decay: EDC floor {floor_db:.2} dB never reaches -35 dB")]
    InsufficientDecay { floor_db: f64 },

    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    #[error("unsupported sample rate {got} Hz (expected {expected} Hz)")]
    SampleRate { got: u32, expected: u32 },

    #[error("malformed or unsupported WAV: {0}")]
    Wav(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
