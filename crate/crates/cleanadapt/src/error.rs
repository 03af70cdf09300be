//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite logits")]
    NonFiniteLogits,
    #[error("label {label} out of range for {num_classes} classes")]
    LabelOutOfRange { label: usize, num_classes: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("architecture mismatch between paired models")]
    ArchitectureMismatch,
    #[error("invalid dataset spec: {0}")]
    InvalidSpec(String),
    #[error("bad magic: expected {expected:?}")]
    BadMagic { expected: &'static str },
    #[error("truncated file: {0}")]
    Truncated(String),
    #[error("trailing bytes after payload")]
    TrailingData,
    #[error("dataset has mixed labeled/unlabeled samples")]
    MixedLabels,
    #[error("invalid label {label} for {num_classes} classes at sample {id}")]
    InvalidLabel {
        label: u32,
        num_classes: u32,
        id: usize,
    },
    #[error("non-finite feature value at sample {0}")]
    NonFiniteFeature(usize),
    #[error("unlabeled source")]
    UnlabeledSource,
    #[error("empty dataset")]
    EmptyDataset,
    #[error("no clean samples")]
    NoCleanSamples,
    #[error("missing labels: {0}")]
    MissingLabels(String),
    #[error("invalid keep rate {0}: must be in (0, 1]")]
    InvalidKeepRate(f64),
    #[error("retrieval k={k} exceeds gallery size {gallery}")]
    KTooLarge { k: usize, gallery: usize },
    #[error("config error: {0}")]
    Config(String),
    #[error("csv error: {0}")]
    Csv(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
