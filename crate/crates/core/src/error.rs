use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse partition {0:?}: {1}")]
    ParsePartition(String, String),
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },
    #[error("ribbon length must be at least 1")]
    ZeroRibbonLength,
    #[error("residue {residue} out of range for n = {n}")]
    Residue { residue: usize, n: usize },
    #[error("malformed biword line {0:?}")]
    Biword(String),
    #[error("malformed tableau pair: {0}")]
    TableauPair(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
