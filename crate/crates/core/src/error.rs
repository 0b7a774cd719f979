use thiserror::Error;

use crate::cartan::{AlgebraType, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("negative level {0}")]
    NegativeLevel(i64),
    #[error("weight {weight} is not in the level-{level} alcove")]
    OutsideAlcove { weight: Weight, level: i64 },
    #[error("fusion elements belong to different alcoves")]
    AlcoveMismatch,
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("all generators are zero")]
    ZeroGenerators,
    #[error("no generator formula for {algebra} at level {level}: {reason}")]
    LevelOutOfRange {
        algebra: AlgebraType,
        level: i64,
        reason: String,
    },
    #[error("operation requires G2, got {0}")]
    NotG2(AlgebraType),
    #[error("invalid search bound {0}")]
    InvalidBound(i64),
    #[error("empty multiset")]
    EmptyMultiset,
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
