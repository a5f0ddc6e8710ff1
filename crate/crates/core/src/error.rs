use thiserror::Error;

use crate::exact::WeightVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid Gram form: {0}")]
    InvalidGramForm(String),
    #[error("unknown Cartan label: {0}")]
    UnknownCartanLabel(String),
    #[error("not a root system: {0}")]
    NotARootSystem(String),
    #[error("inconsistent positive system: {0}")]
    InconsistentPositiveSystem(String),
    #[error("Weyl group exceeds the cap of {cap} elements")]
    WeylGroupTooLarge { cap: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(WeightVector),
    #[error("{mu} is not K-dominant-integral{}", match .violated_root {
        Some(a) => format!(" (fails on compact root {a})"),
        None => " (not in the character lattice)".to_string(),
    })]
    NotKDominantIntegral { mu: WeightVector, violated_root: Option<WeightVector> },
    #[error("weight {0} is not central")]
    NotCentral(WeightVector),
    #[error("invalid real form: {0}")]
    InvalidRealForm(String),
    #[error("set is not invariant under the compact Weyl group: {0}")]
    NotWeylInvariant(String),
    #[error("not a genuine character: {0}")]
    InvalidCharacter(String),
    #[error("size cap exceeded: {0}")]
    SizeCapExceeded(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("internal error: {0}")]
    Internal(String),
}
