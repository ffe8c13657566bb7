use thiserror::Error;

use crate::secular::FamilyTag;

pub type Result<T> = std::result::Result<T, HeptaError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HeptaError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("secular family has a non-finite node or weight")]
    NonRealNodes,

    #[error("{root} is not a root of the {family} family")]
    RootNotInSpectrum { root: f64, family: FamilyTag },

    #[error("{root} is a {multiplicity}-fold tied root of the {family} family; its eigenvector is not unique")]
    AmbiguousTie {
        root: f64,
        family: FamilyTag,
        multiplicity: usize,
    },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("spectral symbol lambda_{index} vanishes")]
    SymbolZero { index: usize },

    #[error("symbols lambda_{first} and lambda_{second} of the {family} family coincide")]
    DistinctnessViolated {
        family: FamilyTag,
        first: usize,
        second: usize,
    },
}
