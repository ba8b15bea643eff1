//! Presentations of the algebras and the PBW normal-form engine.

mod element;
mod engine;
mod generator;
mod monomial;
mod presentation;

use thiserror::Error;

pub use element::AlgebraElement;
pub use generator::GeneratorId;
pub use monomial::{Letter, Monomial};
pub use presentation::{Crossing, Family, PresKey, Presentation, RewriteRule};

use crate::coeffs::CoeffError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{family} needs a larger rank than {m}")]
    UnsupportedRank { family: Family, m: u32 },
    #[error("{0}*{1} is already in PBW order")]
    NotOutOfOrder(String, String),
    #[error("unknown letter {0}")]
    UnknownLetter(String),
    #[error("elements belong to different presentations")]
    DomainMismatch,
    #[error("bad indices ({0}, {1})")]
    BadIndices(u32, u32),
    #[error("operation not defined for {0}")]
    WrongFamily(Family),
    #[error("order n = {0} not supported (need n >= 3)")]
    UnsupportedN(u32),
    #[error("closed form left negative powers of x (m = {0})")]
    NonPolynomialResult(u32),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
