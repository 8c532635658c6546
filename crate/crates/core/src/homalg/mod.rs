//! Exact integer linear algebra and homology of graded chain complexes.

mod complex;
mod matrix;
mod snf;

use num_bigint::BigInt;
use thiserror::Error;

pub use complex::{
    cancel_generator, euler_characteristic, homology, GradedComplex, HomologyGroup,
    HomologySummary,
};
pub(crate) use complex::parity_sign;
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomalgError {
    #[error("differential is {rows}x{cols} but the complex has {generators} generators")]
    DimensionMismatch {
        generators: usize,
        rows: usize,
        cols: usize,
    },
    #[error("duplicate generator label {0:?}")]
    DuplicateLabel(String),
    #[error("differential from {from:?} to {to:?} does not lower grading by one")]
    GradingMismatch { from: String, to: String },
    #[error("differential does not square to zero")]
    NotAComplex,
    #[error("no generator labelled {0:?}")]
    UnknownLabel(String),
    #[error("coefficient of {to:?} in d({from:?}) is {value}, not a unit")]
    NonUnitPivot {
        from: String,
        to: String,
        value: BigInt,
    },
}
