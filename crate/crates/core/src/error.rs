use thiserror::Error;

use crate::generators::MeasureId;

/// Errors raised by the divergence library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("entry {index} is not strictly positive ({value})")]
    NonPositiveEntry { index: usize, value: f64 },

    #[error("entries sum to {sum}, which is not within 1e-12 of 1")]
    SumNotOne { sum: f64 },

    #[error("a distribution needs at least 2 entries, got {len}")]
    TooShort { len: usize },

    #[error("distributions have different lengths ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{0} is a mean sum, not a normalized divergence")]
    NotADivergence(MeasureId),

    #[error("evaluation grid is empty")]
    EmptyGrid,

    #[error("grid point {0} is not strictly positive")]
    NonPositiveGridPoint(f64),

    #[error("measure table has no value for {0}")]
    IncompleteValues(MeasureId),

    #[error("chain positions ({upper}, {lower}) do not name a pyramid difference")]
    OutOfRange { upper: usize, lower: usize },

    #[error("pyramid index {0} is outside 1..=55")]
    IndexOutOfRange(usize),

    #[error("denominator second derivative is not positive at x = {x}")]
    DenominatorVanishes { x: f64 },

    #[error("limit extrapolation did not converge ({coarse} vs {fine})")]
    ExtrapolationDiverged { coarse: f64, fine: f64 },

    #[error("invalid search interval [{lo}, {hi}] with {points} points")]
    InvalidInterval { lo: f64, hi: f64, points: usize },

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("linear combination has no terms")]
    EmptyCombination,
}

pub type Result<T> = std::result::Result<T, Error>;
