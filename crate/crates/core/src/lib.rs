//! Symmetric divergence measures in the Csiszár f-divergence framework, the pyramid of
//! their 55 scaled differences, an inequality catalog with exact rational constants,
//! and numerical recovery of the tight constants.

pub mod combo;
pub mod constants;
pub mod dd;
pub mod distribution;
pub mod error;
pub mod generators;
pub mod inequalities;
pub mod measures;
pub mod numeric;
pub mod polynomial;
pub mod pyramid;

pub use combo::LinearCombo;
pub use constants::{grid_sup, limit_at_one, monotonicity_check, ratio_function, ConstantEstimate, RatioFunction};
pub use distribution::Distribution;
pub use error::{Error, Result};
pub use generators::{check_convexity, eval_csiszar, generating_function, GeneratingFunction, MeasureId};
pub use inequalities::{catalog, verify, verify_suite, Family, InequalityRecord, VerificationReport};
pub use measures::{check_chain5, evaluate, evaluate_all, MeasureTable, MeasureValue};
pub use polynomial::{count_positive_roots, eval_at_one, IntegerPolynomial};
pub use pyramid::{difference_generating_function, difference_index, evaluate_difference, pyramid_table, DifferenceId};
