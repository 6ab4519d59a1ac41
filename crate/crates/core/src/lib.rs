//! Exact major-index generating functions for generalized Schröder paths,
//! row-increasing tableaux and increasing tableaux, together with the
//! statistic-preserving bijections that connect them.

pub mod bijections;
pub mod error;
pub mod formulas;
pub mod harness;
pub mod paths;
pub mod qseries;
pub mod tableaux;

pub use error::{Error, Result};
pub use qseries::LaurentPoly;
