//! Exact polynomial and truncated power-series arithmetic.
//!
//! Everything here is exact: integer coefficients are arbitrary-precision
//! (`BigInt`), rationals are reduced fractions (`BigRational`), and series
//! are carried to an explicit truncation order in `u`. No floating point.
//!
//! Truncated series of equal order can be combined freely; mixing orders is
//! a programming error and panics.

mod bivariate;
mod intpoly;
mod laurent;
mod rational;
mod render;
mod twovar;
mod useries;

pub use bivariate::BivariateSeries;
pub use intpoly::{taylor_shift, IntPoly};
pub use laurent::LaurentPoly;
pub use rational::{eval_twovar_at_series, QBivariateSeries, QLaurentPoly, QPoly};
pub use twovar::TwoVarLaurent;
pub use useries::USeries;

use std::fmt;

/// Errors raised by arithmetic operations with caller-visible failure modes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Series inversion requires the constant term to be a unit.
    NonUnitConstant(String),
    /// Square-root inversion requires the constant term to equal one.
    ConstantNotOne(String),
    /// A division that the theory guarantees to be exact left a remainder.
    InexactDivision(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::NonUnitConstant(s) => {
                write!(f, "constant term is not a unit: {s}")
            }
            AlgebraError::ConstantNotOne(s) => {
                write!(f, "constant term is not 1: {s}")
            }
            AlgebraError::InexactDivision(s) => write!(f, "inexact division: {s}"),
        }
    }
}

impl std::error::Error for AlgebraError {}
