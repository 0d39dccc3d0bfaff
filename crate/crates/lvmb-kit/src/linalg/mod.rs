//! Exact rational and Gaussian-rational linear algebra.

mod matrix;
mod scalar;

pub use matrix::{ExactMatrix, IncrementalSpan, LinalgError};
pub use scalar::{rat, GaussianRational, Rational};

pub(crate) use scalar::{rational_from_repr, rational_to_f64, rational_to_repr, IntRepr, RationalRepr};
