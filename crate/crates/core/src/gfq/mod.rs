//! Small finite fields, dense matrices over them, and Grassmannian enumeration.

mod field;
mod matrix;
mod subspace;

pub use field::{prime_power, Elem, Field, SUPPORTED_ORDERS};
pub use matrix::{EchelonForm, FqMatrix};
pub use subspace::{grassmannian_size, pivot_patterns, subspace_iter, PivotCell, SubspaceIter};
