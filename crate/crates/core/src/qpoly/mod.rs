//! Exact arithmetic in Z[q] and Z[q][x].

mod bivar;
mod gauss;
mod intpoly;
pub mod render;

pub use bivar::{xq_expand, Basis, BivarPoly, MonomialPoly, SpecializedXq, XqPoly};
pub use gauss::{gaussian_binomial, general_linear_order, structure_constant};
pub use intpoly::{IntPoly, IntPolyQ};

/// `a * b` in the falling basis.
pub fn xq_mul(a: &XqPoly, b: &XqPoly) -> XqPoly {
    a.mul(b)
}
