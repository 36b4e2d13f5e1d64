//! Totally-isotropic polynomials of alternating matrix spaces over finite
//! fields, and the q-analogue of the graph independence polynomial that
//! interpolates them for graphical spaces.
//!
//! - [`gfq`]: small finite fields, matrices, Grassmannian enumeration
//! - [`qpoly`]: exact arithmetic in Z[q][x] in the monomial and q-falling bases
//! - [`graph`]: simple graphs, independent sets, independence polynomials
//! - [`altspace`]: alternating matrix spaces and brute-force enumeration
//! - [`qindep`]: the symbolic I(G, x, q) and its cross-check
//! - [`io`]: graph and matrix-space file formats

pub mod altspace;
pub mod error;
pub mod gfq;
pub mod graph;
pub mod io;
pub mod qindep;
pub mod qpoly;

pub use altspace::{classify_pq, plucker_support, AltSpace, PQLabel, SubspaceBasis, DEFAULT_GUARD_LIMIT};
pub use error::{FieldError, GraphError, MatrixError, ParseError, PolyError, SpaceError, StratumError};
pub use gfq::{Elem, EchelonForm, Field, FqMatrix};
pub use graph::{Graph, VertexSet};
pub use qindep::{cross_validate, q_independence_polynomial, CrossReport, QIndepPoly};
pub use qpoly::{BivarPoly, IntPoly, IntPolyQ, MonomialPoly, XqPoly};
