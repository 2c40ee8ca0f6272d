//! Exact arithmetic substrate: rationals, multivariate polynomials, first-order
//! jets and dense matrices with deterministic row reduction.

mod jet;
mod linalg;
mod poly;
mod ring;
mod sampler;
mod scalar;

pub use jet::Jet1;
pub use linalg::{rank, solve_in_span, wedge, wedge_index, wedge_pairs, Echelon, Mat};
pub use poly::MultiPoly;
pub use ring::{Field, Ring};
pub use sampler::RationalSampler;
pub use scalar::{format_scalar, format_vec, int, is_zero_vec, parse_scalar, q, Scalar};
