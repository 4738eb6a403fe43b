//! Exact arithmetic substrate: Laurent polynomials over `BigInt`, integer
//! matrices, exact signature and rank. No floating point anywhere.

mod matrix;
mod poly;

pub use matrix::{matrix_rank_rational, symmetric_inertia, symmetric_signature, IntMatrix};
pub use poly::{poly_det, LaurentPoly};
