//! Exact polynomial and truncated power-series arithmetic over the rationals.

mod gcd;
mod poly;
pub mod rat;
mod series;

pub use gcd::{poly_gcd, profile_to_partition, squarefree_decomposition, squarefree_profile};
pub use poly::{poly_add, poly_compose, poly_derivative, poly_mul, poly_pow, reciprocal, RatPoly};
pub use rat::BigRat;
pub use series::{trunc_pow, TruncSeries};
