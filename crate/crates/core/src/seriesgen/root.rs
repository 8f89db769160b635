//! Series J: a square root of `(1+x)^4 (1+(2k+4)x²)^{2k+1}` that truncates.

use super::{repeat, require, DZPair};
use crate::error::Result;
use crate::polycore::rat::frac;
use crate::polycore::{trunc_pow, RatPoly, TruncSeries};
use crate::treecombi::Passport;

fn p_star(k: usize) -> RatPoly {
    let a = (2 * k + 4) as i64;
    &RatPoly::from_ints(&[1, 1]).pow(4) * &RatPoly::from_ints(&[1, 0, a]).pow((2 * k + 1) as u32)
}

/// The square root of `P*` through `x^order`.
pub fn series_j_root(k: usize, order: usize) -> Result<TruncSeries> {
    require(k >= 1, || format!("series J needs k >= 1, got {k}"))?;
    trunc_pow(&TruncSeries::from_poly(&p_star(k), order), &frac(1, 2))
}

/// `P` and `Q = A²` are the reciprocals of `P*` and of the square root of
/// `P*` cut at `x^{2k+3}`.
pub fn series_j(k: usize) -> Result<DZPair> {
    let a_star = series_j_root(k, 2 * k + 3)?.to_poly();
    let n = 4 * k + 6;
    let p = p_star(k).reciprocal(n)?;
    let a = a_star.reciprocal(2 * k + 3)?;
    let q = a.pow(2);
    let passport = Passport::from_parts(vec![4, 2 * k + 1, 2 * k + 1], repeat(2, 2 * k + 3))?;
    DZPair::new(p, q, passport, format!("J(k={k})"))
        .with_component("P*", p_star(k))
        .with_component("A*", a_star)
        .with_component("A", a)
        .certify()
}
