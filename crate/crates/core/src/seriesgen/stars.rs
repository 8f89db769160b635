//! Series A (stars) and D.

use super::{coprime, DZPair};
use crate::error::Result;
use crate::polycore::rat::{frac, rat};
use crate::polycore::{trunc_pow, RatPoly, TruncSeries};
use crate::treecombi::Passport;

/// Star with `k` edges of weight `s` and one of weight `t`.
///
/// `A*` is the binomial series of `(1−x)^{−t/s}` cut at `x^k`,
/// `P = x^n`, `Q = (x−1)^t A^s` with `A` the reciprocal of `A*`.
pub fn series_a(s: usize, t: usize, k: usize) -> Result<DZPair> {
    coprime("A", s, t)?;
    super::require(k >= 1, || format!("series A needs k >= 1, got {k}"))?;
    let n = k * s + t;
    let base = TruncSeries::new(vec![rat(1), rat(-1)], k);
    let a_star = trunc_pow(&base, &frac(-(t as i64), s as i64))?.to_poly();
    let a = a_star.reciprocal(k)?;
    let p = RatPoly::monomial(rat(1), n);
    let q = &RatPoly::from_ints(&[-1, 1]).pow(t as u32) * &a.pow(s as u32);
    let mut white = super::repeat(s, k);
    white.push(t);
    let passport = Passport::from_parts(vec![n], white)?;
    DZPair::new(p, q, passport, format!("A(s={s},t={t},k={k})"))
        .with_component("A*", a_star)
        .with_component("A", a)
        .certify()
}

/// `P = A^{2s+t}`, `Q = B^{s+t} C^s` with three explicit quadratics.
pub fn series_d(s: usize, t: usize) -> Result<DZPair> {
    coprime("D", s, t)?;
    let (s, t) = (s as i64, t as i64);
    let a = RatPoly::from_ints(&[-(3 * s + t) * (3 * s + 2 * t), 0, 1]);
    let b = RatPoly::from_ints(&[(3 * s - 2 * t) * (3 * s + t), -6 * s, 1]);
    let c = RatPoly::from_ints(&[(3 * s + 2 * t) * (3 * s + 5 * t), 6 * (s + t), 1]);
    let p = a.pow((2 * s + t) as u32);
    let q = &b.pow((s + t) as u32) * &c.pow(s as u32);
    let passport = Passport::from_parts(
        vec![(2 * s + t) as usize; 2],
        vec![(s + t) as usize, (s + t) as usize, s as usize, s as usize],
    )?;
    DZPair::new(p, q, passport, format!("D(s={s},t={t})"))
        .with_component("A", a)
        .with_component("B", b)
        .with_component("C", c)
        .certify()
}
