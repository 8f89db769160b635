//! Series H and I, where `P` is a polynomial in an antiderivative `S`.

use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::{repeat, require, DZPair};
use crate::error::{DzError, Result};
use crate::polycore::rat::{binom, factorial, frac, int, rat, rat_pow};
use crate::polycore::{BigRat, RatPoly};
use crate::treecombi::Passport;

/// `S = K ∫₀^x t^{k−1}(1−t)^{l−1} dt` with `S(1) = 1`, and `P = 4S(1−S)`.
pub fn series_h(k: usize, l: usize) -> Result<DZPair> {
    require(k >= 2 && l >= 2, || format!("series H needs k, l >= 2, got k={k}, l={l}"))?;
    let kk = int(&factorial((k + l - 1) as u64))
        / int(&(factorial((k - 1) as u64) * factorial((l - 1) as u64)));
    let integrand = &RatPoly::monomial(rat(1), k - 1) * &RatPoly::from_ints(&[1, -1]).pow((l - 1) as u32);
    let s = integrand.integral().scale(&kk);
    let one = RatPoly::one();
    let p = (&s * &(&one - &s)).scale(&rat(4));
    let two_s_minus_1 = &s.scale(&rat(2)) - &one;
    let q = -(&two_s_minus_1 * &two_s_minus_1);
    let mut black = vec![k, l];
    black.extend(repeat(1, k + l - 2));
    let passport = Passport::from_parts(black, repeat(2, k + l - 1))?;
    DZPair::new(p, q, passport, format!("H(k={k},l={l})"))
        .with_component("S", s)
        .certify()
}

/// `u + v√−3`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Eisenstein(BigRat, BigRat);

impl Add for &Eisenstein {
    type Output = Eisenstein;
    fn add(self, o: &Eisenstein) -> Eisenstein {
        Eisenstein(&self.0 + &o.0, &self.1 + &o.1)
    }
}

impl Mul for &Eisenstein {
    type Output = Eisenstein;
    fn mul(self, o: &Eisenstein) -> Eisenstein {
        Eisenstein(
            &self.0 * &o.0 - rat(3) * &self.1 * &o.1,
            &self.0 * &o.1 + &self.1 * &o.0,
        )
    }
}

fn series_i_s(k: usize) -> Result<RatPoly> {
    require(k >= 2, || format!("series I needs k >= 2, got {k}"))?;
    let km1 = k - 1;
    let mut sum = BigRat::zero();
    for i in 0..=km1 {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        sum += binom(&rat(km1 as i64), i) * frac(sign, 2 * i as i64 + 1);
    }
    if sum.is_zero() {
        return Err(DzError::Domain(format!("normalizing sum vanishes for k={k}")));
    }
    let a = (rat(2) * rat_pow(&rat(3), km1 as u32) * sum).recip();
    let integrand = RatPoly::from_ints(&[3, 0, 1]).pow(km1 as u32);
    Ok(&integrand.integral().scale(&a) - &RatPoly::constant(frac(1, 2)))
}

/// `S(√−3)` as `(u, v)` meaning `u + v√−3`.
pub fn series_i_critical_value(k: usize) -> Result<(BigRat, BigRat)> {
    let s = series_i_s(k)?;
    let root = Eisenstein(BigRat::zero(), BigRat::one());
    let mut acc = Eisenstein(BigRat::zero(), BigRat::zero());
    for c in s.coeffs().iter().rev() {
        acc = &(&acc * &root) + &Eisenstein(c.clone(), BigRat::zero());
    }
    Ok((acc.0, acc.1))
}

/// `S` has critical points `±√−3` of order `k−1` with values the primitive
/// cube roots of unity; `P = 1 − S³`.
pub fn series_i(k: usize) -> Result<DZPair> {
    let s = series_i_s(k)?;
    let (u, v) = series_i_critical_value(k)?;
    let w = Eisenstein(u, v);
    let cube = &(&w * &w) * &w;
    if cube != Eisenstein(BigRat::one(), BigRat::zero()) {
        return Err(DzError::Verification(format!(
            "I(k={k}): S(sqrt(-3))^3 = {} + {} sqrt(-3)",
            cube.0, cube.1
        )));
    }
    let s3 = s.pow(3);
    let p = &RatPoly::one() - &s3;
    let q = -s3;
    let mut black = vec![k, k];
    black.extend(repeat(1, 4 * k - 3));
    let passport = Passport::from_parts(black, repeat(3, 2 * k - 1))?;
    DZPair::new(p, q, passport, format!("I(k={k})"))
        .with_component("S", s)
        .certify()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_small() {
        let d = series_h(2, 2).unwrap();
        assert_eq!(d.component("S").unwrap(), &RatPoly::from_ints(&[0, 0, 3, -2]));
        assert_eq!(d.r, RatPoly::one());
        let d = series_h(3, 2).unwrap();
        assert_eq!(d.component("S").unwrap(), &RatPoly::from_ints(&[0, 0, 0, 4, -3]));
    }

    #[test]
    fn h_normalized_at_one() {
        for k in 2..6 {
            for l in 2..6 {
                let d = series_h(k, l).unwrap();
                assert_eq!(d.component("S").unwrap().eval(&rat(1)), rat(1));
            }
        }
    }

    #[test]
    fn i_k2() {
        let s = series_i_s(2).unwrap();
        let want = RatPoly::from_coeffs(vec![frac(-1, 2), frac(3, 4), rat(0), frac(1, 12)]);
        assert_eq!(s, want);
        series_i(2).unwrap();
    }

    #[test]
    fn i_critical_value_is_cube_root_of_unity() {
        for k in 2..6 {
            assert_eq!(series_i_critical_value(k).unwrap(), (frac(-1, 2), frac(1, 2)));
        }
    }
}
