//! Trees of diameter 4: series F and G.

use num_traits::{One, Zero};

use super::{repeat, require, DZPair};
use crate::error::{DzError, Result};
use crate::polycore::rat::{rat, rat_pow};
use crate::polycore::{BigRat, RatPoly};
use crate::treecombi::Passport;

/// Monic `A` of degree `k−1` from `a_i = m(i+1)/(m·i + shift)·a_{i+1}`.
fn backward(k: usize, m: usize, shift: i64) -> Result<RatPoly> {
    let mut a = vec![BigRat::zero(); k];
    a[k - 1] = BigRat::one();
    for i in (0..k - 1).rev() {
        let den = rat(m as i64 * i as i64 + shift);
        if den.is_zero() {
            return Err(DzError::Domain(format!("recurrence denominator vanishes at i={i}")));
        }
        a[i] = rat((m * (i + 1)) as i64) / den * &a[i + 1];
    }
    Ok(RatPoly::from_coeffs(a))
}

/// `P = (x−1)^l A^m`, `Q = P − (−1)^l a₀^m`; `Q` has a root of order `k` at 0.
pub fn series_f(k: usize, l: usize, m: usize) -> Result<DZPair> {
    require(k >= 2 && l >= 1 && m >= 2, || {
        format!("series F needs k >= 2, l >= 1, m >= 2, got k={k}, l={l}, m={m}")
    })?;
    let a = backward(k, m, l as i64)?;
    let p = &RatPoly::from_ints(&[-1, 1]).pow(l as u32) * &a.pow(m as u32);
    let sign = if l.is_multiple_of(2) { rat(1) } else { rat(-1) };
    let c = sign * rat_pow(&a.coeff(0), m as u32);
    let q = &p - &RatPoly::constant(c);
    let n = l + m * (k - 1);
    let mut black = vec![l];
    black.extend(repeat(m, k - 1));
    let mut white = vec![k];
    white.extend(repeat(1, n - k));
    let passport = Passport::from_parts(black, white)?;
    DZPair::new(p, q, passport, format!("F(k={k},l={l},m={m})"))
        .with_component("A", a)
        .certify()
}

/// The constant of `R = c(x−1)` in series G and how it compares with the
/// two candidate closed forms `−a₀^m` and `−a₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GConstant {
    pub c: BigRat,
    pub a0: BigRat,
    pub matches_power: bool,
    pub matches_linear: bool,
}

fn g_parts(k: usize, m: usize) -> Result<(RatPoly, RatPoly, GConstant)> {
    require(k >= 3 && m >= 2, || format!("series G needs k >= 3, m >= 2, got k={k}, m={m}"))?;
    let a = backward(k, m, -1)?;
    let p = a.pow(m as u32);
    // x^k | P − c(x−1) fixes c from the constant term
    let c = -p.coeff(0);
    let r = RatPoly::from_coeffs(vec![-&c, c.clone()]);
    let q = &p - &r;
    if q.low_degree().is_none_or(|d| d < k) {
        return Err(DzError::Verification(format!(
            "G(k={k},m={m}): x^{k} does not divide P - c(x-1)"
        )));
    }
    let a0 = a.coeff(0);
    let info = GConstant {
        matches_power: c == -rat_pow(&a0, m as u32),
        matches_linear: c == -&a0,
        c,
        a0,
    };
    Ok((a, p, info))
}

/// Which closed form the constant of series G agrees with.
pub fn series_g_constant(k: usize, m: usize) -> Result<GConstant> {
    g_parts(k, m).map(|(_, _, info)| info)
}

/// `P = A^m` and `R = c(x−1)`, with `c` forced by `x^k | Q`.
pub fn series_g(k: usize, m: usize) -> Result<DZPair> {
    let (a, p, info) = g_parts(k, m)?;
    let r = RatPoly::from_coeffs(vec![-&info.c, info.c.clone()]);
    let q = &p - &r;
    let n = m * (k - 1);
    let mut white = vec![k];
    white.extend(repeat(1, n - k));
    let passport = Passport::from_parts(repeat(m, k - 1), white)?;
    DZPair::new(p, q, passport, format!("G(k={k},m={m})"))
        .with_component("A", a)
        .certify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::frac;

    #[test]
    fn g_small() {
        let d = series_g(3, 2).unwrap();
        assert_eq!(d.component("A").unwrap(), &RatPoly::from_ints(&[-8, 4, 1]));
        let d = series_g(3, 3).unwrap();
        assert_eq!(d.component("A").unwrap(), &RatPoly::from_ints(&[-9, 3, 1]));
    }

    #[test]
    fn g_coefficients_for_k6() {
        for m in 2..5i64 {
            let d = series_g(6, m as usize).unwrap();
            let a = d.component("A").unwrap();
            assert_eq!(a.coeff(4), frac(5 * m, 4 * m - 1));
            let a0 = frac(5 * m * 4 * m * 3 * m * 2 * m * m, -((4 * m - 1) * (3 * m - 1) * (2 * m - 1) * (m - 1)));
            assert_eq!(a.coeff(0), a0);
        }
    }

    #[test]
    fn g_constant_is_power_form() {
        for k in 3..7 {
            for m in 2..5 {
                let info = series_g_constant(k, m).unwrap();
                assert!(info.matches_power);
                assert!(!info.matches_linear);
            }
        }
    }

    #[test]
    fn f_small() {
        let d = series_f(2, 1, 2).unwrap();
        assert_eq!(d.component("A").unwrap(), &RatPoly::from_ints(&[2, 1]));
        assert_eq!(d.r, RatPoly::constant(rat(-4)));
        let d = series_f(2, 2, 3).unwrap();
        assert_eq!(d.component("A").unwrap(), &RatPoly::from_coeffs(vec![frac(3, 2), rat(1)]));
    }

    #[test]
    fn f_coefficients_for_k6() {
        for (l, m) in [(1i64, 2i64), (2, 3), (3, 4)] {
            let d = series_f(6, l as usize, m as usize).unwrap();
            assert_eq!(d.component("A").unwrap().coeff(4), frac(5 * m, l + 4 * m));
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(series_g(2, 2).is_err());
        assert!(series_f(1, 1, 2).is_err());
        assert!(series_f(2, 0, 2).is_err());
    }
}
