//! The self-dual family and the orbits that split over the rationals.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::{repeat, require, DZPair};
use crate::error::{DzError, Result};
use crate::polycore::rat::{rat, rat_pow, rat_to_string};
use crate::polycore::{BigRat, RatPoly};
use crate::treecombi::Passport;
use crate::verify::taylor_at;

/// `Q = (x+1)^{2p−1}(x−1)^{2q−1}`; `P` keeps the terms of `Q` of degree at
/// least `p+q`, so `P = x^{p+q} A` and `R = P − Q` is `A` reversed.
pub fn self_dual_series(p: usize, q: usize) -> Result<DZPair> {
    require(1 <= p && p < q, || format!("self-dual series needs 1 <= p < q, got p={p}, q={q}"))?;
    let qq = &RatPoly::from_ints(&[1, 1]).pow((2 * p - 1) as u32)
        * &RatPoly::from_ints(&[-1, 1]).pow((2 * q - 1) as u32);
    let cut = p + q;
    let a = RatPoly::from_coeffs(qq.coeffs()[cut..].to_vec());
    let pp = a.shift_up(cut);
    let mut black = vec![cut];
    black.extend(repeat(1, cut - 2));
    let passport = Passport::from_parts(black, vec![2 * p - 1, 2 * q - 1])?;
    DZPair::new(pp, qq, passport, format!("SelfDual(p={p},q={q})"))
        .with_component("A", a)
        .certify()
}

/// Which tree of the split orbit `(k², 4 1^{2k−4})` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitVariant {
    /// `f₁ = (−1)^{k+1} k^{−k} (x²−k)^k / (x²−1)`.
    Symmetric,
    /// The closed form for the asymmetric tree exactly as printed; it fails
    /// the derivative conditions and yields [`DzError::Erratum`].
    Asymmetric,
    /// The asymmetric tree with numerator constant `−6k²(k−2)(2k−1)²` and
    /// normalizing constant `(−1)^k / (6^{k−1} k^{2k−1} (k−2)^{k−2} (2k−1)^{2k−1})`.
    AsymmetricAmended,
}

impl fmt::Display for SplitVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitVariant::Symmetric => "symmetric",
            SplitVariant::Asymmetric => "asymmetric",
            SplitVariant::AsymmetricAmended => "asymmetric-amended",
        })
    }
}

impl FromStr for SplitVariant {
    type Err = DzError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symmetric" => Ok(SplitVariant::Symmetric),
            "asymmetric" => Ok(SplitVariant::Asymmetric),
            "asymmetric-amended" | "amended" => Ok(SplitVariant::AsymmetricAmended),
            _ => Err(DzError::Parse(format!("unknown split variant {s:?}"))),
        }
    }
}

/// Numerator `c·N^k` and denominator of the Belyi function.
fn belyi_parts(k: usize, variant: SplitVariant) -> (RatPoly, RatPoly) {
    let kk = k as i64;
    let e = k as u32;
    let sign = |negative: bool| if negative { rat(-1) } else { rat(1) };
    match variant {
        SplitVariant::Symmetric => {
            let c = sign(k.is_multiple_of(2)) / rat_pow(&rat(kk), e);
            let num = RatPoly::from_ints(&[-kk, 0, 1]).pow(e).scale(&c);
            (num, RatPoly::from_ints(&[-1, 0, 1]))
        }
        SplitVariant::Asymmetric | SplitVariant::AsymmetricAmended => {
            let (m2, m1) = (kk - 2, 2 * kk - 1);
            let den = RatPoly::from_ints(&[6 * kk * m2 * m2 * m1, 6 * kk * m2, 1]);
            let (constant, norm) = if variant == SplitVariant::Asymmetric {
                (
                    -6 * kk * m2 * m1 * m1,
                    rat_pow(&rat(6 * kk), e - 1) * rat_pow(&rat(m2), e - 2) * rat_pow(&rat(m1), 2 * e - 1),
                )
            } else {
                (
                    -6 * kk * kk * m2 * m1 * m1,
                    rat_pow(&rat(6), e - 1)
                        * rat_pow(&rat(kk), 2 * e - 1)
                        * rat_pow(&rat(m2), e - 2)
                        * rat_pow(&rat(m1), 2 * e - 1),
                )
            };
            let c = sign(k % 2 == 1) / norm;
            let num = RatPoly::from_ints(&[constant, -6 * kk * m1, 1]).pow(e).scale(&c);
            (num, den)
        }
    }
}

/// The split-orbit pair from its Belyi function `f = P/R`; the white vertex
/// of degree 4 sits at 0, so `f(0) = 1` and `f′, f″, f‴` vanish there.
pub fn split_orbit_belyi(k: usize, variant: SplitVariant) -> Result<DZPair> {
    require(k >= 3, || format!("split-orbit series needs k >= 3, got {k}"))?;
    let (p, r) = belyi_parts(k, variant);
    let taylor = taylor_at(&p, &r, &BigRat::zero(), 3)?;
    let expect = [rat(1), rat(0), rat(0), rat(0)];
    if taylor != expect {
        let shown: Vec<String> = taylor.iter().map(rat_to_string).collect();
        return Err(DzError::Erratum(format!(
            "split orbit k={k} ({variant}): Taylor coefficients of f at 0 are [{}], expected [1, 0, 0, 0]",
            shown.join(", ")
        )));
    }
    let q = &p - &r;
    let mut white = vec![4];
    white.extend(repeat(1, 2 * k - 4));
    let passport = Passport::from_parts(vec![k, k], white)?;
    DZPair::new(p, q, passport, format!("SplitOrbit(k={k},{variant})"))
        .with_component("denominator", r)
        .certify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::check_belyi_critical;

    #[test]
    fn self_dual_example() {
        let d = self_dual_series(2, 5).unwrap();
        assert_eq!(d.component("A").unwrap(), &RatPoly::from_ints_desc(&[1, -6, 12, -2, -27, 36]));
        assert_eq!(d.r, RatPoly::from_ints_desc(&[36, -27, -2, 12, -6, 1]));
    }

    #[test]
    fn self_dual_small_and_antipalindromic() {
        let d = self_dual_series(1, 2).unwrap();
        assert_eq!(d.q, &RatPoly::from_ints(&[1, 1]) * &RatPoly::from_ints(&[-1, 1]).pow(3));
        for q in 2..7 {
            for p in 1..q {
                let d = self_dual_series(p, q).unwrap();
                assert!(d.q.coeff(p + q - 1).is_zero());
                let a = d.component("A").unwrap();
                assert_eq!(a.reciprocal(p + q - 2).unwrap(), d.r);
            }
        }
        assert!(self_dual_series(3, 3).is_err());
    }

    #[test]
    fn symmetric_value_at_zero() {
        let (p, r) = belyi_parts(3, SplitVariant::Symmetric);
        assert_eq!(&p.eval(&rat(0)) / &r.eval(&rat(0)), rat(1));
        let (p, r) = belyi_parts(4, SplitVariant::Symmetric);
        assert!(check_belyi_critical(&p, &r, &rat(0), 3).unwrap());
    }

    #[test]
    fn printed_asymmetric_denominator() {
        let (_, r) = belyi_parts(3, SplitVariant::Asymmetric);
        assert_eq!(r.coeff(0), rat(90));
    }

    #[test]
    fn printed_asymmetric_is_erratum() {
        for k in 3..9 {
            let (p, r) = belyi_parts(k, SplitVariant::Asymmetric);
            assert_eq!(&p.eval(&rat(0)) / &r.eval(&rat(0)), rat(1));
            match split_orbit_belyi(k, SplitVariant::Asymmetric) {
                Err(DzError::Erratum(_)) => {}
                other => panic!("k={k}: expected erratum, got {other:?}"),
            }
        }
    }

    #[test]
    fn both_trees_certify() {
        for k in 3..9 {
            split_orbit_belyi(k, SplitVariant::Symmetric).unwrap();
            split_orbit_belyi(k, SplitVariant::AsymmetricAmended).unwrap();
        }
    }

    #[test]
    fn variant_names() {
        for v in [SplitVariant::Symmetric, SplitVariant::Asymmetric, SplitVariant::AsymmetricAmended] {
            assert_eq!(v.to_string().parse::<SplitVariant>().unwrap(), v);
        }
        assert!("other".parse::<SplitVariant>().is_err());
    }
}
