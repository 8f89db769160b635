//! Truncated power series over the rationals.

use num_traits::{One, Zero};

use super::poly::RatPoly;
use super::rat::{rat, rat_to_string, BigRat};
use crate::error::{DzError, Result};

/// Coefficients of x^0..=x^order; mixed-order arithmetic keeps the smaller order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRat>,
}

impl TruncSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` terms remain.
    pub fn new(mut coeffs: Vec<BigRat>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRat::zero());
        TruncSeries { coeffs }
    }

    pub fn from_poly(p: &RatPoly, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![BigRat::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order.min(self.order()))
    }

    pub fn add(&self, other: &TruncSeries) -> Self {
        let n = self.order().min(other.order());
        Self::new(
            (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
            n,
        )
    }

    pub fn mul(&self, other: &TruncSeries) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![BigRat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out, n)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `f^r` for rational `r`, requiring `f(0) = 1`.
    ///
    /// Uses the recurrence obtained from `f g' = r f' g`:
    /// `n g_n = Σ_{k=1..n} ((r+1)k − n) f_k g_{n−k}`.
    pub fn pow_rat(&self, r: &BigRat) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(DzError::Normalization(rat_to_string(&self.coeffs[0])));
        }
        let n = self.order();
        let r1 = r + BigRat::one();
        let mut g = vec![BigRat::zero(); n + 1];
        g[0] = BigRat::one();
        for m in 1..=n {
            let mut acc = BigRat::zero();
            for k in 1..=m {
                let fk = &self.coeffs[k];
                if fk.is_zero() {
                    continue;
                }
                let w = &r1 * rat(k as i64) - rat(m as i64);
                acc += w * fk * &g[m - k];
            }
            g[m] = acc / rat(m as i64);
        }
        Ok(TruncSeries { coeffs: g })
    }
}

pub fn trunc_pow(f: &TruncSeries, r: &BigRat) -> Result<TruncSeries> {
    f.pow_rat(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::frac;
    use proptest::prelude::*;

    fn s(cs: &[i64], order: usize) -> TruncSeries {
        TruncSeries::new(cs.iter().map(|&c| rat(c)).collect(), order)
    }

    #[test]
    fn geometric() {
        let g = trunc_pow(&s(&[1, -1], 2), &rat(-1)).unwrap();
        assert_eq!(g, s(&[1, 1, 1], 2));
    }

    #[test]
    fn exact_square_root() {
        let g = trunc_pow(&s(&[1, 2, 1], 5), &frac(1, 2)).unwrap();
        assert_eq!(g, s(&[1, 1], 5));
    }

    #[test]
    fn square_root_of_sextic_power() {
        let base = RatPoly::from_ints(&[1, 1]).pow(4) * RatPoly::from_ints(&[1, 0, 10]).pow(7);
        let g = trunc_pow(&TruncSeries::from_poly(&base, 12), &frac(1, 2)).unwrap();
        let want = vec![
            rat(1),
            rat(2),
            rat(36),
            rat(70),
            frac(945, 2),
            rat(875),
            rat(2625),
            rat(4375),
            frac(39375, 8),
            frac(21875, 4),
            rat(0),
            frac(-21875, 4),
            frac(65625, 16),
        ];
        assert_eq!(g.coeffs(), want.as_slice());
    }

    #[test]
    fn normalization_error() {
        assert!(matches!(
            trunc_pow(&s(&[2, 1], 3), &rat(2)),
            Err(DzError::Normalization(_))
        ));
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = s(&[1, 1, 1, 1], 3);
        let b = s(&[1, 1], 1);
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!(a.add(&b), s(&[2, 2], 1));
    }

    proptest! {
        #[test]
        fn power_roundtrip(tail in prop::collection::vec(-4i64..=4, 1..6),
                           num in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
                           den in 1i64..4) {
            let mut cs = vec![1];
            cs.extend(tail);
            let order = cs.len() + 2;
            let f = s(&cs, order);
            let r = frac(num, den);
            let back = trunc_pow(&trunc_pow(&f, &r).unwrap(), &r.recip()).unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn integer_power_matches_product(tail in prop::collection::vec(-4i64..=4, 1..4), e in 0u32..4) {
            let mut cs = vec![1];
            cs.extend(tail);
            let p = RatPoly::from_ints(&cs);
            let order = 8;
            let got = trunc_pow(&TruncSeries::from_poly(&p, order), &rat(e as i64)).unwrap();
            prop_assert_eq!(got, TruncSeries::from_poly(&p.pow(e), order));
        }
    }
}
