//! Integer pairs with small `|a³ − b²|` from the base case of series D.
//!
//! Substituting `x = ±2z` into `A³ − B²C = 1728x − 8640` and halving each
//! quadratic gives `a(z)³ − b(z)²c(z) = ±432z − 1080`. Making `c(z)` a
//! square `u²` reduces to the Pell equation `u² − 2v² = 2` with `v = z + h`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{DzError, Result};
use crate::polycore::rat::{frac, rat};
use crate::polycore::{BigRat, RatPoly};
use crate::seriesgen::series_d;

/// A solution of `u² − 2v² = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellSolution {
    pub u: BigInt,
    pub v: BigInt,
}

impl PellSolution {
    pub fn holds(&self) -> bool {
        &self.u * &self.u - BigInt::from(2) * &self.v * &self.v == BigInt::from(2)
    }
}

/// `(2, 1)`, then `(u, v) → (3u + 4v, 2u + 3v)` forever.
pub fn pell_iter() -> impl Iterator<Item = PellSolution> {
    std::iter::successors(Some(PellSolution { u: BigInt::from(2), v: BigInt::one() }), |s| {
        Some(PellSolution {
            u: BigInt::from(3) * &s.u + BigInt::from(4) * &s.v,
            v: BigInt::from(2) * &s.u + BigInt::from(3) * &s.v,
        })
    })
}

pub fn pell_solutions(count: usize) -> Vec<PellSolution> {
    pell_iter().take(count).collect()
}

/// `a(z)³ − b(z)²·c(z) = remainder(z)`, with `c(z) = 2(z + shift)² + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallIdentity {
    pub a: RatPoly,
    pub b: RatPoly,
    pub c: RatPoly,
    pub remainder: RatPoly,
    /// `+1` for `x = 2z`, `−1` for `x = −2z`.
    pub sign: i64,
    pub shift: BigInt,
}

/// Rederives the identity from `series_d(1, 1)` and keeps the substitution
/// whose remainder is `432z − 1080`.
pub fn hall_identity() -> Result<HallIdentity> {
    let d = series_d(1, 1)?;
    let part = |n: &str| {
        d.component(n)
            .cloned()
            .ok_or_else(|| DzError::Verification(format!("series D lacks component {n}")))
    };
    let (a, b, c) = (part("A")?, part("B")?, part("C")?);
    let target = RatPoly::from_ints(&[-1080, 432]);
    for sign in [1i64, -1] {
        let sub = RatPoly::from_coeffs(vec![rat(0), rat(2 * sign)]);
        let half = |f: &RatPoly| f.compose(&sub).scale(&frac(1, 2));
        let (az, bz, cz) = (half(&a), half(&b), half(&c));
        let remainder = &az.pow(3) - &(&bz.pow(2) * &cz);
        if remainder != target {
            log::debug!("x = {}z gives remainder {remainder}", 2 * sign);
            continue;
        }
        let shift = &cz.coeff(1) / &(rat(2) * cz.coeff(2));
        let square = RatPoly::from_coeffs(vec![shift.clone(), rat(1)]).pow(2).scale(&rat(2));
        if cz.coeff(2) != rat(2) || &cz - &square != RatPoly::constant(rat(2)) || !shift.is_integer() {
            return Err(DzError::Verification(format!("c(z) = {cz} is not 2(z+h)^2 + 2")));
        }
        return Ok(HallIdentity {
            a: az,
            b: bz,
            c: cz,
            remainder,
            sign,
            shift: shift.to_integer(),
        });
    }
    Err(DzError::Verification("no substitution x = ±2z gives 432z - 1080".into()))
}

/// `gap = a³ − b²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallPair {
    pub a: BigInt,
    pub b: BigInt,
    pub gap: BigInt,
    pub z: BigInt,
}

impl HallPair {
    /// `gap² ≤ 2·216²·a`, i.e. `|gap| ≤ 216√2·√a`.
    pub fn within_bound(&self) -> bool {
        &self.gap * &self.gap <= BigInt::from(2 * 216 * 216) * &self.a
    }

    /// `gap = 432z − 1080` and `gap = a³ − b²`.
    pub fn identity_holds(&self) -> bool {
        let cube = &self.a * &self.a * &self.a;
        self.gap == cube - &self.b * &self.b && self.gap == BigInt::from(432) * &self.z - 1080
    }

    pub fn to_json(&self) -> Value {
        json!({ "a": self.a.to_string(), "b": self.b.to_string(), "gap": self.gap.to_string() })
    }
}

fn eval_int(f: &RatPoly, z: &BigInt) -> Result<BigInt> {
    let v = f.eval(&BigRat::from_integer(z.clone()));
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(DzError::Verification(format!("{f} is not integral at {z}")))
    }
}

/// The first `count` pairs with `a > 0`, in order of the Pell solutions.
pub fn hall_pairs(count: usize) -> Result<Vec<HallPair>> {
    let id = hall_identity()?;
    let mut out = Vec::with_capacity(count);
    for PellSolution { u, v } in pell_iter() {
        if out.len() == count {
            break;
        }
        let z = &v - &id.shift;
        let a = eval_int(&id.a, &z)?;
        if !a.is_positive() {
            continue;
        }
        let b = (eval_int(&id.b, &z)? * &u).abs();
        let gap = &a * &a * &a - &b * &b;
        let pair = HallPair { a, b, gap, z };
        if pair.b.is_zero() || !pair.identity_holds() || !pair.within_bound() {
            return Err(DzError::Verification(format!("pair from u={u}, v={v} fails its checks")));
        }
        out.push(pair);
    }
    Ok(out)
}

/// Direct search over `2 ≤ b ≤ limit`: `a = ⌈b^(2/3)⌉` and the pairs with
/// `0 < a³ − b²` and `(a³ − b²)² ≤ 2·216²·a`.
pub fn brute_force_pairs(limit: u64) -> Vec<(u64, u64, i128)> {
    let mut out = Vec::new();
    for b in 2..=limit {
        let b2 = (b as i128) * (b as i128);
        let a = integer_cbrt_ceil(b2);
        let gap = (a as i128).pow(3) - b2;
        if gap > 0 && gap * gap <= 2 * 216 * 216 * a as i128 {
            out.push((a, b, gap));
        }
    }
    out
}

fn integer_cbrt_ceil(n: i128) -> u64 {
    let mut a = (n as f64).cbrt() as u64;
    while (a as i128).pow(3) < n {
        a += 1;
    }
    while a > 0 && ((a - 1) as i128).pow(3) >= n {
        a -= 1;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pell_by_hand() {
        let s = pell_solutions(4);
        let pairs: Vec<(i64, i64)> = vec![(2, 1), (10, 7), (58, 41), (338, 239)];
        for (sol, (u, v)) in s.iter().zip(pairs) {
            assert_eq!((sol.u.clone(), sol.v.clone()), (BigInt::from(u), BigInt::from(v)));
        }
        assert!(pell_solutions(40).iter().all(PellSolution::holds));
    }

    #[test]
    fn identity_chooses_positive_substitution() {
        let id = hall_identity().unwrap();
        assert_eq!(id.sign, 1);
        assert_eq!(id.a, RatPoly::from_ints(&[-10, 0, 2]));
        assert_eq!(id.b, RatPoly::from_ints(&[2, -6, 2]));
        assert_eq!(id.c, RatPoly::from_ints(&[20, 12, 2]));
        assert_eq!(id.shift, BigInt::from(3));
        let printed = RatPoly::from_ints(&[20, -12, 2]);
        assert_ne!(&id.a.pow(3) - &(&id.b.pow(2) * &printed), id.remainder);
    }

    #[test]
    fn first_pairs() {
        let p = hall_pairs(5).unwrap();
        assert_eq!((p[0].a.clone(), p[0].b.clone(), p[0].gap.clone()), (22.into(), 100.into(), 648.into()));
        assert_eq!((p[1].a.clone(), p[1].b.clone(), p[1].gap.clone()), (2878.into(), 154396.into(), 15336.into()));
        assert_eq!(p[0].to_json(), json!({"a": "22", "b": "100", "gap": "648"}));
        assert!(p.iter().all(|h| h.within_bound() && h.identity_holds()));
        assert!(p.windows(2).all(|w| w[0].a < w[1].a));
    }

    #[test]
    fn brute_force_contains_first_pair() {
        let found = brute_force_pairs(200);
        assert!(found.contains(&(22, 100, 648)));
    }
}
