//! Helpers around `BigRational`: parsing, formatting, generalized binomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{DzError, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type BigRat = BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: &BigInt) -> BigRat {
    BigRat::from_integer(n.clone())
}

/// Parses `"7"`, `"-3/4"` or a product of prime powers such as `"-2^38*3^3"`.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(DzError::Parse("empty rational".into()));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_int(n)?;
        let d = parse_int(d)?;
        if d.is_zero() {
            return Err(DzError::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRat::new(n, d));
    }
    if s.contains('^') || s.contains('*') {
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let mut acc = BigInt::one();
        for factor in body.split('*') {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (b, e),
                None => (factor, "1"),
            };
            let base = parse_int(base)?;
            let exp: u32 = exp
                .trim()
                .parse()
                .map_err(|_| DzError::Parse(format!("bad exponent in {s:?}")))?;
            acc *= num_traits::pow(base, exp as usize);
        }
        if neg {
            acc = -acc;
        }
        return Ok(BigRat::from_integer(acc));
    }
    Ok(BigRat::from_integer(parse_int(s)?))
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| DzError::Parse(format!("not an integer: {s:?}")))
}

/// `"num/den"`, or just `"num"` for integers.
pub fn rat_to_string(r: &BigRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Generalized binomial coefficient C(x, k) = x(x-1)...(x-k+1)/k! for rational x.
pub fn binom(x: &BigRat, k: usize) -> BigRat {
    let mut acc = BigRat::one();
    for i in 0..k {
        acc *= x - rat(i as i64);
        acc /= rat(i as i64 + 1);
    }
    acc
}

pub fn rat_pow(x: &BigRat, e: u32) -> BigRat {
    num_traits::pow(x.clone(), e as usize)
}

/// Integer power with possibly negative exponent.
pub fn rat_powi(x: &BigRat, e: i64) -> BigRat {
    if e >= 0 {
        rat_pow(x, e as u32)
    } else {
        rat_pow(&x.recip(), (-e) as u32)
    }
}

pub fn is_integer(r: &BigRat) -> bool {
    r.denom().is_one()
}

pub fn to_i64(r: &BigRat) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    i64::try_from(r.numer()).ok()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Least common multiple of the denominators of a slice.
pub fn common_denom(cs: &[BigRat]) -> BigInt {
    cs.iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

pub fn abs(r: &BigRat) -> BigRat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rat("7").unwrap(), rat(7));
        assert_eq!(parse_rat("-6/8").unwrap(), frac(-3, 4));
        assert_eq!(parse_rat("-2^6*3^2").unwrap(), rat(-576));
        assert_eq!(parse_rat(" 12 ").unwrap(), rat(12));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn formats() {
        assert_eq!(rat_to_string(&frac(-3, 4)), "-3/4");
        assert_eq!(rat_to_string(&rat(0)), "0");
        assert_eq!(rat_to_string(&frac(8, 4)), "2");
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binom(&rat(5), 2), rat(10));
        assert_eq!(binom(&rat(2), 3), rat(0));
        // C(-1, k) = (-1)^k
        assert_eq!(binom(&rat(-1), 3), rat(-1));
        assert_eq!(binom(&frac(1, 2), 2), frac(-1, 8));
        assert_eq!(binom(&frac(7, 3), 0), rat(1));
    }
}
