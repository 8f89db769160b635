//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{common_denom, rat, rat_to_string, BigRat};
use crate::error::{DzError, Result};

/// Coefficients ascending by degree; the last stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![BigRat::zero(), BigRat::one()])
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigRat, d: usize) -> Self {
        let mut v = vec![BigRat::zero(); d + 1];
        v[d] = c;
        Self::from_coeffs(v)
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    /// Builds from coefficients listed from the leading term down.
    pub fn from_ints_desc(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().rev().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(cs: &[BigInt]) -> Self {
        Self::from_coeffs(cs.iter().map(|c| BigRat::from_integer(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRat> {
        self.coeffs
    }

    /// `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with -1 standing for the zero polynomial.
    pub fn deg_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn lead(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lead().recip())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigRat::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        RatPoly { coeffs: v }
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigRat::zero()];
        v.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / rat(i as i64 + 1)),
        );
        Self::from_coeffs(v)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self ∘ g`, by Horner's scheme.
    pub fn compose(&self, g: &RatPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    /// Substitutes `x^d` for `x`.
    pub fn subs_power(&self, d: usize) -> Self {
        assert!(d >= 1, "substitution power must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigRat::zero(); (self.coeffs.len() - 1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * d] = c.clone();
        }
        Self::from_coeffs(v)
    }

    /// `x^n · P(1/x)`.
    pub fn reciprocal(&self, n: usize) -> Result<Self> {
        let deg = match self.degree() {
            None => return Ok(Self::zero()),
            Some(d) => d,
        };
        if n < deg {
            return Err(DzError::InvalidDegree {
                declared: n,
                actual: deg,
            });
        }
        let mut v = vec![BigRat::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[n - i] = c.clone();
        }
        Ok(Self::from_coeffs(v))
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dd = d
            .degree()
            .ok_or_else(|| DzError::Domain("division by the zero polynomial".into()))?;
        let mut r = self.coeffs.clone();
        let lead_inv = d.lead().recip();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![BigRat::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, d: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(DzError::Domain("division is not exact".into()));
        }
        Ok(q)
    }

    /// Common denominator `den` and integer numerators with `self = nums / den`.
    pub fn to_integer_parts(&self) -> (Vec<BigInt>, BigInt) {
        let den = common_denom(&self.coeffs);
        let nums = self
            .coeffs
            .iter()
            .map(|c| (c * BigRat::from_integer(den.clone())).to_integer())
            .collect();
        (nums, den)
    }

    /// Coefficients as ascending `"num/den"` strings.
    pub fn to_strings(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().map(rat_to_string).collect()
    }

    /// Number of coefficients that differ from `other` (zero padded).
    pub fn hamming(&self, other: &RatPoly) -> usize {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).filter(|&i| self.coeff(i) != other.coeff(i)).count()
    }
}

fn add_vecs(a: &[BigRat], b: &[BigRat], negate_b: bool) -> Vec<BigRat> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRat::zero);
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

fn mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::from_coeffs(add_vecs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::from_coeffs(add_vecs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        // Multiply over the integers and divide once: far fewer gcd calls.
        let (a, da) = self.to_integer_parts();
        let (b, db) = rhs.to_integer_parts();
        let den = BigRat::from_integer(da * db);
        let prod = mul_int(&a, &b);
        RatPoly::from_coeffs(
            prod.into_iter()
                .map(|c| BigRat::from_integer(c) / &den)
                .collect(),
        )
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: &RatPoly) -> RatPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatPoly> for &RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

pub fn poly_add(a: &RatPoly, b: &RatPoly) -> RatPoly {
    a + b
}

pub fn poly_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    a * b
}

pub fn poly_pow(a: &RatPoly, e: u32) -> RatPoly {
    a.pow(e)
}

pub fn poly_compose(f: &RatPoly, g: &RatPoly) -> RatPoly {
    f.compose(g)
}

pub fn poly_derivative(f: &RatPoly) -> RatPoly {
    f.derivative()
}

pub fn reciprocal(p: &RatPoly, n: usize) -> Result<RatPoly> {
    p.reciprocal(n)
}

impl fmt::Display for RatPoly {
    /// Descending human form, e.g. `x^2 - 5*x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let body = rat_to_string(&a);
            match i {
                0 => write!(f, "{body}")?,
                _ => {
                    if !a.is_one() {
                        if a.denom().is_one() {
                            write!(f, "{body}*")?;
                        } else {
                            write!(f, "({body})*")?;
                        }
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}
