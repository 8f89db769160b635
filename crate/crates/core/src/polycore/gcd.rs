//! GCD and squarefree decomposition.
//!
//! Both work on primitive integer images of the rational inputs; the
//! remainder sequence is the primitive PRS, so coefficients stay small.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::RatPoly;
use crate::error::{DzError, Result};

type ZPoly = Vec<BigInt>;

fn trim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
fn primitive(v: ZPoly) -> ZPoly {
    let v = trim(v);
    if v.is_empty() {
        return v;
    }
    let mut g = content(&v);
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    if g.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

fn to_primitive(p: &RatPoly) -> ZPoly {
    primitive(p.to_integer_parts().0)
}

/// Pseudo-remainder of `a` by `b` (both nonzero), up to a nonzero constant.
fn prem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: ZPoly = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        r = trim(r);
        // keep intermediate growth in check
        if r.len() > db {
            let g = content(&r);
            if !g.is_one() && !g.is_zero() {
                r = r.into_iter().map(|c| c / &g).collect();
            }
        }
    }
    r
}

fn zgcd(a: ZPoly, b: ZPoly) -> ZPoly {
    let (mut a, mut b) = (primitive(a), primitive(b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(prem(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// Monic gcd over the rationals.
pub fn poly_gcd(p: &RatPoly, q: &RatPoly) -> Result<RatPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(DzError::Domain("gcd of two zero polynomials".into()));
    }
    let g = zgcd(to_primitive(p), to_primitive(q));
    Ok(RatPoly::from_bigints(&g).monic())
}

/// Yun's squarefree decomposition: `[(multiplicity, factor)]`, factors
/// primitive with positive leading coefficient; constant factors omitted.
pub fn squarefree_decomposition(p: &RatPoly) -> Result<Vec<(usize, RatPoly)>> {
    if p.is_zero() {
        return Err(DzError::Domain("squarefree profile of zero".into()));
    }
    let f = to_primitive(p);
    let mut out = Vec::new();
    if f.len() <= 1 {
        return Ok(out);
    }
    let fp = RatPoly::from_bigints(&f);
    let df = fp.derivative();
    let a0 = RatPoly::from_bigints(&zgcd(f.clone(), to_primitive(&df)));
    let mut b = fp.div_exact(&a0)?;
    let c = df.div_exact(&a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = if d.is_zero() {
            b.clone()
        } else {
            RatPoly::from_bigints(&zgcd(to_primitive(&b), to_primitive(&d)))
        };
        if !a.is_constant() {
            out.push((i, RatPoly::from_bigints(&to_primitive(&a))));
        }
        let nb = b.div_exact(&a)?;
        let c = if d.is_zero() { RatPoly::zero() } else { d.div_exact(&a)? };
        d = &c - &nb.derivative();
        b = nb;
        i += 1;
    }
    Ok(out)
}

/// For each multiplicity m, the number of distinct roots of exact
/// multiplicity m (the degree of the corresponding squarefree factor).
pub fn squarefree_profile(p: &RatPoly) -> Result<BTreeMap<usize, usize>> {
    Ok(squarefree_decomposition(p)?
        .into_iter()
        .map(|(m, f)| (m, f.degree().unwrap_or(0)))
        .collect())
}

/// Expands a profile into a partition, parts in decreasing order.
pub fn profile_to_partition(profile: &BTreeMap<usize, usize>) -> Vec<usize> {
    let mut parts = Vec::new();
    for (&m, &c) in profile.iter().rev() {
        parts.extend(std::iter::repeat_n(m, c));
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::rat;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> RatPoly {
        RatPoly::from_ints(cs)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(poly_gcd(&p(&[0, 0, 1]), &p(&[0, 0, 2])).unwrap(), p(&[0, 0, 1]));
        assert!(poly_gcd(&RatPoly::zero(), &RatPoly::zero()).is_err());
        assert_eq!(poly_gcd(&RatPoly::zero(), &p(&[2, 4])).unwrap(), p(&[1, 2]).monic());
    }

    #[test]
    fn profile_examples() {
        let xm1 = p(&[-1, 1]);
        let xp2 = p(&[2, 1]);
        let f = &xm1.pow(3) * &xp2;
        assert_eq!(squarefree_profile(&f).unwrap(), BTreeMap::from([(1, 1), (3, 1)]));
        let l = RatPoly::from_ints_desc(&[1, -16, 160, -384]).pow(3);
        assert_eq!(squarefree_profile(&l).unwrap(), BTreeMap::from([(3, 3)]));
        assert_eq!(squarefree_profile(&p(&[0, 0, 0, 0, 0, 0, 1])).unwrap(), BTreeMap::from([(6, 1)]));
        assert!(squarefree_profile(&RatPoly::zero()).is_err());
        assert!(squarefree_profile(&p(&[5])).unwrap().is_empty());
    }

    #[test]
    fn partition_from_profile() {
        let m = BTreeMap::from([(1, 2), (3, 1)]);
        assert_eq!(profile_to_partition(&m), vec![3, 1, 1]);
    }

    fn small_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec(-6i64..=6, 1..5).prop_map(|v| RatPoly::from_ints(&v))
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!c.is_zero());
            let pa = &a * &c;
            let pb = &b * &c;
            prop_assume!(!(pa.is_zero() && pb.is_zero()));
            let g = poly_gcd(&pa, &pb).unwrap();
            prop_assert!(pa.div_rem(&g).unwrap().1.is_zero());
            prop_assert!(pb.div_rem(&g).unwrap().1.is_zero());
            // c divides the gcd
            prop_assert!(g.div_rem(&c).unwrap().1.is_zero());
        }

        #[test]
        fn decomposition_reassembles(a in small_poly(), b in small_poly(), e in 1u32..4) {
            let f = &a.pow(e) * &b;
            prop_assume!(!f.is_constant());
            let dec = squarefree_decomposition(&f).unwrap();
            let mut prod = RatPoly::one();
            for (m, g) in &dec {
                prod = &prod * &g.pow(*m as u32);
            }
            let ratio = f.lead() / prod.lead();
            prop_assert_eq!(prod.scale(&ratio), f.clone());
            let total: usize = squarefree_profile(&f).unwrap().iter().map(|(m, c)| m * c).sum();
            prop_assert_eq!(total, f.degree().unwrap());
        }
    }

    #[test]
    fn rational_inputs() {
        let f = RatPoly::from_coeffs(vec![rat(1) / rat(4), rat(1), rat(1)]);
        assert_eq!(squarefree_profile(&f).unwrap(), BTreeMap::from([(2, 1)]));
    }
}
