//! Double brushes (series E), chains (series B) and series C, all built from
//! Jacobi polynomials with rational parameters.

use super::{coprime, half_linear, repeat, require, DZPair};
use crate::error::{DzError, Result};
use crate::polycore::rat::{frac, rat, rat_powi};
use crate::polycore::{BigRat, RatPoly};
use crate::specfun::{jacobi, jacobi_degree_drops, JacobiParams};
use crate::treecombi::Passport;

fn jac(n: usize, a: &BigRat, b: &BigRat) -> Result<RatPoly> {
    let params = JacobiParams::new(n, a.clone(), b.clone());
    if jacobi_degree_drops(&params) {
        return Err(DzError::Domain(format!(
            "J_{n}({a},{b}) drops below degree {n}"
        )));
    }
    Ok(jacobi(&params))
}

/// Even-length double brush with `r` inner white vertices.
///
/// With `w = s+t`, `a = (lw+t)/w`, `b = (kw+s)/w`:
/// `P = ((x−1)/2)^{lw+t} ((x+1)/2)^{kw+s} J_{r−1}(a,b)^w`,
/// `Q = J_{k+l+r}(−a,−b)^w`.
///
/// The components are `A = 2^{−(a+b)} J_{r−1}(a,b)` and `B = J_{k+l+r}(−a,−b)`,
/// so that `P = (x−1)^{lw+t} (x+1)^{kw+s} A^w` and `Q = B^w`.
pub fn series_e_even(s: usize, t: usize, k: usize, l: usize, r: usize) -> Result<DZPair> {
    coprime("E", s, t)?;
    require(r >= 1, || format!("even series E needs r >= 1, got {r}"))?;
    let w = s + t;
    let (ea, eb) = (l * w + t, k * w + s);
    let a = frac(ea as i64, w as i64);
    let b = frac(eb as i64, w as i64);
    let ja = jac(r - 1, &a, &b)?;
    let jb = jac(k + l + r, &-&a, &-&b)?;
    let p = &(&half_linear(-1).pow(ea as u32) * &half_linear(1).pow(eb as u32)) * &ja.pow(w as u32);
    let q = jb.pow(w as u32);
    let mut black = vec![ea, eb];
    black.extend(repeat(w, r - 1));
    let passport = Passport::from_parts(black, repeat(w, k + l + r))?;
    let ja = ja.scale(&rat_powi(&rat(2), -(k as i64 + l as i64 + 1)));
    DZPair::new(p, q, passport, format!("E_even(s={s},t={t},k={k},l={l},r={r})"))
        .with_component("A", ja)
        .with_component("B", jb)
        .certify()
}

/// Odd-length double brush.
///
/// With `w = s+t`, `a = −(lw+s)/w`, `b = (kw+s)/w`:
/// `P = ((x+1)/2)^{kw+s} J_{l+r}(a,b)^w`,
/// `Q = ((x−1)/2)^{lw+s} J_{k+r}(−a,−b)^w`.
///
/// The components are `A = 2^{−(a+b)} J_{l+r}(a,b)` and `B = J_{k+r}(−a,−b)`:
/// after multiplying both by `2^{lw+s}`, `P = (x+1)^{kw+s} A^w` and
/// `Q = (x−1)^{lw+s} B^w`.
pub fn series_e_odd(s: usize, t: usize, k: usize, l: usize, r: usize) -> Result<DZPair> {
    coprime("E", s, t)?;
    require(k + l + r > 0, || "odd series E needs k + l + r > 0".to_string())?;
    odd(s, t, k, l, r, format!("E_odd(s={s},t={t},k={k},l={l},r={r})"))
}

fn odd(s: usize, t: usize, k: usize, l: usize, r: usize, name: String) -> Result<DZPair> {
    let w = s + t;
    let (ea, eb) = (l * w + s, k * w + s);
    let a = frac(-(ea as i64), w as i64);
    let b = frac(eb as i64, w as i64);
    let ja = jac(l + r, &a, &b)?;
    let jb = jac(k + r, &-&a, &-&b)?;
    let p = &half_linear(1).pow(eb as u32) * &ja.pow(w as u32);
    let q = &half_linear(-1).pow(ea as u32) * &jb.pow(w as u32);
    let mut black = vec![eb];
    black.extend(repeat(w, l + r));
    let mut white = vec![ea];
    white.extend(repeat(w, k + r));
    let passport = Passport::from_parts(black, white)?;
    let ja = ja.scale(&rat_powi(&rat(2), l as i64 - k as i64));
    DZPair::new(p, q, passport, name)
        .with_component("A", ja)
        .with_component("B", jb)
        .certify()
}

/// Diameter-3 trees: the odd brush with `r = 0`, `s → t`, `t → s−t`.
pub fn series_c(s: usize, t: usize, k: usize, l: usize) -> Result<DZPair> {
    require(s > t && t >= 1, || format!("series C needs s > t >= 1, got s={s}, t={t}"))?;
    coprime("C", s, t)?;
    require(k >= 1 && l >= 1, || format!("series C needs k, l >= 1, got k={k}, l={l}"))?;
    odd(t, s - t, k, l, 0, format!("C(s={s},t={t},k={k},l={l})"))
}

/// Chain of odd length: the odd brush with `k = l = 0`.
pub fn series_b1(s: usize, t: usize, r: usize) -> Result<DZPair> {
    coprime("B1", s, t)?;
    require(r >= 1, || format!("series B1 needs r >= 1, got {r}"))?;
    odd(s, t, 0, 0, r, format!("B1(s={s},t={t},r={r})"))
}

/// Chain of even length: the even brush with `k = l = 0`.
pub fn series_b2(s: usize, t: usize, r: usize) -> Result<DZPair> {
    series_e_even(s, t, 0, 0, r).map(|mut d| {
        d.provenance = format!("B2(s={s},t={t},r={r})");
        d
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_examples() {
        let d = series_e_even(1, 1, 0, 0, 1).unwrap();
        assert_eq!(d.degree(), 2);
        series_e_even(1, 2, 1, 2, 1).unwrap();
        series_e_even(2, 1, 1, 3, 1).unwrap();
    }

    #[test]
    fn even_required_degree() {
        let (s, t, k, l, r) = (1, 2, 2, 1, 3);
        let d = series_e_even(s, t, k, l, r).unwrap();
        let m = (k + l + r) * (s + t - 1) - r;
        assert_eq!(d.r.deg_i(), m as i64);
    }

    #[test]
    fn odd_examples() {
        series_e_odd(1, 1, 0, 0, 1).unwrap();
        series_e_odd(1, 1, 1, 1, 1).unwrap();
        series_e_odd(2, 1, 0, 0, 2).unwrap();
        let (s, t, k, l, r) = (2, 3, 1, 2, 1);
        let d = series_e_odd(s, t, k, l, r).unwrap();
        let m = (k + l + r) * (s + t - 1) + s - r - 1;
        assert_eq!(d.r.deg_i(), m as i64);
        assert!(series_e_odd(1, 1, 0, 0, 0).is_err());
    }

    #[test]
    fn c_examples() {
        for (s, t, k, l) in [(2, 1, 1, 1), (3, 1, 2, 1), (3, 2, 1, 2)] {
            let d = series_c(s, t, k, l).unwrap();
            assert_eq!(d.passport.weight(), (k + l) * s + t);
        }
        assert!(series_c(1, 1, 1, 1).is_err());
        assert!(series_c(4, 2, 1, 1).is_err());
    }

    #[test]
    fn chains() {
        let b = series_b1(1, 2, 2).unwrap();
        assert!(b.provenance.starts_with("B1"));
        let b = series_b2(2, 1, 2).unwrap();
        assert_eq!(b.passport.weight(), 3 * 2);
    }

    #[test]
    fn jacobi_factor_is_stored() {
        let d = series_e_even(1, 1, 0, 0, 2).unwrap();
        // J_1(1/2, 1/2) / 2, and J_n(a, b, 1) = C(n+a, n)
        let a = d.component("A").unwrap();
        assert_eq!(a.degree(), Some(1));
        assert_eq!(a.eval(&rat(1)), frac(3, 4));
    }
}
