//! Independent certification of DZ-pairs and of the side identities.
//!
//! Nothing here factors over the rationals: coprimality comes from a gcd,
//! passports from squarefree multiplicity profiles.

use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{DzError, Result};
use crate::polycore::rat::rat_to_string;
use crate::polycore::{poly_gcd, profile_to_partition, squarefree_profile, BigRat, RatPoly, TruncSeries};
use crate::seriesgen::DZPair;
use crate::treecombi::{Partition, Passport};

/// Outcome of [`check_dz`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DZReport {
    pub coprime: bool,
    pub alpha_observed: Partition,
    pub beta_observed: Partition,
    /// Whether the observed profiles equal the expected passport, if one was given.
    pub passport_match: Option<bool>,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// −1 when P = Q.
    #[serde(rename = "degR_observed")]
    pub deg_r_observed: i64,
    #[serde(rename = "degR_required")]
    pub deg_r_required: i64,
    pub minimal: bool,
    pub messages: Vec<String>,
}

impl DZReport {
    /// Coprime, minimal, and matching the expected passport when given.
    pub fn passes(&self) -> bool {
        self.coprime && self.minimal && self.passport_match != Some(false)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "coprime: {}", self.coprime);
        let _ = writeln!(s, "alpha_observed: {}", self.alpha_observed);
        let _ = writeln!(s, "beta_observed: {}", self.beta_observed);
        if let Some(m) = self.passport_match {
            let _ = writeln!(s, "passport_match: {m}");
        }
        let _ = writeln!(s, "n: {}", self.n);
        let _ = writeln!(s, "p: {}", self.p);
        let _ = writeln!(s, "q: {}", self.q);
        let _ = writeln!(s, "degR_observed: {}", self.deg_r_observed);
        let _ = writeln!(s, "degR_required: {}", self.deg_r_required);
        let _ = writeln!(s, "minimal: {}", self.minimal);
        for m in &self.messages {
            let _ = writeln!(s, "message: {m}");
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn partition_of(p: &RatPoly) -> Result<Partition> {
    Partition::new(profile_to_partition(&squarefree_profile(p)?))
}

/// Checks coprimality, multiplicity profiles and the degree of P − Q.
///
/// With an expected passport, `p` and `q` are taken from it; otherwise from
/// the observed profiles.
pub fn check_dz(p: &RatPoly, q: &RatPoly, expected: Option<&Passport>) -> Result<DZReport> {
    let n = match (p.degree(), q.degree()) {
        (Some(a), Some(b)) if a == b && a >= 1 => a,
        (a, b) => {
            return Err(DzError::Domain(format!(
                "P and Q must have the same positive degree, got {a:?} and {b:?}"
            )))
        }
    };
    let coprime = poly_gcd(p, q)?.is_constant();
    let alpha = partition_of(p)?;
    let beta = partition_of(q)?;
    let r = p - q;
    let deg_r = r.deg_i();
    let (np, nq) = match expected {
        Some(e) => (e.black.len(), e.white.len()),
        None => (alpha.len(), beta.len()),
    };
    let required = n as i64 + 1 - (np + nq) as i64;
    let passport_match = expected.map(|e| e.black == alpha && e.white == beta);
    let mut messages = Vec::new();
    if !coprime {
        messages.push("P and Q share a nonconstant factor".to_string());
    }
    if passport_match == Some(false) {
        let e = expected.unwrap();
        messages.push(format!("observed passport {alpha}|{beta} differs from expected {e}"));
    }
    if deg_r > required {
        messages.push(format!("deg R = {deg_r} exceeds the minimum {required}"));
    }
    if deg_r < required && coprime && passport_match != Some(false) {
        messages.push(format!(
            "deg R = {deg_r} is below the lower bound {required}: arithmetic error"
        ));
    }
    Ok(DZReport {
        coprime,
        alpha_observed: alpha,
        beta_observed: beta,
        passport_match,
        n,
        p: np,
        q: nq,
        deg_r_observed: deg_r,
        deg_r_required: required,
        minimal: deg_r == required,
        messages,
    })
}

/// `x^{p+q−1}` divides `P* − Q*`, reciprocals taken at degree n.
pub fn check_reciprocal_form(pair: &DZPair) -> bool {
    let n = match pair.p.degree() {
        Some(n) => n,
        None => return false,
    };
    let (Ok(ps), Ok(qs)) = (pair.p.reciprocal(n), pair.q.reciprocal(n)) else {
        return false;
    };
    let m = pair.passport.edge_count();
    match (&ps - &qs).low_degree() {
        None => false,
        Some(low) => low >= m,
    }
}

/// `3A′B − 2AB′` for `P = A³`, `Q = B²`; the constant when it has degree 0.
pub fn check_cube_square_relation(a: &RatPoly, b: &RatPoly) -> Result<BigRat> {
    let (da, db) = match (a.degree(), b.degree()) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(DzError::Precondition("A and B must be nonzero".into())),
    };
    if da % 2 != 0 || 2 * db != 3 * da || da == 0 {
        return Err(DzError::Precondition(format!(
            "need deg A = 2k and deg B = 3k, got {da} and {db}"
        )));
    }
    let report = check_dz(&a.pow(3), &b.pow(2), None)?;
    if !report.passes() {
        return Err(DzError::Precondition("(A^3, B^2) is not a DZ-pair".into()));
    }
    let w = &(&a.derivative() * b).scale(&BigRat::from_integer(3.into()))
        - &(a * &b.derivative()).scale(&BigRat::from_integer(2.into()));
    if w.is_constant() && !w.is_zero() {
        Ok(w.lead())
    } else {
        Err(DzError::Verification(format!(
            "3A'B - 2AB' has degree {}",
            w.deg_i()
        )))
    }
}

/// Taylor coefficients of `num/den` at `point` through `x^order`.
pub fn taylor_at(num: &RatPoly, den: &RatPoly, point: &BigRat, order: usize) -> Result<Vec<BigRat>> {
    let shift = RatPoly::from_coeffs(vec![point.clone(), BigRat::one()]);
    let n = TruncSeries::from_poly(&num.compose(&shift), order);
    let d = TruncSeries::from_poly(&den.compose(&shift), order);
    let d0 = d.coeff(0);
    if d0.is_zero() {
        return Err(DzError::Domain(format!("pole at {}", rat_to_string(point))));
    }
    // long division of power series
    let mut out: Vec<BigRat> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = n.coeff(k);
        for j in 1..=k {
            acc -= d.coeff(j) * &out[k - j];
        }
        out.push(acc / &d0);
    }
    Ok(out)
}

/// Whether `f = num/den` has `f(point) = 1` and derivatives 1..=order vanishing there.
pub fn check_belyi_critical(num: &RatPoly, den: &RatPoly, point: &BigRat, vanish_order: usize) -> Result<bool> {
    let t = taylor_at(num, den, point, vanish_order)?;
    Ok(t[0].is_one() && t[1..].iter().all(|c| c.is_zero()))
}
