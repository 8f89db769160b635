//! Generalized Jacobi polynomials, the weight series (1−x)^a(1+x)^b,
//! Padé forms and the behaviour at infinity of the Jacobi identity.

use num_traits::{One, Zero};

use crate::error::{DzError, Result};
use crate::polycore::rat::{binom, frac, rat, rat_powi, to_i64};
use crate::polycore::{trunc_pow, BigRat, RatPoly, TruncSeries};

/// Nominal degree `n` and rational parameters `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiParams {
    pub n: usize,
    pub a: BigRat,
    pub b: BigRat,
}

impl JacobiParams {
    pub fn new(n: usize, a: BigRat, b: BigRat) -> Self {
        JacobiParams { n, a, b }
    }
}

/// `J_n(a,b,x) = Σ_k C(n+a+b+k, k) C(n+a, n−k) ((x−1)/2)^k`.
pub fn jacobi(params: &JacobiParams) -> RatPoly {
    let JacobiParams { n, a, b } = params;
    let n = *n;
    let nab = rat(n as i64) + a + b;
    let na = rat(n as i64) + a;
    let half_xm1 = RatPoly::from_coeffs(vec![frac(-1, 2), frac(1, 2)]);
    let mut acc = RatPoly::zero();
    let mut power = RatPoly::one();
    for k in 0..=n {
        let c = binom(&(&nab + rat(k as i64)), k) * binom(&na, n - k);
        if !c.is_zero() {
            acc = &acc + &power.scale(&c);
        }
        power = &power * &half_xm1;
    }
    if acc.deg_i() < n as i64 {
        log::warn!(
            "jacobi degree drop: n={} a={} b={} gives degree {}",
            n,
            a,
            b,
            acc.deg_i()
        );
    }
    acc
}

/// Leading coefficient of the nominal degree-n term, `2^{−n} C(2n+a+b, n)`.
pub fn jacobi_leading(params: &JacobiParams) -> BigRat {
    let n = params.n as i64;
    binom(&(rat(2 * n) + &params.a + &params.b), params.n) * rat_powi(&rat(2), -n)
}

/// True when `a+b ∈ {−(n+1), …, −2n}`, where the leading coefficient vanishes.
pub fn jacobi_degree_drops(params: &JacobiParams) -> bool {
    jacobi_leading(params).is_zero()
}

/// The residual of the Jacobi differential equation; zero for a true solution.
pub fn jacobi_ode_residual(params: &JacobiParams, y: &RatPoly) -> RatPoly {
    let JacobiParams { n, a, b } = params;
    let n = rat(*n as i64);
    let one_minus_x2 = RatPoly::from_ints(&[1, 0, -1]);
    let lin = RatPoly::from_coeffs(vec![b - a, -(a + b + rat(2))]);
    let k = &n * (&n + a + b + rat(1));
    let d1 = y.derivative();
    let d2 = d1.derivative();
    &(&(&one_minus_x2 * &d2) + &(&lin * &d1)) + &y.scale(&k)
}

/// Taylor expansion of `(1−x)^a (1+x)^b` to order `order`.
pub fn weight_series(a: &BigRat, b: &BigRat, order: usize) -> TruncSeries {
    let left = TruncSeries::new(vec![rat(1), rat(-1)], order);
    let right = TruncSeries::new(vec![rat(1), rat(1)], order);
    // constant terms are 1, so the powers cannot fail
    let l = trunc_pow(&left, a).expect("unit constant term");
    let r = trunc_pow(&right, b).expect("unit constant term");
    l.mul(&r)
}

/// `q·f − p ≡ 0 (mod x^{n+m+1})` with `deg p ≤ n`, `deg q ≤ m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadeForm {
    pub p: RatPoly,
    pub q: RatPoly,
    pub n: usize,
    pub m: usize,
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(rows: &mut [Vec<BigRat>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Padé form of type (n, m) for `f`.
///
/// The kernel vector with the lowest-degree `q` is returned, scaled so its
/// first nonzero coefficient is 1.
pub fn pade_form(f: &TruncSeries, n: usize, m: usize) -> Result<PadeForm> {
    if f.order() < n + m {
        return Err(DzError::Order {
            have: f.order(),
            need: n + m,
        });
    }
    let fc = |i: i64| -> BigRat {
        if i < 0 {
            BigRat::zero()
        } else {
            f.coeff(i as usize)
        }
    };
    // coefficient of x^j in q·f vanishes for j = n+1 ..= n+m
    let mut rows: Vec<Vec<BigRat>> = (n + 1..=n + m)
        .map(|j| (0..=m).map(|i| fc(j as i64 - i as i64)).collect())
        .collect();
    let pivots = rref(&mut rows, m + 1);
    let free = (0..=m)
        .find(|c| !pivots.contains(c))
        .expect("m equations in m+1 unknowns leave a free column");
    let mut qv = vec![BigRat::zero(); m + 1];
    qv[free] = BigRat::one();
    for (row, &pc) in rows.iter().zip(&pivots) {
        if pc < free {
            qv[pc] = -row[free].clone();
        }
    }
    let q = RatPoly::from_coeffs(qv);
    let lowest = q.low_degree().expect("q is nonzero");
    let q = q.scale(&q.coeff(lowest).recip());
    let qf = TruncSeries::from_poly(&q, n + m).mul(&f.truncate(n + m));
    let p = RatPoly::from_coeffs(qf.coeffs()[..=n].to_vec());
    if qf.coeffs()[n + 1..].iter().any(|c| !c.is_zero()) {
        return Err(DzError::Verification("Padé residual does not vanish".into()));
    }
    Ok(PadeForm { p, q, n, m })
}

/// Lowest surviving power of `z` at infinity in
/// `((z−1)/2)^a ((z+1)/2)^b J_n(a,b,z) − J_{n+a+b}(−a,−b,z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    /// The largest exponent with a nonzero coefficient.
    Exponent(i64),
    /// Every coefficient down to and including `z^bound` vanishes.
    ZeroThrough(i64),
}

impl Residual {
    /// Whether the residual is `O(z^{limit})`.
    pub fn at_most(&self, limit: i64) -> bool {
        match self {
            Residual::Exponent(e) => *e <= limit,
            Residual::ZeroThrough(b) => *b <= limit,
        }
    }
}

pub fn jacobi_residual_at_infinity(params: &JacobiParams) -> Result<Residual> {
    let s = &params.a + &params.b;
    let s = to_i64(&s).ok_or_else(|| DzError::Precondition("a+b must be an integer".into()))?;
    let n = params.n as i64;
    let big_n = n + s;
    if big_n < 0 {
        return Err(DzError::Precondition(format!(
            "n + a + b = {big_n} is negative"
        )));
    }
    // with w = 1/z the difference is z^N · [2^{−(a+b)} W(w) J*(w) − J2*(w)]
    let order = (big_n + n + 1 + 4) as usize;
    let j1 = jacobi(params);
    let j2 = jacobi(&JacobiParams::new(big_n as usize, -params.a.clone(), -params.b.clone()));
    let j1s = TruncSeries::from_poly(&j1.reciprocal(params.n)?, order);
    let j2s = TruncSeries::from_poly(&j2.reciprocal(big_n as usize)?, order);
    let w = weight_series(&params.a, &params.b, order);
    let y1 = w.mul(&j1s).scale(&rat_powi(&rat(2), -s));
    let diff = y1.add(&j2s.scale(&rat(-1)));
    match diff.coeffs().iter().position(|c| !c.is_zero()) {
        Some(i) => Ok(Residual::Exponent(big_n - i as i64)),
        None => Ok(Residual::ZeroThrough(big_n - order as i64)),
    }
}
