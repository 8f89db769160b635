//! Parameter grids and the Padé comparison shared by the grid test and
//! the acceptance harness.
#![allow(dead_code)]

use dzpairs::polycore::rat::frac;
use dzpairs::polycore::{BigRat, RatPoly};
use dzpairs::seriesgen::*;
use dzpairs::specfun::{pade_form, weight_series};
use num_integer::Integer;
use num_traits::Zero;

/// Every constructor over its certified parameter ranges.
pub fn grid() -> Vec<SeriesParams> {
    use SeriesParams::*;
    let mut g = Vec::new();
    for s in 1..=5 {
        for t in 1..=5 {
            if s.gcd(&t) == 1 {
                for k in 1..=8 {
                    g.push(A { s, t, k });
                }
            }
        }
    }
    for s in 1..=6 {
        for t in 1..=6 {
            if s.gcd(&t) == 1 {
                g.push(D { s, t });
            }
        }
    }
    for s in 1..6 {
        for t in 1..=6 - s {
            if s.gcd(&t) != 1 {
                continue;
            }
            for k in 0..=3 {
                for l in 0..=3 {
                    for r in 0..=3 {
                        if r >= 1 {
                            g.push(EEven { s, t, k, l, r });
                        }
                        if k + l + r > 0 {
                            g.push(EOdd { s, t, k, l, r });
                        }
                    }
                }
            }
        }
    }
    for s in 2..=5 {
        for t in 1..s {
            if s.gcd(&t) == 1 {
                for k in 1..=3 {
                    for l in 1..=3 {
                        g.push(C { s, t, k, l });
                    }
                }
            }
        }
    }
    for k in 2..=6 {
        for l in 1..=4 {
            for m in 2..=4 {
                g.push(F { k, l, m });
            }
        }
    }
    for k in 3..=6 {
        for m in 2..=4 {
            g.push(G { k, m });
        }
    }
    for k in 2..=5 {
        for l in 2..=5 {
            g.push(H { k, l });
        }
    }
    for k in 2..=5 {
        g.push(I { k });
    }
    for k in 1..=6 {
        g.push(J { k });
    }
    for q in 2..=6 {
        for p in 1..q {
            g.push(SelfDual { p, q });
        }
    }
    for k in 3..=8 {
        g.push(SplitOrbit { k, variant: SplitVariant::Symmetric });
        g.push(SplitOrbit { k, variant: SplitVariant::AsymmetricAmended });
    }
    g
}

/// The double-brush points: `s + t ≤ 6` coprime, `k, l, r ≤ 3`.
pub fn e_grid() -> Vec<SeriesParams> {
    grid()
        .into_iter()
        .filter(|p| matches!(p, SeriesParams::EEven { .. } | SeriesParams::EOdd { .. }))
        .collect()
}

fn proportional(x: &RatPoly, y: &RatPoly) -> Option<BigRat> {
    let i = (0..x.coeffs().len()).find(|&i| !x.coeff(i).is_zero())?;
    if y.coeff(i).is_zero() {
        return None;
    }
    let c = x.coeff(i) / y.coeff(i);
    (y.scale(&c) == *x).then_some(c)
}

pub fn pade_matches(d: &DZPair, a: BigRat, b: BigRat, deg_a: usize, deg_b: usize) -> bool {
    let a_star = d.component("A").unwrap().reciprocal(deg_a).unwrap();
    let b_star = d.component("B").unwrap().reciprocal(deg_b).unwrap();
    let f = weight_series(&a, &b, deg_a + deg_b);
    let form = pade_form(&f, deg_b, deg_a).unwrap();
    match (proportional(&a_star, &form.q), proportional(&b_star, &form.p)) {
        (Some(x), Some(y)) => x == y,
        _ => false,
    }
}

/// `(A*, B*)` is proportional, with one scalar, to the Padé form of the
/// weight series at the orders of the construction.
pub fn e_point_is_pade(p: &SeriesParams) -> bool {
    let (s, t, k, l, r, even) = match *p {
        SeriesParams::EEven { s, t, k, l, r } => (s, t, k, l, r, true),
        SeriesParams::EOdd { s, t, k, l, r } => (s, t, k, l, r, false),
        _ => return false,
    };
    let Ok(d) = construct(p) else {
        return false;
    };
    let w = (s + t) as i64;
    let (ki, li) = (k as i64, l as i64);
    let b = frac(ki * w + s as i64, w);
    if even {
        pade_matches(&d, frac(li * w + t as i64, w), b, r - 1, k + l + r)
    } else {
        pade_matches(&d, frac(-(li * w + s as i64), w), b, l + r, k + r)
    }
}
