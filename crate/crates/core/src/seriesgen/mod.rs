//! Explicit DZ-pairs for the infinite families of unitrees, the self-dual
//! and split-orbit families, and the transformations between pairs.
//!
//! Every constructor certifies its output with [`crate::verify::check_dz`]
//! before returning it.

mod brushes;
mod diameter4;
mod integrals;
mod lift;
mod params;
mod root;
mod special;
mod stars;

use std::fmt;

use num_integer::Integer;
use serde_json::{json, Map, Value};

use crate::error::{DzError, Result};
use crate::polycore::RatPoly;
use crate::treecombi::Passport;
use crate::verify::{check_dz, DZReport};

pub use brushes::{series_b1, series_b2, series_c, series_e_even, series_e_odd};
pub use diameter4::{series_f, series_g, series_g_constant, GConstant};
pub use integrals::{series_h, series_i, series_i_critical_value};
pub use lift::{affine_normalize, power_lift, Lift};
pub use params::{construct, SeriesParams, SERIES_KEYS};
pub use root::{series_j, series_j_root};
pub use special::{self_dual_series, split_orbit_belyi, SplitVariant};
pub use stars::{series_a, series_d};

/// A pair `(P, Q)` with `R = P − Q`, its passport and where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DZPair {
    pub p: RatPoly,
    pub q: RatPoly,
    pub r: RatPoly,
    pub passport: Passport,
    pub provenance: String,
    /// Named building blocks such as `A`, `B`, `C`.
    pub components: Vec<(String, RatPoly)>,
}

impl DZPair {
    pub fn new(p: RatPoly, q: RatPoly, passport: Passport, provenance: impl Into<String>) -> DZPair {
        let r = &p - &q;
        DZPair {
            p,
            q,
            r,
            passport,
            provenance: provenance.into(),
            components: Vec::new(),
        }
    }

    pub fn with_component(mut self, name: &str, poly: RatPoly) -> DZPair {
        self.components.push((name.to_string(), poly));
        self
    }

    pub fn component(&self, name: &str) -> Option<&RatPoly> {
        self.components.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn degree(&self) -> usize {
        self.p.degree().unwrap_or(0)
    }

    pub fn report(&self) -> Result<DZReport> {
        check_dz(&self.p, &self.q, Some(&self.passport))
    }

    /// Returns the pair if it passes [`check_dz`] against its own passport.
    pub fn certify(self) -> Result<DZPair> {
        let report = self.report()?;
        if report.passes() {
            Ok(self)
        } else {
            Err(DzError::Verification(format!(
                "{}: {}",
                self.provenance,
                report.messages.join("; ")
            )))
        }
    }

    pub fn to_json(&self) -> Value {
        let mut comps = Map::new();
        for (name, poly) in &self.components {
            comps.insert(name.clone(), json!(poly.to_strings()));
        }
        json!({
            "provenance": self.provenance,
            "passport": self.passport.to_string(),
            "P": self.p.to_strings(),
            "Q": self.q.to_strings(),
            "R": self.r.to_strings(),
            "components": comps,
        })
    }
}

impl fmt::Display for DZPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} [{}]", self.provenance, self.passport)?;
        for (name, poly) in &self.components {
            writeln!(f, "{name} = {poly}")?;
        }
        writeln!(f, "P = {}", self.p)?;
        writeln!(f, "Q = {}", self.q)?;
        write!(f, "R = {}", self.r)
    }
}

pub(crate) fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(DzError::Domain(msg()))
    }
}

pub(crate) fn coprime(name: &str, s: usize, t: usize) -> Result<()> {
    require(s >= 1 && t >= 1 && s.gcd(&t) == 1, || {
        format!("series {name} needs s, t >= 1 with gcd(s,t) = 1, got s={s}, t={t}")
    })
}

/// `(x + c)/2` as a polynomial.
pub(crate) fn half_linear(c: i64) -> RatPoly {
    use crate::polycore::rat::frac;
    RatPoly::from_coeffs(vec![frac(c, 2), frac(1, 2)])
}

pub(crate) fn repeat(part: usize, times: usize) -> Vec<usize> {
    vec![part; times]
}
