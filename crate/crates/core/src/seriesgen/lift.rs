//! Changes of variable: `x → x^d` lifts and affine normalizations.

use num_traits::Zero;

use super::DZPair;
use crate::error::{DzError, Result};
use crate::polycore::rat::rat_to_string;
use crate::polycore::{BigRat, RatPoly};
use crate::treecombi::Passport;
use crate::verify::{check_dz, DZReport};

/// A lifted pair together with the verdict on it.
#[derive(Clone, Debug)]
pub struct Lift {
    pub pair: DZPair,
    pub report: DZReport,
}

impl Lift {
    pub fn passes(&self) -> bool {
        self.report.passes()
    }

    /// The pair when it is again a minimal DZ-pair, otherwise the failing conditions.
    pub fn into_certified(self) -> Result<DZPair> {
        if self.report.passes() {
            Ok(self.pair)
        } else {
            Err(DzError::Verification(format!(
                "{}: {}",
                self.pair.provenance,
                self.report.messages.join("; ")
            )))
        }
    }
}

/// Substitutes `x^d` into `P`, `Q` and `R`, then re-verifies. The passport
/// of the result is the observed one.
pub fn power_lift(pair: &DZPair, d: usize) -> Result<Lift> {
    if d == 0 {
        return Err(DzError::Domain("lift power must be positive".into()));
    }
    let p = pair.p.subs_power(d);
    let q = pair.q.subs_power(d);
    let report = check_dz(&p, &q, None)?;
    let passport = Passport::new(report.alpha_observed.clone(), report.beta_observed.clone())?;
    let mut lifted = DZPair::new(p, q, passport, format!("lift({}, x^{d})", pair.provenance));
    lifted.components = pair
        .components
        .iter()
        .map(|(n, c)| (n.clone(), c.subs_power(d)))
        .collect();
    Ok(Lift { pair: lifted, report })
}

/// `F(x) → vscale · F(scale·x + shift)` for `P`, `Q` and `R`.
///
/// The result must keep coprimality, the passport and the degree of `R`.
pub fn affine_normalize(pair: &DZPair, shift: &BigRat, scale: &BigRat, vscale: &BigRat) -> Result<DZPair> {
    if scale.is_zero() || vscale.is_zero() {
        return Err(DzError::Domain("affine change needs nonzero scale and vscale".into()));
    }
    let sub = RatPoly::from_coeffs(vec![shift.clone(), scale.clone()]);
    let map = |f: &RatPoly| f.compose(&sub).scale(vscale);
    let p = map(&pair.p);
    let q = map(&pair.q);
    let name = format!(
        "affine({}, x -> {}x + {}, * {})",
        pair.provenance,
        rat_to_string(scale),
        rat_to_string(shift),
        rat_to_string(vscale)
    );
    let mut out = DZPair::new(p, q, pair.passport.clone(), name);
    out.components = pair.components.iter().map(|(n, c)| (n.clone(), c.compose(&sub))).collect();
    let report = out.report()?;
    if !report.coprime || report.passport_match == Some(false) || report.deg_r_observed != pair.r.deg_i() {
        return Err(DzError::Verification(format!(
            "affine change broke the pair: {}",
            report.messages.join("; ")
        )));
    }
    Ok(out)
}
