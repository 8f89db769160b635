//! The embedded catalog of explicit pairs, trees and Galois-orbit metadata.
//!
//! Data lives in `data/catalog.toml`; its header documents the format.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{DzError, Result};
use crate::polycore::rat::{parse_rat, rat_to_string};
use crate::polycore::{poly_gcd, BigRat, RatPoly};
use crate::seriesgen::{affine_normalize, construct, power_lift, DZPair, SeriesParams};
use crate::treecombi::{expand_to_map, group_order, is_self_dual, passport_of, symmetry_order, Passport, WeightedTree};

const CATALOG_TOML: &str = include_str!("../data/catalog.toml");

/// Format version this loader understands.
pub const CATALOG_VERSION: u32 = 1;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    version: u32,
    entry: Vec<RawEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    kind: RawKind,
    passport: Option<String>,
    #[serde(default)]
    notes: String,
    tree: Option<String>,
    symmetry: Option<usize>,
    monodromy: Option<u64>,
    #[serde(default)]
    self_dual: bool,
    orbit_size: Option<usize>,
    weight_bound: Option<usize>,
    observed: Option<String>,
    relaxed_deg: Option<i64>,
    lift_of: Option<RawLift>,
    alias_of: Option<String>,
    reciprocal_shift: Option<usize>,
    reciprocal_difference: Option<RawPoly>,
    field: Option<RawPoly>,
    recipe: Option<RawRecipe>,
    #[serde(rename = "P")]
    p: Option<RawPoly>,
    #[serde(rename = "Q")]
    q: Option<RawPoly>,
    #[serde(rename = "R")]
    r: Option<RawPoly>,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "lowercase")]
enum RawKind {
    Dz,
    Generated,
    Relaxed,
    Alias,
    Field,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLift {
    name: String,
    d: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoly {
    scale: Option<String>,
    factors: Vec<RawFactor>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactor {
    coeffs: Vec<RawCoeff>,
    power: Option<u32>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoeff {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecipe {
    series: String,
    params: BTreeMap<String, usize>,
    steps: Vec<RawStep>,
}

#[derive(Deserialize)]
#[serde(tag = "op", rename_all = "lowercase", deny_unknown_fields)]
enum RawStep {
    Affine { shift: String, scale: String, vscale: String },
    Lift { d: usize },
}

/// `scale · ∏ factor^power`, kept unexpanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    pub scale: BigRat,
    pub factors: Vec<(RatPoly, u32)>,
}

impl Factored {
    pub fn expand(&self) -> RatPoly {
        self.factors
            .iter()
            .fold(RatPoly::constant(self.scale.clone()), |acc, (f, e)| &acc * &f.pow(*e))
    }

    /// `∏ factor^(power/e)` when the scale is 1 and every power is a multiple of `e`.
    pub fn root(&self, e: u32) -> Option<RatPoly> {
        if !self.scale.is_one() || e == 0 || self.factors.iter().any(|(_, k)| k % e != 0) {
            return None;
        }
        Some(self.factors.iter().fold(RatPoly::one(), |acc, (f, k)| &acc * &f.pow(k / e)))
    }
}

/// One step applied to a constructed series pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecipeStep {
    /// `F(x) → vscale · F(scale·x + shift)`.
    Affine { shift: BigRat, scale: BigRat, vscale: BigRat },
    /// `x → x^d`.
    Lift(usize),
}

/// A series constructor followed by changes of variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub params: SeriesParams,
    pub steps: Vec<RecipeStep>,
}

impl Recipe {
    /// Runs the recipe; every intermediate pair must certify.
    pub fn build(&self) -> Result<DZPair> {
        let mut pair = construct(&self.params)?;
        for step in &self.steps {
            pair = match step {
                RecipeStep::Affine { shift, scale, vscale } => affine_normalize(&pair, shift, scale, vscale)?,
                RecipeStep::Lift(d) => power_lift(&pair, *d)?.into_certified()?,
            };
        }
        Ok(pair)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryKind {
    /// Printed pair, minimal for its passport.
    Dz,
    /// Pair produced by a [`Recipe`].
    Generated,
    /// Pair whose `P − Q` exceeds the minimal degree of the nominal passport.
    Relaxed { observed: Passport, deg_r: i64 },
    /// The pair of `of`, whose reciprocals differ by `x^shift · difference`.
    Alias { of: String, shift: usize, difference: RatPoly },
    /// A Galois orbit over the field defined by `defining`; no polynomials.
    Field { defining: RatPoly },
}

impl EntryKind {
    pub fn label(&self) -> &'static str {
        match self {
            EntryKind::Dz => "dz",
            EntryKind::Generated => "generated",
            EntryKind::Relaxed { .. } => "relaxed",
            EntryKind::Alias { .. } => "alias",
            EntryKind::Field { .. } => "field",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    pub passport: Option<Passport>,
    pub pair: Option<DZPair>,
    pub p_factored: Option<Factored>,
    pub q_factored: Option<Factored>,
    /// The printed `R`, when there is one.
    pub printed_r: Option<Factored>,
    pub tree: Option<WeightedTree>,
    pub notes: String,
    pub symmetry: Option<usize>,
    pub monodromy: Option<u64>,
    pub self_dual: bool,
    pub orbit_size: Option<usize>,
    pub weight_bound: Option<usize>,
    pub lift_of: Option<(String, usize)>,
    pub recipe: Option<Recipe>,
}

impl CatalogEntry {
    /// The pair, or a domain error for metadata-only entries.
    pub fn dz_pair(&self) -> Result<&DZPair> {
        self.pair
            .as_ref()
            .ok_or_else(|| DzError::Domain(format!("catalog entry {} has no polynomials", self.name)))
    }
}

fn parse_coeff(c: &RawCoeff) -> Result<BigRat> {
    match c {
        RawCoeff::Int(n) => Ok(BigRat::from_integer((*n).into())),
        RawCoeff::Text(s) => parse_rat(s),
    }
}

fn factored(raw: &RawPoly) -> Result<Factored> {
    let scale = match &raw.scale {
        Some(s) => parse_rat(s)?,
        None => BigRat::one(),
    };
    let mut factors = Vec::with_capacity(raw.factors.len());
    for f in &raw.factors {
        let coeffs = f.coeffs.iter().map(parse_coeff).collect::<Result<Vec<_>>>()?;
        factors.push((RatPoly::from_coeffs(coeffs), f.power.unwrap_or(1)));
    }
    Ok(Factored { scale, factors })
}

fn recipe(raw: &RawRecipe) -> Result<Recipe> {
    let params = SeriesParams::from_named(&raw.series, &raw.params, None)?;
    let steps = raw
        .steps
        .iter()
        .map(|s| {
            Ok(match s {
                RawStep::Affine { shift, scale, vscale } => RecipeStep::Affine {
                    shift: parse_rat(shift)?,
                    scale: parse_rat(scale)?,
                    vscale: parse_rat(vscale)?,
                },
                RawStep::Lift { d } => RecipeStep::Lift(*d),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Recipe { params, steps })
}

fn missing(name: &str, field: &str) -> DzError {
    DzError::Parse(format!("catalog entry {name} needs {field}"))
}

/// Parses catalog text in the embedded format. Generated pairs are built
/// and aliases resolved, but nothing is verified here.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let raw: RawCatalog = toml::from_str(text).map_err(|e| DzError::Parse(format!("catalog: {e}")))?;
    if raw.version != CATALOG_VERSION {
        return Err(DzError::Parse(format!(
            "catalog version {} is not {CATALOG_VERSION}",
            raw.version
        )));
    }
    let mut out: Vec<CatalogEntry> = Vec::with_capacity(raw.entry.len());
    for e in &raw.entry {
        if out.iter().any(|o| o.name == e.name) {
            return Err(DzError::Parse(format!("duplicate catalog entry {}", e.name)));
        }
        let name = e.name.as_str();
        let passport = e.passport.as_deref().map(str::parse::<Passport>).transpose()?;
        let p_factored = e.p.as_ref().map(factored).transpose()?;
        let q_factored = e.q.as_ref().map(factored).transpose()?;
        let printed_r = e.r.as_ref().map(factored).transpose()?;
        let recipe = e.recipe.as_ref().map(recipe).transpose()?;
        let provenance = format!("catalog {name}");
        let kind = match e.kind {
            RawKind::Dz => EntryKind::Dz,
            RawKind::Generated => EntryKind::Generated,
            RawKind::Relaxed => EntryKind::Relaxed {
                observed: e.observed.as_deref().ok_or_else(|| missing(name, "observed"))?.parse()?,
                deg_r: e.relaxed_deg.ok_or_else(|| missing(name, "relaxed_deg"))?,
            },
            RawKind::Alias => EntryKind::Alias {
                of: e.alias_of.clone().ok_or_else(|| missing(name, "alias_of"))?,
                shift: e.reciprocal_shift.ok_or_else(|| missing(name, "reciprocal_shift"))?,
                difference: factored(e.reciprocal_difference.as_ref().ok_or_else(|| missing(name, "reciprocal_difference"))?)?
                    .expand(),
            },
            RawKind::Field => EntryKind::Field {
                defining: factored(e.field.as_ref().ok_or_else(|| missing(name, "field"))?)?.expand(),
            },
        };
        let pair = match &kind {
            EntryKind::Field { .. } => None,
            EntryKind::Alias { of, .. } => {
                let target = out
                    .iter()
                    .find(|o| &o.name == of)
                    .ok_or_else(|| DzError::Parse(format!("{name} aliases unknown entry {of}")))?;
                let mut pair = target.dz_pair()?.clone();
                pair.provenance = provenance;
                Some(pair)
            }
            EntryKind::Generated => {
                let r = recipe.as_ref().ok_or_else(|| missing(name, "recipe"))?;
                let mut pair = r.build()?;
                pair.provenance = provenance;
                if let Some(pp) = &passport {
                    pair.passport = pp.clone();
                }
                Some(pair)
            }
            _ => {
                let p = p_factored.as_ref().ok_or_else(|| missing(name, "P"))?.expand();
                let q = q_factored.as_ref().ok_or_else(|| missing(name, "Q"))?.expand();
                let pp = passport.clone().ok_or_else(|| missing(name, "passport"))?;
                Some(DZPair::new(p, q, pp, provenance))
            }
        };
        let passport = passport.or_else(|| pair.as_ref().map(|p| p.passport.clone()));
        let tree = e.tree.as_deref().map(str::parse::<WeightedTree>).transpose()?;
        out.push(CatalogEntry {
            name: e.name.clone(),
            kind,
            passport,
            pair,
            p_factored,
            q_factored,
            printed_r,
            tree,
            notes: e.notes.clone(),
            symmetry: e.symmetry,
            monodromy: e.monodromy,
            self_dual: e.self_dual,
            orbit_size: e.orbit_size,
            weight_bound: e.weight_bound,
            lift_of: e.lift_of.as_ref().map(|l| (l.name.clone(), l.d)),
            recipe,
        });
    }
    Ok(out)
}

/// The embedded catalog, parsed once.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| parse_catalog(CATALOG_TOML).expect("embedded catalog parses"))
}

pub fn catalog_names() -> Vec<&'static str> {
    catalog().iter().map(|e| e.name.as_str()).collect()
}

pub fn catalog_get(name: &str) -> Result<&'static CatalogEntry> {
    catalog()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| DzError::Domain(format!("no catalog entry named {name:?}")))
}

/// Outcome of checking one entry.
#[derive(Clone, Debug, Serialize)]
pub struct EntryVerdict {
    pub name: String,
    pub kind: String,
    pub passport: Option<Passport>,
    #[serde(rename = "degR")]
    pub deg_r: Option<i64>,
    #[serde(rename = "degR_required")]
    pub deg_r_required: Option<i64>,
    /// Leading coefficient of `P − Q`.
    #[serde(rename = "R_lead")]
    pub r_lead: Option<String>,
    pub minimal: Option<bool>,
    pub passed: bool,
    pub messages: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub entries: Vec<EntryVerdict>,
}

impl CatalogReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn get(&self, name: &str) -> Option<&EntryVerdict> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let deg = match (e.deg_r, e.deg_r_required) {
                (Some(o), Some(r)) => format!("degR {o} (min {r})"),
                _ => "-".to_string(),
            };
            let pp = e.passport.as_ref().map(|p| p.to_string()).unwrap_or_default();
            let _ = writeln!(
                s,
                "{:<4} {:<14} {:<9} {:<22} {}",
                if e.passed { "PASS" } else { "FAIL" },
                e.name,
                e.kind,
                deg,
                pp
            );
            for m in &e.messages {
                let _ = writeln!(s, "       {m}");
            }
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn check_tree(entry: &CatalogEntry, fail: &mut Vec<String>) {
    let Some(tree) = &entry.tree else {
        return;
    };
    if let Some(pp) = &entry.passport {
        let seen = passport_of(tree);
        if &seen != pp {
            fail.push(format!("tree has passport {seen}, entry says {pp}"));
        }
    }
    if let Some(k) = entry.symmetry {
        let seen = symmetry_order(tree);
        if seen != k {
            fail.push(format!("tree has symmetry of order {seen}, entry says {k}"));
        }
    }
    if let Some(g) = entry.monodromy {
        match group_order(&expand_to_map(tree)) {
            Ok(o) if o == g.into() => {}
            Ok(o) => fail.push(format!("monodromy group has order {o}, entry says {g}")),
            Err(e) => fail.push(format!("monodromy: {e}")),
        }
    }
    if entry.self_dual && !is_self_dual(tree) {
        fail.push("tree is not self-dual".into());
    }
}

fn check_pair(entry: &CatalogEntry, all: &[CatalogEntry], v: &mut EntryVerdict) -> Result<()> {
    let pair = entry.dz_pair()?;
    let report = pair.report()?;
    v.deg_r = Some(report.deg_r_observed);
    v.deg_r_required = Some(report.deg_r_required);
    v.minimal = Some(report.minimal);
    v.r_lead = (!pair.r.is_zero()).then(|| rat_to_string(&pair.r.lead()));
    let fail = &mut v.messages;
    match &entry.kind {
        EntryKind::Relaxed { observed, deg_r } => {
            if !report.coprime {
                fail.push("P and Q share a root".into());
            }
            if report.minimal {
                fail.push("relaxed entry is minimal".into());
            }
            if report.deg_r_observed != *deg_r {
                fail.push(format!("deg R = {}, entry says {deg_r}", report.deg_r_observed));
            }
            if report.alpha_observed != observed.black || report.beta_observed != observed.white {
                fail.push(format!(
                    "observed passport {}|{}, entry says {observed}",
                    report.alpha_observed, report.beta_observed
                ));
            }
        }
        EntryKind::Alias { shift, difference, .. } => {
            let n = pair.degree();
            let lhs = &pair.p.reciprocal(n)? - &pair.q.reciprocal(n)?;
            if lhs != difference.shift_up(*shift) {
                fail.push(format!("P* - Q* is not x^{shift} times the stored difference"));
            }
            if !report.passes() {
                fail.extend(report.messages.iter().cloned());
            }
        }
        _ => {
            if !report.passes() {
                fail.extend(report.messages.iter().cloned());
            }
        }
    }
    if let Some(r) = &entry.printed_r {
        if r.expand() != pair.r {
            fail.push("P - Q differs from the stored R".into());
        }
    }
    if let (Some(recipe), EntryKind::Dz) = (&entry.recipe, &entry.kind) {
        let built = recipe.build()?;
        if (&built.p, &built.q) != (&pair.p, &pair.q) {
            fail.push(format!("recipe {} does not reproduce the stored pair", recipe.params));
        }
    }
    if let Some((base, d)) = &entry.lift_of {
        let base = all
            .iter()
            .find(|e| &e.name == base)
            .ok_or_else(|| DzError::Domain(format!("lift of unknown entry {base}")))?;
        let lifted = power_lift(base.dz_pair()?, *d)?;
        if (&lifted.pair.p, &lifted.pair.q) != (&pair.p, &pair.q) {
            fail.push(format!("not the x^{d} lift of {}", base.name));
        }
    }
    Ok(())
}

fn check_field(defining: &RatPoly, entry: &CatalogEntry, fail: &mut Vec<String>) -> Result<()> {
    let g = poly_gcd(defining, &defining.derivative())?;
    if !g.is_constant() {
        fail.push("defining polynomial is not squarefree".into());
    }
    if entry.orbit_size != defining.degree() {
        fail.push(format!(
            "defining polynomial has degree {}, orbit size {:?}",
            defining.deg_i(),
            entry.orbit_size
        ));
    }
    Ok(())
}

/// Checks one entry against the rest of the catalog.
pub fn verify_entry(entry: &CatalogEntry, all: &[CatalogEntry]) -> EntryVerdict {
    let mut v = EntryVerdict {
        name: entry.name.clone(),
        kind: entry.kind.label().to_string(),
        passport: entry.passport.clone(),
        deg_r: None,
        deg_r_required: None,
        r_lead: None,
        minimal: None,
        passed: false,
        messages: Vec::new(),
    };
    let outcome = match &entry.kind {
        EntryKind::Field { defining } => check_field(defining, entry, &mut v.messages),
        _ => check_pair(entry, all, &mut v),
    };
    if let Err(e) = outcome {
        v.messages.push(e.to_string());
    }
    check_tree(entry, &mut v.messages);
    v.passed = v.messages.is_empty();
    v
}

/// Verifies every entry; failures are report content.
pub fn catalog_verify_all() -> CatalogReport {
    let all = catalog();
    CatalogReport {
        entries: all.iter().map(|e| verify_entry(e, all)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::rat;
    use crate::verify::check_cube_square_relation;

    fn desc(cs: &[i64]) -> RatPoly {
        RatPoly::from_ints_desc(cs)
    }

    fn pair(name: &str) -> &'static DZPair {
        catalog_get(name).unwrap().dz_pair().unwrap()
    }

    #[test]
    fn every_entry_verifies() {
        let report = catalog_verify_all();
        assert!(report.all_passed(), "{}", report.to_text());
        assert!(report.entries.len() >= 30);
    }

    #[test]
    fn printed_identities() {
        assert_eq!(pair("K").r, desc(&[-1728, 0]));
        assert_eq!(pair("Q").r, RatPoly::constant(parse_rat("-2^6*3^12").unwrap()));
        let t = desc(&[1, 0, 62, 148, 1001, 8852]).scale(&parse_rat("-2^38*3^3").unwrap());
        assert_eq!(pair("T").r, t);
        let m = desc(&[1, -28, 324]).scale(&parse_rat("-2^6*3^12").unwrap());
        assert_eq!(pair("M").r, m);
        let e = desc(&[5, -6, 111, 64, 795, 1254, 5477]).scale(&parse_rat("2^6*3^15").unwrap());
        assert_eq!(pair("elkies_d").r, e);
        assert_eq!(pair("elkies_d").degree(), 30);
    }

    #[test]
    fn report_fields() {
        let report = catalog_verify_all();
        let t = report.get("T").unwrap();
        assert_eq!(t.deg_r, Some(5));
        assert_eq!(t.r_lead.as_deref(), Some("-7421703487488"));
        assert_eq!(parse_rat("-2^38*3^3").unwrap(), parse_rat("-7421703487488").unwrap());
        let c = report.get("relaxed_cubeS").unwrap();
        assert_eq!((c.deg_r, c.deg_r_required, c.minimal), (Some(9), Some(8), Some(false)));
        let m = report.get("relaxed_multR").unwrap();
        assert_eq!((m.deg_r, m.deg_r_required, m.minimal), (Some(9), Some(7), Some(false)));
        assert!(report.to_text().contains("PASS T"));
    }

    #[test]
    fn rational_black_vertices_of_q() {
        let q = catalog_get("Q").unwrap().p_factored.as_ref().unwrap();
        let cubic = &q.factors[0].0;
        let quintic = &q.factors[1].0;
        let (_, r) = cubic.div_rem(&desc(&[1, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(cubic.div_exact(&desc(&[1, 1])).unwrap(), desc(&[1, -1, 16]));
        assert_eq!(quintic.div_exact(&desc(&[1, 3])).unwrap(), desc(&[1, -3, 48, -80, 624]));
    }

    #[test]
    fn cube_square_relation() {
        for name in ["T", "N", "birch_a", "elkies_d"] {
            let e = catalog_get(name).unwrap();
            let a = e.p_factored.as_ref().unwrap().root(3).unwrap();
            let b = e.q_factored.as_ref().unwrap().root(2).unwrap();
            let c = check_cube_square_relation(&a, &b).unwrap();
            assert!(!num_traits::Zero::is_zero(&c), "{name}");
        }
    }

    #[test]
    fn lifts_match_entries() {
        let l2 = power_lift(pair("L"), 2).unwrap();
        assert!(l2.passes());
        assert_eq!((&l2.pair.p, &l2.pair.q), (&pair("R").p, &pair("R").q));
        let s3 = power_lift(pair("S"), 3).unwrap();
        let nominal = pair("relaxed_cubeS").report().unwrap();
        assert!(!nominal.minimal);
        assert_eq!((&s3.pair.p, &s3.pair.q), (&pair("relaxed_cubeS").p, &pair("relaxed_cubeS").q));
    }

    #[test]
    fn trees_and_facts() {
        let e = catalog_get("pgl27_a").unwrap();
        let tree = e.tree.as_ref().unwrap();
        assert_eq!(group_order(&expand_to_map(tree)).unwrap(), 336u32.into());
        assert!(is_self_dual(catalog_get("selfdual_2_5").unwrap().tree.as_ref().unwrap()));
        for name in ["K", "L", "M", "N", "O", "P", "Q", "R", "S", "T"] {
            let e = catalog_get(name).unwrap();
            assert_eq!(passport_of(e.tree.as_ref().unwrap()), e.dz_pair().unwrap().passport);
        }
    }

    #[test]
    fn generated_entries() {
        let sym = pair("bs_73_sym");
        assert_eq!(sym.p, desc(&[1, 0, 0, -3]).pow(7));
        for name in ["bs_83_sym", "bs_103_sym2", "bs_103_sym3", "selfdual_2_5"] {
            let p = pair(name);
            assert!(p.report().unwrap().passes(), "{name}");
            assert_eq!(&p.passport, catalog_get(name).unwrap().passport.as_ref().unwrap());
        }
        assert_eq!(pair("bs_103_sym3").degree(), 30);
    }

    #[test]
    fn bs_95_has_no_printed_r() {
        let e = catalog_get("bs_95").unwrap();
        assert!(e.printed_r.is_none());
        assert_eq!(e.dz_pair().unwrap().r.deg_i(), 32);
        assert_eq!((e.orbit_size, e.weight_bound), (Some(11), Some(45)));
    }

    #[test]
    fn field_entries_have_no_pair() {
        let e = catalog_get("pgl27_galois").unwrap();
        assert!(e.dz_pair().is_err());
        match &e.kind {
            EntryKind::Field { defining } => assert_eq!(defining.eval(&rat(0)), rat(2560)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_and_malformed() {
        assert!(catalog_get("Z").is_err());
        assert!(parse_catalog("version = 2\nentry = []").is_err());
        assert!(parse_catalog("version = 1\n[[entry]]\nname = \"x\"\nkind = \"dz\"\n").is_err());
        let bad = "version = 1\n[[entry]]\nname = \"x\"\nkind = \"dz\"\nbogus = 1\n";
        assert!(parse_catalog(bad).is_err());
    }

    #[test]
    fn tampered_entry_fails() {
        let mut e = catalog_get("K").unwrap().clone();
        let pair = e.pair.as_mut().unwrap();
        pair.p = &pair.p + &RatPoly::one();
        pair.r = &pair.p - &pair.q;
        let v = verify_entry(&e, catalog());
        assert!(!v.passed);
    }
}
