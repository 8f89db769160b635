//! Command-line front end. The binary is a thin wrapper over [`run`].
//!
//! Exit status: 0 when every requested verification passed, 1 on a
//! mathematical failure, 2 on bad input.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::catalog::{catalog, catalog_get, catalog_verify_all, EntryKind};
use crate::error::{DzError, Result};
use crate::hall::hall_pairs;
use crate::polycore::rat::parse_rat;
use crate::polycore::{BigRat, RatPoly};
use crate::seriesgen::{construct, DZPair, SeriesParams, SplitVariant};
use crate::specfun::{pade_form, weight_series};
use crate::treecombi::{enumerate_orbit_bounded, is_self_dual, symmetry_order, Passport, DEFAULT_WEIGHT_BOUND};
use crate::verify::{check_dz, DZReport};

/// Environment variable overriding the enumeration weight bound.
pub const WEIGHT_BOUND_ENV: &str = "DZPAIRS_WEIGHT_BOUND";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// One invocation: a command, its parameters and the output format.
#[derive(Parser, Debug)]
#[command(name = "dzpairs", version, about = "Davenport-Zannier pairs and weighted plane trees")]
pub struct JobSpec {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Worker threads for parameter sweeps.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build and certify series pairs; each parameter takes `3`, `1-4` or `1,3,5`.
    ///
    /// Series: A(s,t,k) B1(s,t,r) B2(s,t,r) C(s,t,k,l) D(s,t) E_even(s,t,k,l,r)
    /// E_odd(s,t,k,l,r) F(k,l,m) G(k,m) H(k,l) I(k) J(k) SelfDual(p,q) SplitOrbit(k).
    Construct {
        #[arg(long)]
        series: String,
        #[arg(long)]
        s: Option<String>,
        #[arg(long)]
        t: Option<String>,
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        l: Option<String>,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        q: Option<String>,
        /// Tree of the split orbit: symmetric, asymmetric or asymmetric-amended.
        #[arg(long)]
        variant: Option<SplitVariant>,
    },
    /// Check a pair from a file (two lines of ascending coefficients) or the catalog.
    Verify {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        catalog: Option<String>,
        #[arg(long)]
        passport: Option<Passport>,
    },
    /// List the trees of a passport.
    Enumerate {
        #[arg(long)]
        passport: Passport,
        /// Largest weight to enumerate; defaults to $DZPAIRS_WEIGHT_BOUND or 40.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Show a catalog entry, list the catalog, or verify all of it.
    Catalog {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        verify: bool,
    },
    /// Integer pairs with small a^3 - b^2.
    Hall {
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Padé form of type (n, m) of (1-x)^a (1+x)^b.
    Pade {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
        a: BigRat,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
        b: BigRat,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(status: i32, msg: impl Into<String>) -> Outcome {
        Outcome { status, stdout: String::new(), stderr: msg.into() }
    }
}

/// Parses arguments (including the program name) and runs the job.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match JobSpec::try_parse_from(args) {
        Ok(job) => run(&job),
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if status == 0 {
                Outcome { status, stdout: text, stderr: String::new() }
            } else {
                Outcome::fail(status, text)
            }
        }
    }
}

/// Status 2 for malformed input, 1 for everything else.
fn status_of(e: &DzError) -> i32 {
    match e {
        DzError::Parse(_) | DzError::Domain(_) | DzError::Precondition(_) | DzError::InvalidDegree { .. } => 2,
        _ => 1,
    }
}

pub fn run(job: &JobSpec) -> Outcome {
    let result = match &job.command {
        Command::Construct { series, s, t, k, l, r, m, p, q, variant } => {
            let ranges = [("s", s), ("t", t), ("k", k), ("l", l), ("r", r), ("m", m), ("p", p), ("q", q)];
            construct_cmd(job, series, &ranges, *variant)
        }
        Command::Verify { file, catalog, passport } => verify_cmd(job.format, file.as_deref(), catalog.as_deref(), passport.as_ref()),
        Command::Enumerate { passport, bound } => enumerate_cmd(job.format, passport, *bound),
        Command::Catalog { name, verify } => catalog_cmd(job.format, name.as_deref(), *verify),
        Command::Hall { count } => hall_cmd(job.format, *count),
        Command::Pade { a, b, n, m } => pade_cmd(job.format, a, b, *n, *m),
    };
    result.unwrap_or_else(|e| Outcome::fail(status_of(&e), format!("error: {e}\n")))
}

/// `3`, `1-4` (inclusive) or `1,3,5`, and any comma-joined mix.
pub fn parse_range(text: &str) -> Result<Vec<usize>> {
    let bad = || DzError::Parse(format!("bad parameter range {text:?}"));
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        match part.split_once('-') {
            Some((lo, hi)) => {
                let lo: usize = lo.trim().parse().map_err(|_| bad())?;
                let hi: usize = hi.trim().parse().map_err(|_| bad())?;
                if lo > hi {
                    return Err(bad());
                }
                out.extend(lo..=hi);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}

fn grid(ranges: &[(&str, Vec<usize>)]) -> Vec<BTreeMap<String, usize>> {
    let mut points = vec![BTreeMap::new()];
    for (key, values) in ranges {
        points = points
            .into_iter()
            .flat_map(|pt| {
                values.iter().map(move |v| {
                    let mut next = pt.clone();
                    next.insert(key.to_string(), *v);
                    next
                })
            })
            .collect();
    }
    points
}

fn json_lines(values: &[Value]) -> String {
    let mut s = String::new();
    for v in values {
        let _ = writeln!(s, "{v}");
    }
    s
}

fn construct_cmd(
    job: &JobSpec,
    series: &str,
    ranges: &[(&str, &Option<String>)],
    variant: Option<SplitVariant>,
) -> Result<Outcome> {
    let mut parsed = Vec::new();
    for (key, text) in ranges {
        if let Some(t) = text {
            parsed.push((*key, parse_range(t)?));
        }
    }
    let params = grid(&parsed)
        .iter()
        .map(|pt| SeriesParams::from_named(series, pt, variant))
        .collect::<Result<Vec<_>>>()?;
    let single = params.len() == 1;
    let build = |p: &SeriesParams| -> (SeriesParams, Result<DZPair>) { (p.clone(), construct(p)) };
    let results: Vec<(SeriesParams, Result<DZPair>)> = match job.jobs {
        Some(n) if n > 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| DzError::Precondition(e.to_string()))?
            .install(|| params.par_iter().map(build).collect()),
        _ => params.iter().map(build).collect(),
    };
    let mut out = Outcome::default();
    let mut records = Vec::new();
    let mut built = 0;
    for (p, res) in results {
        match res {
            Ok(pair) => {
                built += 1;
                match job.format {
                    Format::Json => records.push(pair.to_json()),
                    Format::Text => {
                        let _ = writeln!(out.stdout, "{pair}\n");
                    }
                }
            }
            Err(e) if single => return Err(e),
            Err(e @ (DzError::Domain(_) | DzError::Precondition(_))) => {
                log::info!("skipping {p}: {e}");
            }
            Err(e) => {
                out.status = 1;
                let _ = writeln!(out.stderr, "{p}: {e}");
                if job.format == Format::Json {
                    records.push(json!({ "provenance": p.to_string(), "error": e.to_string() }));
                }
            }
        }
    }
    if built == 0 && out.status == 0 {
        return Err(DzError::Domain(format!("no valid parameter point for series {series}")));
    }
    if job.format == Format::Json {
        out.stdout = json_lines(&records);
    }
    Ok(out)
}

/// Two lines of comma-separated exact rationals, ascending by degree.
pub fn parse_pair_text(text: &str) -> Result<(RatPoly, RatPoly)> {
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    if lines.len() != 2 {
        return Err(DzError::Parse(format!("expected two coefficient lines, found {}", lines.len())));
    }
    let poly = |line: &str| -> Result<RatPoly> {
        let cs = line.split(',').map(parse_rat).collect::<Result<Vec<_>>>()?;
        Ok(RatPoly::from_coeffs(cs))
    };
    Ok((poly(lines[0])?, poly(lines[1])?))
}

/// The file format read by [`parse_pair_text`].
pub fn pair_text(p: &RatPoly, q: &RatPoly) -> String {
    format!("{}\n{}\n", p.to_strings().join(","), q.to_strings().join(","))
}

/// Reads a pair file and checks it.
pub fn verify_file(path: &Path, passport: Option<&Passport>) -> Result<DZReport> {
    let text = std::fs::read_to_string(path).map_err(|e| DzError::Parse(format!("{}: {e}", path.display())))?;
    let (p, q) = parse_pair_text(&text)?;
    check_dz(&p, &q, passport)
}

fn report_outcome(format: Format, report: &DZReport) -> Outcome {
    let stdout = match format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Text => report.to_text(),
    };
    Outcome { status: if report.passes() { 0 } else { 1 }, stdout, stderr: String::new() }
}

fn verify_cmd(format: Format, file: Option<&Path>, name: Option<&str>, passport: Option<&Passport>) -> Result<Outcome> {
    let report = match (file, name) {
        (Some(path), _) => verify_file(path, passport)?,
        (None, Some(name)) => {
            let pair = catalog_get(name)?.dz_pair()?;
            check_dz(&pair.p, &pair.q, Some(passport.unwrap_or(&pair.passport)))?
        }
        (None, None) => return Err(DzError::Parse("verify needs a file or --catalog NAME".into())),
    };
    Ok(report_outcome(format, &report))
}

/// `--bound`, else the environment variable, else the default.
pub fn weight_bound(flag: Option<usize>) -> Result<usize> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(WEIGHT_BOUND_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| DzError::Parse(format!("{WEIGHT_BOUND_ENV}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_WEIGHT_BOUND),
    }
}

fn enumerate_cmd(format: Format, passport: &Passport, bound: Option<usize>) -> Result<Outcome> {
    let trees = enumerate_orbit_bounded(passport, weight_bound(bound)?)?;
    let stdout = match format {
        Format::Json => {
            let list: Vec<Value> = trees
                .iter()
                .map(|t| json!({ "tree": t.to_string(), "symmetry": symmetry_order(t), "self_dual": is_self_dual(t) }))
                .collect();
            format!("{}\n", json!({ "passport": passport.to_string(), "count": trees.len(), "trees": list }))
        }
        Format::Text => {
            let mut s = format!("{passport}: {} tree(s)\n", trees.len());
            for t in &trees {
                let _ = writeln!(s, "  {t}  symmetry {}", symmetry_order(t));
            }
            s
        }
    };
    Ok(Outcome { status: 0, stdout, stderr: String::new() })
}

fn catalog_cmd(format: Format, name: Option<&str>, verify: bool) -> Result<Outcome> {
    if verify {
        let report = catalog_verify_all();
        let stdout = match format {
            Format::Json => format!("{}\n", report.to_json()),
            Format::Text => report.to_text(),
        };
        return Ok(Outcome { status: if report.all_passed() { 0 } else { 1 }, stdout, stderr: String::new() });
    }
    let Some(name) = name else {
        let stdout = match format {
            Format::Json => {
                let list: Vec<Value> = catalog()
                    .iter()
                    .map(|e| json!({ "name": e.name, "kind": e.kind.label(), "passport": e.passport.as_ref().map(|p| p.to_string()) }))
                    .collect();
                format!("{}\n", Value::Array(list))
            }
            Format::Text => {
                let mut s = String::new();
                for e in catalog() {
                    let pp = e.passport.as_ref().map(|p| p.to_string()).unwrap_or_default();
                    let _ = writeln!(s, "{:<14} {:<9} {pp}", e.name, e.kind.label());
                }
                s
            }
        };
        return Ok(Outcome { status: 0, stdout, stderr: String::new() });
    };
    let e = catalog_get(name)?;
    let stdout = match format {
        Format::Json => {
            let mut v = json!({
                "name": e.name,
                "kind": e.kind.label(),
                "passport": e.passport.as_ref().map(|p| p.to_string()),
                "notes": e.notes,
                "tree": e.tree.as_ref().map(|t| t.to_string()),
            });
            if let Some(pair) = &e.pair {
                v["pair"] = pair.to_json();
            }
            if let EntryKind::Field { defining } = &e.kind {
                v["field"] = json!(defining.to_strings());
            }
            format!("{v}\n")
        }
        Format::Text => {
            let mut s = format!("{} ({})\n{}\n", e.name, e.kind.label(), e.notes);
            if let Some(t) = &e.tree {
                let _ = writeln!(s, "tree {t}");
            }
            if let Some(pair) = &e.pair {
                let _ = writeln!(s, "{pair}");
            }
            if let EntryKind::Field { defining } = &e.kind {
                let _ = writeln!(s, "field defined by {defining} (in the variable x)");
            }
            s
        }
    };
    Ok(Outcome { status: 0, stdout, stderr: String::new() })
}

fn hall_cmd(format: Format, count: usize) -> Result<Outcome> {
    if count == 0 {
        return Err(DzError::Parse("count must be positive".into()));
    }
    let pairs = hall_pairs(count)?;
    let stdout = match format {
        Format::Json => json_lines(&pairs.iter().map(|p| p.to_json()).collect::<Vec<_>>()),
        Format::Text => {
            let mut s = String::new();
            for p in &pairs {
                let _ = writeln!(s, "a = {}  b = {}  a^3 - b^2 = {}", p.a, p.b, p.gap);
            }
            s
        }
    };
    Ok(Outcome { status: 0, stdout, stderr: String::new() })
}

fn pade_cmd(format: Format, a: &BigRat, b: &BigRat, n: usize, m: usize) -> Result<Outcome> {
    let f = weight_series(a, b, n + m + 1);
    let form = pade_form(&f, n, m)?;
    let stdout = match format {
        Format::Json => format!("{}\n", json!({ "n": n, "m": m, "p": form.p.to_strings(), "q": form.q.to_strings() })),
        Format::Text => format!("p = {}\nq = {}\n", form.p, form.q),
    };
    Ok(Outcome { status: 0, stdout, stderr: String::new() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> Outcome {
        run_args(std::iter::once("dzpairs").chain(args.iter().copied()))
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3").unwrap(), vec![3]);
        assert_eq!(parse_range("1-3,7").unwrap(), vec![1, 2, 3, 7]);
        assert!(parse_range("3-1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn construct_d() {
        let o = run_str(&["--format", "json", "construct", "--series", "D", "--s", "1", "--t", "1"]);
        assert_eq!(o.status, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(o.stdout.trim()).unwrap();
        assert_eq!(v["components"]["A"], json!(["-20", "0", "1"]));
    }

    #[test]
    fn construct_sweep_in_order() {
        let seq = run_str(&["--format", "json", "construct", "--series", "A", "--s", "1-3", "--t", "1-2", "--k", "1"]);
        let par = run_str(&["--format", "json", "--jobs", "3", "construct", "--series", "A", "--s", "1-3", "--t", "1-2", "--k", "1"]);
        assert_eq!(seq, par);
        assert_eq!(seq.stdout.lines().count(), 5);
    }

    #[test]
    fn statuses() {
        assert_eq!(run_str(&["construct", "--series", "D", "--s", "2", "--t", "2"]).status, 2);
        assert_eq!(run_str(&["construct", "--series", "Z", "--s", "1"]).status, 2);
        assert_eq!(run_str(&["frobnicate"]).status, 2);
        assert_eq!(run_str(&["construct", "--series", "SplitOrbit", "--k", "3", "--variant", "asymmetric"]).status, 1);
        assert_eq!(run_str(&["--help"]).status, 0);
    }

    #[test]
    fn hall_one() {
        let o = run_str(&["--format", "json", "hall", "--count", "1"]);
        assert_eq!(o.stdout.trim(), r#"{"a":"22","b":"100","gap":"648"}"#);
    }

    #[test]
    fn enumerate_and_catalog() {
        let o = run_str(&["--format", "json", "enumerate", "--passport", "3^10|2^15"]);
        let v: Value = serde_json::from_str(o.stdout.trim()).unwrap();
        assert_eq!(v["count"], json!(4));
        assert_eq!(run_str(&["verify", "--catalog", "K"]).status, 0);
        assert_eq!(run_str(&["verify", "--catalog", "relaxed_cubeS"]).status, 1);
        assert_eq!(run_str(&["catalog", "nonexistent"]).status, 2);
        assert!(run_str(&["catalog"]).stdout.contains("elkies_d"));
    }

    #[test]
    fn pair_text_roundtrip() {
        let (p, q) = parse_pair_text("1,0,1\n# comment\n-1/2,3\n").unwrap();
        assert_eq!(pair_text(&p, &q), "1,0,1\n-1/2,3\n");
        assert!(parse_pair_text("1,2\n").is_err());
        assert!(parse_pair_text("1,a\n2\n").is_err());
    }

    #[test]
    fn pade_negative_exponent() {
        let o = run_str(&["--format", "json", "pade", "--a", "-1/2", "--b", "1/3", "--n", "2", "--m", "1"]);
        assert_eq!(o.status, 0, "{}", o.stderr);
    }
}
