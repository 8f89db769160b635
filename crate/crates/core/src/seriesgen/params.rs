//! A single tagged parameter set for every constructor.

use std::collections::BTreeMap;
use std::fmt;

use super::*;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SeriesParams {
    A { s: usize, t: usize, k: usize },
    B1 { s: usize, t: usize, r: usize },
    B2 { s: usize, t: usize, r: usize },
    C { s: usize, t: usize, k: usize, l: usize },
    D { s: usize, t: usize },
    EEven { s: usize, t: usize, k: usize, l: usize, r: usize },
    EOdd { s: usize, t: usize, k: usize, l: usize, r: usize },
    F { k: usize, l: usize, m: usize },
    G { k: usize, m: usize },
    H { k: usize, l: usize },
    I { k: usize },
    J { k: usize },
    SelfDual { p: usize, q: usize },
    SplitOrbit { k: usize, variant: SplitVariant },
}

/// Tags accepted by [`SeriesParams::from_named`], with their integer keys.
pub const SERIES_KEYS: &[(&str, &[&str])] = &[
    ("A", &["s", "t", "k"]),
    ("B1", &["s", "t", "r"]),
    ("B2", &["s", "t", "r"]),
    ("C", &["s", "t", "k", "l"]),
    ("D", &["s", "t"]),
    ("E_even", &["s", "t", "k", "l", "r"]),
    ("E_odd", &["s", "t", "k", "l", "r"]),
    ("F", &["k", "l", "m"]),
    ("G", &["k", "m"]),
    ("H", &["k", "l"]),
    ("I", &["k"]),
    ("J", &["k"]),
    ("SelfDual", &["p", "q"]),
    ("SplitOrbit", &["k"]),
];

impl SeriesParams {
    /// Builds from a tag and named integers; `SplitOrbit` also needs a variant.
    pub fn from_named(
        tag: &str,
        values: &BTreeMap<String, usize>,
        variant: Option<SplitVariant>,
    ) -> Result<SeriesParams> {
        let canonical = match tag {
            "E4" | "E2" | "Eeven" | "E_even" => "E_even",
            "E3" | "E1" | "Eodd" | "E_odd" => "E_odd",
            "self-dual" | "selfdual" | "SelfDual" => "SelfDual",
            "split" | "split-orbit" | "SplitOrbit" => "SplitOrbit",
            other => other,
        };
        let keys = SERIES_KEYS
            .iter()
            .find(|(t, _)| *t == canonical)
            .map(|(_, k)| *k)
            .ok_or_else(|| DzError::Parse(format!("unknown series {tag:?}")))?;
        for k in values.keys() {
            if !keys.contains(&k.as_str()) {
                return Err(DzError::Parse(format!("series {canonical} takes no parameter {k:?}")));
            }
        }
        let get = |k: &str| {
            values
                .get(k)
                .copied()
                .ok_or_else(|| DzError::Parse(format!("series {canonical} needs parameter {k:?}")))
        };
        Ok(match canonical {
            "A" => SeriesParams::A { s: get("s")?, t: get("t")?, k: get("k")? },
            "B1" => SeriesParams::B1 { s: get("s")?, t: get("t")?, r: get("r")? },
            "B2" => SeriesParams::B2 { s: get("s")?, t: get("t")?, r: get("r")? },
            "C" => SeriesParams::C { s: get("s")?, t: get("t")?, k: get("k")?, l: get("l")? },
            "D" => SeriesParams::D { s: get("s")?, t: get("t")? },
            "E_even" => SeriesParams::EEven { s: get("s")?, t: get("t")?, k: get("k")?, l: get("l")?, r: get("r")? },
            "E_odd" => SeriesParams::EOdd { s: get("s")?, t: get("t")?, k: get("k")?, l: get("l")?, r: get("r")? },
            "F" => SeriesParams::F { k: get("k")?, l: get("l")?, m: get("m")? },
            "G" => SeriesParams::G { k: get("k")?, m: get("m")? },
            "H" => SeriesParams::H { k: get("k")?, l: get("l")? },
            "I" => SeriesParams::I { k: get("k")? },
            "J" => SeriesParams::J { k: get("k")? },
            "SelfDual" => SeriesParams::SelfDual { p: get("p")?, q: get("q")? },
            _ => SeriesParams::SplitOrbit {
                k: get("k")?,
                variant: variant.unwrap_or(SplitVariant::Symmetric),
            },
        })
    }
}

impl fmt::Display for SeriesParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SeriesParams::*;
        match self {
            A { s, t, k } => write!(f, "A(s={s},t={t},k={k})"),
            B1 { s, t, r } => write!(f, "B1(s={s},t={t},r={r})"),
            B2 { s, t, r } => write!(f, "B2(s={s},t={t},r={r})"),
            C { s, t, k, l } => write!(f, "C(s={s},t={t},k={k},l={l})"),
            D { s, t } => write!(f, "D(s={s},t={t})"),
            EEven { s, t, k, l, r } => write!(f, "E_even(s={s},t={t},k={k},l={l},r={r})"),
            EOdd { s, t, k, l, r } => write!(f, "E_odd(s={s},t={t},k={k},l={l},r={r})"),
            F { k, l, m } => write!(f, "F(k={k},l={l},m={m})"),
            G { k, m } => write!(f, "G(k={k},m={m})"),
            H { k, l } => write!(f, "H(k={k},l={l})"),
            I { k } => write!(f, "I(k={k})"),
            J { k } => write!(f, "J(k={k})"),
            SelfDual { p, q } => write!(f, "SelfDual(p={p},q={q})"),
            SplitOrbit { k, variant } => write!(f, "SplitOrbit(k={k},{variant})"),
        }
    }
}

/// Dispatches to the constructor named by the parameters.
pub fn construct(params: &SeriesParams) -> Result<DZPair> {
    use SeriesParams::*;
    match *params {
        A { s, t, k } => series_a(s, t, k),
        B1 { s, t, r } => series_b1(s, t, r),
        B2 { s, t, r } => series_b2(s, t, r),
        C { s, t, k, l } => series_c(s, t, k, l),
        D { s, t } => series_d(s, t),
        EEven { s, t, k, l, r } => series_e_even(s, t, k, l, r),
        EOdd { s, t, k, l, r } => series_e_odd(s, t, k, l, r),
        F { k, l, m } => series_f(k, l, m),
        G { k, m } => series_g(k, m),
        H { k, l } => series_h(k, l),
        I { k } => series_i(k),
        J { k } => series_j(k),
        SelfDual { p, q } => self_dual_series(p, q),
        SplitOrbit { k, variant } => split_orbit_belyi(k, variant),
    }
}
