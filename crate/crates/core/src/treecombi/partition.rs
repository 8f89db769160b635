use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{DzError, Result};

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(DzError::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part value → multiplicity.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Exponential notation, e.g. `3^2 1^2`.
    pub fn exponential(&self) -> String {
        self.counts()
            .iter()
            .rev()
            .map(|(v, c)| if *c == 1 { v.to_string() } else { format!("{v}^{c}") })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Accepts `7,1` and the shorthand `3^10` for ten threes.
impl FromStr for Partition {
    type Err = DzError;
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(DzError::Parse(format!("empty part in {s:?}")));
            }
            let (v, c) = match tok.split_once('^') {
                Some((v, c)) => (v, c),
                None => (tok, "1"),
            };
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| DzError::Parse(format!("bad part {tok:?}")))?;
            let c: usize = c
                .trim()
                .parse()
                .map_err(|_| DzError::Parse(format!("bad exponent {tok:?}")))?;
            parts.extend(std::iter::repeat_n(v, c));
        }
        Partition::new(parts)
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Partition {
    type Error = DzError;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Black and white vertex degrees of a common weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Passport {
    pub black: Partition,
    pub white: Partition,
}

impl Passport {
    pub fn new(black: Partition, white: Partition) -> Result<Self> {
        if black.weight() != white.weight() {
            return Err(DzError::Parse(format!(
                "passport weights differ: {} vs {}",
                black.weight(),
                white.weight()
            )));
        }
        Ok(Passport { black, white })
    }

    pub fn from_parts(black: Vec<usize>, white: Vec<usize>) -> Result<Self> {
        Passport::new(Partition::new(black)?, Partition::new(white)?)
    }

    pub fn weight(&self) -> usize {
        self.black.weight()
    }

    /// Number of edges of any tree with this passport.
    pub fn edge_count(&self) -> usize {
        self.black.len() + self.white.len() - 1
    }

    /// Minimal degree of P − Q: (n+1) − (p+q).
    pub fn required_deg_r(&self) -> i64 {
        self.weight() as i64 + 1 - (self.black.len() + self.white.len()) as i64
    }
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.black, self.white)
    }
}

impl FromStr for Passport {
    type Err = DzError;
    fn from_str(s: &str) -> Result<Self> {
        let (b, w) = s
            .split_once('|')
            .ok_or_else(|| DzError::Parse(format!("passport needs '|': {s:?}")))?;
        Passport::new(b.parse()?, w.parse()?)
    }
}

impl From<Passport> for String {
    fn from(p: Passport) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Passport {
    type Error = DzError;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_print() {
        let p: Passport = "7,1|2,2,2,1,1".parse().unwrap();
        assert_eq!(p.weight(), 8);
        assert_eq!(p.to_string(), "7,1|2,2,2,1,1");
        assert_eq!(p.edge_count(), 6);
        assert_eq!(p.required_deg_r(), 2);
        let q: Passport = "3^10|2^15".parse().unwrap();
        assert_eq!(q.black.len(), 10);
        assert_eq!(q.black.exponential(), "3^10");
        assert!("3,3|2".parse::<Passport>().is_err());
        assert!("3,0|3".parse::<Passport>().is_err());
        assert!("3,3".parse::<Passport>().is_err());
    }

    proptest! {
        #[test]
        fn roundtrip(b in prop::collection::vec(1usize..9, 1..8), w in prop::collection::vec(1usize..9, 1..8)) {
            let total: usize = b.iter().sum();
            let wsum: usize = w.iter().sum();
            let mut w = w;
            if wsum < total { w.push(total - wsum); }
            prop_assume!(w.iter().sum::<usize>() == total);
            let p = Passport::from_parts(b, w).unwrap();
            let back: Passport = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
