//! Enumeration of all weighted plane trees with a given passport.
//!
//! Planted subtrees are generated per (root color, sub-multiset of degrees).
//! The weight of the edge above a planted subtree is forced: it equals the
//! degree sum of its root's color minus the degree sum of the other color.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::partition::Passport;
use super::tree::{Color, WeightedTree};
use crate::error::{DzError, Result};

/// Default cap on the passport weight accepted by [`enumerate_orbit`].
pub const DEFAULT_WEIGHT_BOUND: usize = 40;

type Counts = Vec<u8>;
type Codes = Rc<Vec<Vec<u32>>>;

struct Enumerator {
    bvals: Vec<usize>,
    wvals: Vec<usize>,
    planted: HashMap<(Color, Counts, Counts), Codes>,
    seqs: HashMap<(Color, Counts, Counts, usize), Codes>,
}

fn sum(vals: &[usize], c: &[u8]) -> usize {
    vals.iter().zip(c).map(|(v, &k)| v * k as usize).sum()
}

/// All sub-multisets, as count vectors.
fn submultisets(c: &[u8]) -> Vec<Counts> {
    let mut out = vec![Vec::with_capacity(c.len())];
    for &k in c {
        let mut next = Vec::with_capacity(out.len() * (k as usize + 1));
        for prefix in &out {
            for j in 0..=k {
                let mut p = prefix.clone();
                p.push(j);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn minus(a: &[u8], b: &[u8]) -> Counts {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl Enumerator {
    fn vals(&self, c: Color) -> &[usize] {
        match c {
            Color::Black => &self.bvals,
            Color::White => &self.wvals,
        }
    }

    /// Codes `[w, children…, 0]` of subtrees whose root has color `c`.
    fn planted(&mut self, c: Color, b: &Counts, w: &Counts) -> Codes {
        let key = (c, b.clone(), w.clone());
        if let Some(v) = self.planted.get(&key) {
            return v.clone();
        }
        let (bs, ws) = (sum(&self.bvals, b), sum(&self.wvals, w));
        let (own, other) = match c {
            Color::Black => (bs, ws),
            Color::White => (ws, bs),
        };
        let mut out = Vec::new();
        if own > other {
            let weight = own - other;
            let own_counts = match c {
                Color::Black => b,
                Color::White => w,
            };
            for i in 0..own_counts.len() {
                if own_counts[i] == 0 {
                    continue;
                }
                let deg = self.vals(c)[i];
                if deg < weight {
                    continue;
                }
                let mut rest = own_counts.clone();
                rest[i] -= 1;
                let (rb, rw) = match c {
                    Color::Black => (rest, w.clone()),
                    Color::White => (b.clone(), rest),
                };
                for body in self.seqs(c.other(), &rb, &rw, deg - weight).iter() {
                    let mut code = Vec::with_capacity(body.len() + 2);
                    code.push(weight as u32);
                    code.extend_from_slice(body);
                    code.push(0);
                    out.push(code);
                }
            }
        }
        let out = Rc::new(out);
        self.planted.insert(key, out.clone());
        out
    }

    /// Ordered sequences of planted subtrees with roots of color `c` that
    /// use exactly the multisets `b`, `w` and have edge weights summing to `need`.
    fn seqs(&mut self, c: Color, b: &Counts, w: &Counts, need: usize) -> Codes {
        let empty = b.iter().all(|&k| k == 0) && w.iter().all(|&k| k == 0);
        if empty || need == 0 {
            return Rc::new(if empty && need == 0 { vec![Vec::new()] } else { Vec::new() });
        }
        let key = (c, b.clone(), w.clone(), need);
        if let Some(v) = self.seqs.get(&key) {
            return v.clone();
        }
        let mut out = Vec::new();
        for b1 in submultisets(b) {
            for w1 in submultisets(w) {
                let own = match c {
                    Color::Black => &b1,
                    Color::White => &w1,
                };
                if own.iter().all(|&k| k == 0) {
                    continue;
                }
                let (bs, ws) = (sum(&self.bvals, &b1), sum(&self.wvals, &w1));
                let weight = match c {
                    Color::Black => bs as i64 - ws as i64,
                    Color::White => ws as i64 - bs as i64,
                };
                if weight < 1 || weight as usize > need {
                    continue;
                }
                let first = self.planted(c, &b1, &w1);
                if first.is_empty() {
                    continue;
                }
                let rest = self.seqs(c, &minus(b, &b1), &minus(w, &w1), need - weight as usize);
                for f in first.iter() {
                    for r in rest.iter() {
                        let mut code = f.clone();
                        code.extend_from_slice(r);
                        out.push(code);
                    }
                }
            }
        }
        let out = Rc::new(out);
        self.seqs.insert(key, out.clone());
        out
    }
}

fn split(p: &BTreeMap<usize, usize>) -> (Vec<usize>, Counts) {
    let vals: Vec<usize> = p.keys().copied().collect();
    let counts = p.values().map(|&c| c as u8).collect();
    (vals, counts)
}

/// All trees with the passport, up to orientation-preserving isomorphism,
/// in canonical order.
pub fn enumerate_orbit(passport: &Passport) -> Result<Vec<WeightedTree>> {
    enumerate_orbit_bounded(passport, DEFAULT_WEIGHT_BOUND)
}

pub fn enumerate_orbit_bounded(passport: &Passport, bound: usize) -> Result<Vec<WeightedTree>> {
    if passport.weight() > bound {
        return Err(DzError::Precondition(format!(
            "passport weight {} exceeds the enumeration bound {bound}",
            passport.weight()
        )));
    }
    if passport.black.counts().values().chain(passport.white.counts().values()).any(|&c| c > 255) {
        return Err(DzError::Precondition("too many equal parts".into()));
    }
    let (bvals, bcounts) = split(&passport.black.counts());
    let (wvals, wcounts) = split(&passport.white.counts());
    let mut e = Enumerator {
        bvals,
        wvals,
        planted: HashMap::new(),
        seqs: HashMap::new(),
    };
    // root at one black vertex of the largest degree
    let top = e.bvals.len() - 1;
    let deg = e.bvals[top];
    let mut rest = bcounts.clone();
    rest[top] -= 1;
    let bodies = e.seqs(Color::White, &rest, &wcounts, deg);
    let mut found: BTreeMap<Vec<u32>, WeightedTree> = BTreeMap::new();
    for body in bodies.iter() {
        let mut code = vec![0];
        code.extend_from_slice(body);
        let t = WeightedTree::from_code(&code)?;
        let canon = t.canonical_code();
        found.entry(canon).or_insert_with_key(|k| {
            WeightedTree::from_code(k).expect("canonical code is well formed")
        });
    }
    Ok(found.into_values().collect())
}

pub fn is_unitree(passport: &Passport) -> Result<bool> {
    Ok(enumerate_orbit(passport)?.len() == 1)
}
