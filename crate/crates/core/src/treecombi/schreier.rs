//! Group order by the deterministic Schreier–Sims algorithm.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::One;

use super::perm::{Perm, PermPair};
use crate::error::{DzError, Result};

/// Default cap on the number of points accepted by [`group_order`].
pub const DEFAULT_POINT_BOUND: usize = 64;

struct Level {
    base: usize,
    /// `trans[x]` maps the base point to `x`; entries are never replaced.
    trans: Vec<Option<Perm>>,
    orbit: Vec<usize>,
    tested: HashSet<(usize, usize)>,
}

struct Chain {
    n: usize,
    gens: Vec<Perm>,
    levels: Vec<Level>,
}

impl Chain {
    fn new_level(&mut self, base: usize) {
        let mut trans = vec![None; self.n];
        trans[base] = Some(Perm::identity(self.n));
        self.levels.push(Level {
            base,
            trans,
            orbit: vec![base],
            tested: HashSet::new(),
        });
    }

    /// Generators fixing the first `i` base points.
    fn level_gens(&self, i: usize) -> Vec<usize> {
        (0..self.gens.len())
            .filter(|&g| self.levels[..i].iter().all(|l| self.gens[g].apply(l.base) == l.base))
            .collect()
    }

    fn extend_orbit(&mut self, i: usize, gens: &[usize]) {
        let mut k = 0;
        while k < self.levels[i].orbit.len() {
            let b = self.levels[i].orbit[k];
            for &g in gens {
                let c = self.gens[g].apply(b);
                if self.levels[i].trans[c].is_none() {
                    let u = self.gens[g].compose(self.levels[i].trans[b].as_ref().unwrap());
                    self.levels[i].trans[c] = Some(u);
                    self.levels[i].orbit.push(c);
                }
            }
            k += 1;
        }
    }

    /// Residue of `g` and the level where sifting stopped.
    fn sift(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for i in from..self.levels.len() {
            let b = g.apply(self.levels[i].base);
            match &self.levels[i].trans[b] {
                None => return (g, i),
                Some(u) => g = u.inverse().compose(&g),
            }
        }
        (g, self.levels.len())
    }

    fn run(&mut self) {
        for g in 0..self.gens.len() {
            if self.levels.iter().all(|l| self.gens[g].apply(l.base) == l.base) {
                let p = self.gens[g].first_moved().expect("generators are not the identity");
                self.new_level(p);
            }
        }
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lv = i as usize;
            let gens = self.level_gens(lv);
            self.extend_orbit(lv, &gens);
            let mut added = None;
            'scan: for k in 0..self.levels[lv].orbit.len() {
                let b = self.levels[lv].orbit[k];
                for &s in &gens {
                    if !self.levels[lv].tested.insert((s, b)) {
                        continue;
                    }
                    let level = &self.levels[lv];
                    let ub = level.trans[b].as_ref().unwrap();
                    let usb = level.trans[self.gens[s].apply(b)].as_ref().unwrap();
                    let schreier = usb.inverse().compose(&self.gens[s].compose(ub));
                    let (h, at) = self.sift(schreier, lv + 1);
                    if !h.is_identity() {
                        added = Some((h, at));
                        break 'scan;
                    }
                }
            }
            match added {
                None => i -= 1,
                Some((h, at)) => {
                    if at == self.levels.len() {
                        let p = h.first_moved().expect("residue is not the identity");
                        self.new_level(p);
                    }
                    self.gens.push(h);
                    i = at as isize;
                }
            }
        }
    }

    fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }
}

/// Order of the group generated by `gens`, all acting on `0..n`.
pub fn order_of(n: usize, gens: &[Perm]) -> BigUint {
    let mut chain = Chain {
        n,
        gens: gens.iter().filter(|g| !g.is_identity()).cloned().collect(),
        levels: Vec::new(),
    };
    chain.run();
    chain.order()
}

/// Order of the monodromy group ⟨σ, α⟩.
pub fn group_order(pair: &PermPair) -> Result<BigUint> {
    group_order_bounded(pair, DEFAULT_POINT_BOUND)
}

pub fn group_order_bounded(pair: &PermPair, bound: usize) -> Result<BigUint> {
    if pair.n() > bound {
        return Err(DzError::Precondition(format!(
            "{} points exceed the group-order bound {bound}",
            pair.n()
        )));
    }
    Ok(order_of(pair.n(), &[pair.sigma.clone(), pair.alpha.clone()]))
}
