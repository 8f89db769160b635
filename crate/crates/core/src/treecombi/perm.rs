//! Permutation pairs of expanded maps: faces, duality, conjugacy.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::tree::{Color, Either, WeightedTree};
use crate::error::{DzError, Result};

/// A permutation of `0..n`, `p[x]` being the image of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(pub Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.0.iter().enumerate().position(|(i, &x)| i as u32 != x)
    }

    /// Disjoint cycles, each starting at its smallest point, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len()).collect())
            .expect("cycle lengths are positive")
    }

    /// From 1-based cycles on `n` points, e.g. `[[1,7,6,5,4,8,3]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut p: Vec<u32> = (0..n as u32).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x == 0 || x > n || used[x - 1] {
                    return Err(DzError::Parse(format!("bad cycle point {x}")));
                }
                used[x - 1] = true;
                p[x - 1] = (c[(i + 1) % c.len()] - 1) as u32;
            }
        }
        Ok(Perm(p))
    }
}

/// 1-based cycle notation without fixed points; `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", s.join(","))
            })
            .collect();
        if cs.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", cs.concat())
        }
    }
}

/// Rotations at black (`sigma`) and white (`alpha`) vertices of a map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermPair {
    pub sigma: Perm,
    pub alpha: Perm,
}

impl PermPair {
    pub fn new(sigma: Perm, alpha: Perm) -> Result<PermPair> {
        if sigma.len() != alpha.len() || sigma.is_empty() {
            return Err(DzError::Parse("permutations must act on the same nonempty set".into()));
        }
        Ok(PermPair { sigma, alpha })
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    /// Face permutation `(σα)⁻¹`.
    pub fn phi(&self) -> Perm {
        self.sigma.compose(&self.alpha).inverse()
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut q = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = q.pop_front() {
            for y in [self.sigma.apply(x), self.alpha.apply(x)] {
                if !seen[y] {
                    seen[y] = true;
                    q.push_back(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// V − E + F for the map; 2 on the sphere.
    pub fn euler_characteristic(&self) -> i64 {
        self.sigma.cycles().len() as i64 + self.alpha.cycles().len() as i64
            + self.phi().cycles().len() as i64
            - self.n() as i64
    }

    /// Faces become black vertices and white vertices are kept. Swapping two
    /// of the three permutations in `σαφ = 1` forces inverting all of them,
    /// so the dual is `(φ⁻¹, α⁻¹)`.
    pub fn dual(&self) -> PermPair {
        PermPair {
            sigma: self.phi().inverse(),
            alpha: self.alpha.inverse(),
        }
    }

    /// Simultaneous conjugacy: a relabeling carrying `self` onto `other`.
    pub fn find_isomorphism(&self, other: &PermPair) -> Option<Perm> {
        let n = self.n();
        if other.n() != n || !self.is_transitive() {
            return None;
        }
        'target: for t in 0..n {
            let mut map = vec![u32::MAX; n];
            map[0] = t as u32;
            let mut q = VecDeque::from([0usize]);
            while let Some(x) = q.pop_front() {
                let y = map[x] as usize;
                for (a, b) in [
                    (self.sigma.apply(x), other.sigma.apply(y)),
                    (self.alpha.apply(x), other.alpha.apply(y)),
                ] {
                    if map[a] == u32::MAX {
                        map[a] = b as u32;
                        q.push_back(a);
                    } else if map[a] as usize != b {
                        continue 'target;
                    }
                }
            }
            let mut hit = vec![false; n];
            for &m in &map {
                if hit[m as usize] {
                    continue 'target;
                }
                hit[m as usize] = true;
            }
            return Some(Perm(map));
        }
        None
    }

    pub fn is_isomorphic(&self, other: &PermPair) -> bool {
        self.find_isomorphism(other).is_some()
    }
}

/// Expands each weight-w edge into w parallel edges and reads off the
/// rotations. Labels follow a depth-first walk from the canonical dart; at
/// the black end the parallel labels run forward, at the white end backward.
pub fn expand_to_map(tree: &WeightedTree) -> PermPair {
    let nv = tree.vertex_count();
    let mut labels: Vec<Vec<Vec<u32>>> = (0..nv)
        .map(|v| vec![Vec::new(); tree.rotation(v).len()])
        .collect();
    let mut next = 0u32;
    let (root, start) = tree.canonical_dart();
    let mut stack = vec![(root, Either::Root(start))];
    // preorder: children of a vertex are labelled in rotation order
    let mut order = Vec::new();
    while let Some((v, from)) = stack.pop() {
        let ch = tree.ordered_children(v, from);
        order.push((v, ch.clone()));
        for &(u, _) in ch.iter().rev() {
            stack.push((u, Either::Parent(v)));
        }
    }
    let mut edge_labels = std::collections::HashMap::new();
    for (v, ch) in &order {
        for &(u, w) in ch {
            let ls: Vec<u32> = (next..next + w).collect();
            next += w;
            edge_labels.insert((*v.min(&u), *v.max(&u)), ls);
        }
    }
    for v in 0..nv {
        for (i, &(u, _)) in tree.rotation(v).iter().enumerate() {
            let mut ls = edge_labels[&(v.min(u), v.max(u))].clone();
            if tree.color(v) == Color::White {
                ls.reverse();
            }
            labels[v][i] = ls;
        }
    }
    let n = next as usize;
    let mut sigma = vec![0u32; n];
    let mut alpha = vec![0u32; n];
    for (v, ls) in labels.iter().enumerate() {
        let seq: Vec<u32> = ls.concat();
        let target = match tree.color(v) {
            Color::Black => &mut sigma,
            Color::White => &mut alpha,
        };
        for (i, &l) in seq.iter().enumerate() {
            target[l as usize] = seq[(i + 1) % seq.len()];
        }
    }
    PermPair {
        sigma: Perm(sigma),
        alpha: Perm(alpha),
    }
}

/// Face degrees: cycle type of `(σα)⁻¹`.
pub fn face_profile(pair: &PermPair) -> Partition {
    pair.phi().cycle_type()
}

/// Whether the expanded map is isomorphic to its dual.
pub fn is_self_dual(tree: &WeightedTree) -> bool {
    let m = expand_to_map(tree);
    m.is_isomorphic(&m.dual())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_three_edge() {
        let t: WeightedTree = "B(3W)".parse().unwrap();
        let m = expand_to_map(&t);
        assert_eq!(m.sigma.to_string(), "(1,2,3)");
        assert_eq!(m.alpha.to_string(), "(1,3,2)");
        assert_eq!(face_profile(&m).to_string(), "1,1,1");
        assert_eq!(m.euler_characteristic(), 2);
    }

    #[test]
    fn path_of_two_edges() {
        let t: WeightedTree = "W(1B,1B)".parse().unwrap();
        let m = expand_to_map(&t);
        assert!(m.sigma.is_identity());
        assert_eq!(m.alpha.to_string(), "(1,2)");
        assert!(!is_self_dual(&t));
    }

    #[test]
    fn single_edge_self_dual() {
        let t: WeightedTree = "B(1W)".parse().unwrap();
        assert_eq!(face_profile(&expand_to_map(&t)).to_string(), "1");
        assert!(is_self_dual(&t));
    }

    #[test]
    fn compose_and_invert() {
        let a = Perm::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.compose(&a).to_string(), "(1,3,2)");
        assert!(Perm::from_cycles(3, &[&[1, 1]]).is_err());
    }

    #[test]
    fn conjugacy_search() {
        let s = Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        let a = Perm::identity(4);
        let p = PermPair::new(s.clone(), a.clone()).unwrap();
        let s2 = Perm::from_cycles(4, &[&[2, 4, 1, 3]]).unwrap();
        let q = PermPair::new(s2, a).unwrap();
        let pi = p.find_isomorphism(&q).unwrap();
        assert_eq!(pi.compose(&p.sigma), q.sigma.compose(&pi));
        let r = PermPair::new(s.inverse().compose(&s.inverse()), Perm::identity(4)).unwrap();
        assert!(!p.is_isomorphic(&r));
    }
}
