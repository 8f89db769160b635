//! Weighted bicolored plane trees.
//!
//! Text form (whitespace ignored):
//!
//! ```text
//! vertex := ('B' | 'W') [ '(' edge (',' edge)* ')' ]
//! edge   := weight vertex
//! ```
//!
//! The root lists all its edges in counterclockwise order; every other
//! vertex lists its children in the counterclockwise order that follows the
//! edge to its parent. `B(2W,2W,1W)` is a black vertex of degree 5 with
//! three white leaves.

use std::fmt;
use std::str::FromStr;

use super::partition::{Partition, Passport};
use crate::error::{DzError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    fn letter(self) -> char {
        match self {
            Color::Black => 'B',
            Color::White => 'W',
        }
    }

    fn token(self) -> u32 {
        match self {
            Color::Black => 0,
            Color::White => 1,
        }
    }
}

/// Darts are `(vertex, position in its rotation)`.
pub type Dart = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedTree {
    colors: Vec<Color>,
    /// Counterclockwise `(neighbour, weight)` at each vertex.
    rot: Vec<Vec<(usize, u32)>>,
}

impl WeightedTree {
    /// Builds and validates a tree from colors and rotations.
    pub fn from_rotations(colors: Vec<Color>, rot: Vec<Vec<(usize, u32)>>) -> Result<Self> {
        let t = WeightedTree { colors, rot };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let n = self.colors.len();
        if n < 2 || self.rot.len() != n {
            return Err(DzError::Parse("a tree needs at least one edge".into()));
        }
        let mut half_edges = 0;
        for (v, r) in self.rot.iter().enumerate() {
            for &(u, w) in r {
                if u >= n || w == 0 {
                    return Err(DzError::Parse("bad neighbour or zero weight".into()));
                }
                if self.colors[u] == self.colors[v] {
                    return Err(DzError::Parse("edge joins equal colors".into()));
                }
                if !self.rot[u].iter().any(|&(x, wx)| x == v && wx == w) {
                    return Err(DzError::Parse("asymmetric adjacency".into()));
                }
                half_edges += 1;
            }
        }
        if half_edges != 2 * (n - 1) {
            return Err(DzError::Parse("edge count is not |V|-1".into()));
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(u, _) in &self.rot[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(DzError::Parse("tree is disconnected".into()));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len() - 1
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn rotation(&self, v: usize) -> &[(usize, u32)] {
        &self.rot[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].iter().map(|&(_, w)| w as usize).sum()
    }

    pub fn total_weight(&self) -> usize {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == Color::Black)
            .map(|v| self.degree(v))
            .sum()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.colors.len()).flat_map(move |v| (0..self.rot[v].len()).map(move |i| (v, i)))
    }

    /// The same tree with every rotation reversed.
    pub fn mirror(&self) -> WeightedTree {
        WeightedTree {
            colors: self.colors.clone(),
            rot: self
                .rot
                .iter()
                .map(|r| r.iter().rev().cloned().collect())
                .collect(),
        }
    }

    /// Neighbours of `v` in rotation order, starting at position `start`
    /// (root) or just after the edge to `parent`, the parent edge omitted.
    pub(crate) fn ordered_children(&self, v: usize, from: Either) -> Vec<(usize, u32)> {
        let r = &self.rot[v];
        let k = r.len();
        match from {
            Either::Root(start) => (0..k).map(|j| r[(start + j) % k]).collect(),
            Either::Parent(p) => {
                let pos = r.iter().position(|&(u, _)| u == p).expect("parent is adjacent");
                (1..k).map(|j| r[(pos + j) % k]).collect()
            }
        }
    }

    /// Depth-first code from a dart: root color, then for each edge its
    /// weight on the way down and 0 on the way back.
    pub fn code_from(&self, dart: Dart) -> Vec<u32> {
        let mut out = vec![self.colors[dart.0].token()];
        self.code_walk(dart.0, Either::Root(dart.1), &mut out);
        out
    }

    fn code_walk(&self, v: usize, from: Either, out: &mut Vec<u32>) {
        for (u, w) in self.ordered_children(v, from) {
            out.push(w);
            self.code_walk(u, Either::Parent(v), out);
            out.push(0);
        }
    }

    /// Darts whose code is lexicographically minimal (always black darts).
    fn minimal_darts(&self) -> (Vec<u32>, Vec<Dart>) {
        let mut best: Option<Vec<u32>> = None;
        let mut at = Vec::new();
        for d in self.darts() {
            if self.colors[d.0] != Color::Black {
                continue;
            }
            let c = self.code_from(d);
            match &best {
                Some(b) if c > *b => {}
                Some(b) if c == *b => at.push(d),
                _ => {
                    best = Some(c);
                    at = vec![d];
                }
            }
        }
        (best.expect("every tree has a black dart"), at)
    }

    /// Isomorphism-invariant code.
    pub fn canonical_code(&self) -> Vec<u32> {
        self.minimal_darts().0
    }

    pub fn canonical_dart(&self) -> Dart {
        self.minimal_darts().1[0]
    }

    /// Rebuilds from a code produced by [`WeightedTree::code_from`].
    pub fn from_code(code: &[u32]) -> Result<Self> {
        let root_color = match code.first() {
            Some(0) => Color::Black,
            Some(1) => Color::White,
            _ => return Err(DzError::Parse("bad code header".into())),
        };
        let mut colors = vec![root_color];
        let mut rot: Vec<Vec<(usize, u32)>> = vec![Vec::new()];
        let mut stack = vec![0usize];
        for &tok in &code[1..] {
            let v = *stack.last().ok_or_else(|| DzError::Parse("unbalanced code".into()))?;
            if tok == 0 {
                stack.pop();
                if stack.is_empty() {
                    return Err(DzError::Parse("unbalanced code".into()));
                }
            } else {
                let u = colors.len();
                colors.push(colors[v].other());
                rot.push(vec![(v, tok)]);
                rot[v].push((u, tok));
                stack.push(u);
            }
        }
        if stack.len() != 1 {
            return Err(DzError::Parse("unbalanced code".into()));
        }
        WeightedTree::from_rotations(colors, rot)
    }

    /// The tree rebuilt from its canonical code, so equal trees compare equal.
    pub fn canonical(&self) -> WeightedTree {
        WeightedTree::from_code(&self.canonical_code()).expect("canonical code is well formed")
    }

    pub fn is_isomorphic(&self, other: &WeightedTree) -> bool {
        self.canonical_code() == other.canonical_code()
    }

    /// Number of orientation-preserving, color- and weight-preserving automorphisms.
    pub fn symmetry_order(&self) -> usize {
        self.minimal_darts().1.len()
    }

    pub fn passport(&self) -> Passport {
        let mut b = Vec::new();
        let mut w = Vec::new();
        for v in 0..self.colors.len() {
            match self.colors[v] {
                Color::Black => b.push(self.degree(v)),
                Color::White => w.push(self.degree(v)),
            }
        }
        Passport::new(
            Partition::new(b).expect("degrees are positive"),
            Partition::new(w).expect("degrees are positive"),
        )
        .expect("both colors count every edge weight once")
    }

    /// Serializes starting at a dart.
    pub fn to_string_from(&self, dart: Dart) -> String {
        let mut s = String::new();
        s.push(self.colors[dart.0].letter());
        self.write_children(dart.0, Either::Root(dart.1), &mut s);
        s
    }

    fn write_children(&self, v: usize, from: Either, s: &mut String) {
        let ch = self.ordered_children(v, from);
        if ch.is_empty() {
            return;
        }
        s.push('(');
        for (i, (u, w)) in ch.into_iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&w.to_string());
            s.push(self.colors[u].letter());
            self.write_children(u, Either::Parent(v), s);
        }
        s.push(')');
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum Either {
    Root(usize),
    Parent(usize),
}

pub fn passport_of(tree: &WeightedTree) -> Passport {
    tree.passport()
}

pub fn symmetry_order(tree: &WeightedTree) -> usize {
    tree.symmetry_order()
}

/// Canonical text form.
impl fmt::Display for WeightedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_from(self.canonical_dart()))
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    colors: Vec<Color>,
    rot: Vec<Vec<(usize, u32)>>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn vertex(&mut self, parent: Option<(usize, u32)>) -> Result<usize> {
        let c = match self.peek() {
            Some(b'B') => Color::Black,
            Some(b'W') => Color::White,
            _ => return Err(DzError::Parse(format!("expected B or W at {}", self.i))),
        };
        self.i += 1;
        let v = self.colors.len();
        self.colors.push(c);
        self.rot.push(Vec::new());
        if let Some((p, w)) = parent {
            if self.colors[p] == c {
                return Err(DzError::Parse("adjacent vertices share a color".into()));
            }
            self.rot[v].push((p, w));
        }
        if self.peek() == Some(b'(') {
            self.i += 1;
            loop {
                let start = self.i;
                while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                    self.i += 1;
                }
                let w: u32 = std::str::from_utf8(&self.s[start..self.i])
                    .unwrap()
                    .parse()
                    .map_err(|_| DzError::Parse(format!("expected weight at {start}")))?;
                if w == 0 {
                    return Err(DzError::Parse("zero weight".into()));
                }
                let u = self.vertex(Some((v, w)))?;
                self.rot[v].push((u, w));
                match self.peek() {
                    Some(b',') => self.i += 1,
                    Some(b')') => {
                        self.i += 1;
                        break;
                    }
                    _ => return Err(DzError::Parse(format!("expected ',' or ')' at {}", self.i))),
                }
            }
        }
        Ok(v)
    }
}

impl FromStr for WeightedTree {
    type Err = DzError;
    fn from_str(s: &str) -> Result<Self> {
        let compact: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut p = Parser {
            s: &compact,
            i: 0,
            colors: Vec::new(),
            rot: Vec::new(),
        };
        p.vertex(None)?;
        if p.i != compact.len() {
            return Err(DzError::Parse(format!("trailing input at {}", p.i)));
        }
        WeightedTree::from_rotations(p.colors, p.rot)
    }
}
