//! The path algebra of the cyclic quiver with relations `ab = 0 = ba`.
//!
//! Nodes `0..n` sit on a cycle. The arrow `a` goes from node `i` to node
//! `i + 1` and has q-degree 0, the arrow `b` goes from node `i + 1` to node
//! `i` and has q-degree 1. Since any product mixing `a` and `b` vanishes, a
//! basis of the algebra is given by the idempotents and the pure runs
//! `a^L`, `b^L` starting at each node.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("the cyclic quiver needs at least 2 nodes, got {0}")]
    TooFewNodes(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathAlgebra {
    n: usize,
}

pub fn make_algebra(n: usize) -> Result<PathAlgebra, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::TooFewNodes(n));
    }
    Ok(PathAlgebra { n })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RunKind {
    Idempotent,
    A,
    B,
}

/// A basis element: the idempotent at `source` or a pure run of `length`
/// arrows leaving `source`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    pub kind: RunKind,
    pub source: usize,
    pub length: usize,
    pub nodes: usize,
}

impl Path {
    pub fn idempotent(nodes: usize, i: usize) -> Self {
        Path {
            kind: RunKind::Idempotent,
            source: i % nodes,
            length: 0,
            nodes,
        }
    }

    /// `a`-run from `source`, landing at `source + length`.
    pub fn a_run(nodes: usize, source: usize, length: usize) -> Self {
        if length == 0 {
            return Path::idempotent(nodes, source);
        }
        Path {
            kind: RunKind::A,
            source: source % nodes,
            length,
            nodes,
        }
    }

    /// `b`-run from `source`, landing at `source - length`.
    pub fn b_run(nodes: usize, source: usize, length: usize) -> Self {
        if length == 0 {
            return Path::idempotent(nodes, source);
        }
        Path {
            kind: RunKind::B,
            source: source % nodes,
            length,
            nodes,
        }
    }

    pub fn target(&self) -> usize {
        let n = self.nodes as i64;
        let s = self.source as i64;
        let l = self.length as i64;
        let t = match self.kind {
            RunKind::Idempotent => s,
            RunKind::A => s + l,
            RunKind::B => s - l,
        };
        t.rem_euclid(n) as usize
    }

    pub fn q_degree(&self) -> i64 {
        match self.kind {
            RunKind::B => self.length as i64,
            _ => 0,
        }
    }

    /// Completed trips around the cycle.
    pub fn winding(&self) -> usize {
        self.length / self.nodes
    }

    pub fn is_idempotent(&self) -> bool {
        self.kind == RunKind::Idempotent
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RunKind::Idempotent => write!(f, "e{}", self.source),
            RunKind::A => write!(f, "a^{}[{}->{}]", self.length, self.source, self.target()),
            RunKind::B => write!(f, "b^{}[{}->{}]", self.length, self.source, self.target()),
        }
    }
}

/// `p ∘ q`: first `q`, then `p`. Zero on a node mismatch or when an `a`
/// meets a `b`.
pub fn compose(p: &Path, q: &Path) -> Option<Path> {
    if q.target() != p.source || p.nodes != q.nodes {
        return None;
    }
    match (p.kind, q.kind) {
        (RunKind::Idempotent, _) => Some(*q),
        (_, RunKind::Idempotent) => Some(*p),
        (RunKind::A, RunKind::A) => Some(Path::a_run(p.nodes, q.source, p.length + q.length)),
        (RunKind::B, RunKind::B) => Some(Path::b_run(p.nodes, q.source, p.length + q.length)),
        _ => None,
    }
}

/// An integer combination of basis paths.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathElement {
    terms: BTreeMap<Path, i64>,
}

impl PathElement {
    pub fn zero() -> Self {
        PathElement::default()
    }

    pub fn from_path(p: Path, coeff: i64) -> Self {
        let mut out = PathElement::zero();
        out.add(p, coeff);
        out
    }

    pub fn add(&mut self, p: Path, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(p).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn add_element(&mut self, other: &PathElement, scale: i64) {
        for (p, c) in other.terms() {
            self.add(p, c * scale);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Path, i64)> + '_ {
        self.terms.iter().map(|(&p, &c)| (p, c))
    }

    /// Coefficient of the idempotent at `node`.
    pub fn idempotent_coeff(&self, node: usize) -> i64 {
        self.terms
            .iter()
            .find(|(p, _)| p.is_idempotent() && p.source == node)
            .map(|(_, &c)| c)
            .unwrap_or(0)
    }

    /// If this is `±e_i`, returns the sign.
    pub fn as_unit(&self) -> Option<i64> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some((p, &c)), None) if p.is_idempotent() && (c == 1 || c == -1) => Some(c),
            _ => None,
        }
    }

    pub fn compose(&self, q: &PathElement) -> PathElement {
        let mut out = PathElement::zero();
        for (p1, c1) in self.terms() {
            for (p2, c2) in q.terms() {
                if let Some(p) = compose(&p1, &p2) {
                    out.add(p, c1 * c2);
                }
            }
        }
        out
    }
}

impl fmt::Display for PathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(p, c)| if c == 1 { p.to_string() } else { format!("{}*{}", c, p) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl PathAlgebra {
    pub fn nodes(&self) -> usize {
        self.n
    }

    pub fn e(&self, i: usize) -> Path {
        Path::idempotent(self.n, i)
    }

    /// The single arrow `a_{i+1,i}`.
    pub fn a(&self, i: usize) -> Path {
        Path::a_run(self.n, i, 1)
    }

    /// The single arrow `b_{i,i+1}`, leaving node `i + 1`.
    pub fn b(&self, i: usize) -> Path {
        Path::b_run(self.n, i + 1, 1)
    }

    /// All basis paths from `i` to `j` completing at most `max_winding`
    /// trips around the cycle, in order of length.
    pub fn hom_basis(&self, i: usize, j: usize, max_winding: usize) -> Vec<Path> {
        let n = self.n;
        let mut out = Vec::new();
        if i == j {
            out.push(self.e(i));
        }
        let max_len = (max_winding + 1) * n - 1;
        for len in 1..=max_len {
            for p in [Path::a_run(n, i, len), Path::b_run(n, i, len)] {
                if p.target() == j {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Rank of `Hom(T_i, I_j)`: the simple module at `j` only sees `e_j`.
    pub fn hom_to_simple_basis(&self, i: usize, j: usize) -> usize {
        usize::from(i == j)
    }
}
