//! Twisted complexes of shifted projectives and their integral cohomology.
//!
//! An object `T_i[k]{d}` is the projective at node `i` placed in
//! cohomological degree `k` with q-shift `d`. A differential entry from
//! object `c` to object `r` is a [`PathElement`] from node `i_c` to node
//! `i_r`; it must raise `k` by one and satisfy
//! `q_degree(path) + d_r - d_c = 0`.

use crate::algebra::PathElement;
use crate::laurent::LaurentPoly;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Object {
    pub node: usize,
    pub k: i64,
    pub d: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedComplex {
    pub nodes: usize,
    pub objects: Vec<Object>,
    /// `(row, col) -> entry`, a map from `objects[col]` to `objects[row]`.
    pub entries: BTreeMap<(usize, usize), PathElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    Ok,
    WrongNodes { row: usize, col: usize },
    WrongDegree { row: usize, col: usize },
    NotSquareZero { row: usize, col: usize },
}

impl TwistedComplex {
    pub fn new(nodes: usize) -> Self {
        TwistedComplex {
            nodes,
            objects: Vec::new(),
            entries: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, obj: Object) -> usize {
        self.objects.push(obj);
        self.objects.len() - 1
    }

    /// Adds `x` to the entry `col -> row`.
    pub fn add_entry(&mut self, row: usize, col: usize, x: &PathElement) {
        let e = self.entries.entry((row, col)).or_default();
        e.add_element(x, 1);
        if e.is_zero() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<&PathElement> {
        self.entries.get(&(row, col))
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Checks node compatibility, the degree constraint and `Q^2 = 0`,
    /// reporting the first failing entry.
    pub fn validate(&self) -> Validation {
        for (&(r, c), x) in &self.entries {
            let (src, tgt) = (self.objects[c], self.objects[r]);
            for (p, _) in x.terms() {
                if p.source != src.node || p.target() != tgt.node {
                    return Validation::WrongNodes { row: r, col: c };
                }
                if tgt.k != src.k + 1 || p.q_degree() + tgt.d - src.d != 0 {
                    return Validation::WrongDegree { row: r, col: c };
                }
            }
        }
        let mut square: BTreeMap<(usize, usize), PathElement> = BTreeMap::new();
        // entries are keyed (row, col); Q^2 at (r, c) sums Q(r, m) Q(m, c)
        let mut by_row: BTreeMap<usize, Vec<(usize, &PathElement)>> = BTreeMap::new();
        for (&(r, c), x) in &self.entries {
            by_row.entry(r).or_default().push((c, x));
        }
        for (&(r, m), x) in &self.entries {
            if let Some(into_m) = by_row.get(&m) {
                for &(c, y) in into_m {
                    let prod = x.compose(y);
                    square.entry((r, c)).or_default().add_element(&prod, 1);
                }
            }
        }
        for ((r, c), x) in square {
            if !x.is_zero() {
                return Validation::NotSquareZero { row: r, col: c };
            }
        }
        Validation::Ok
    }

    /// Cancels every unit entry `±e_i` by Gaussian elimination, repeating
    /// until no unit entry is left.
    pub fn gaussian_eliminate(&self) -> TwistedComplex {
        let mut cur = self.clone();
        while let Some((&(y, x), u)) = cur.entries.iter().find_map(|(key, e)| e.as_unit().map(|u| (key, u))) {
            cur = cur.cancel(x, y, u);
        }
        cur
    }

    /// Removes objects `x` and `y` joined by the unit entry `u·e: x -> y`,
    /// correcting the remaining differential by the zigzag through them.
    fn cancel(&self, x: usize, y: usize, u: i64) -> TwistedComplex {
        let mut into_x: Vec<(usize, &PathElement)> = Vec::new();
        let mut from_y: Vec<(usize, &PathElement)> = Vec::new();
        for (&(r, c), e) in &self.entries {
            if c == x && r != y {
                into_x.push((r, e));
            }
            if r == y && c != x {
                from_y.push((c, e));
            }
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != x && i != y).collect();
        let mut index = vec![usize::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let mut out = TwistedComplex::new(self.nodes);
        for &old in &keep {
            out.push(self.objects[old]);
        }
        for (&(r, c), e) in &self.entries {
            if index[r] != usize::MAX && index[c] != usize::MAX {
                out.add_entry(index[r], index[c], e);
            }
        }
        // Q'(w <- v) = Q(w <- v) - Q(w <- x) u^{-1} Q(y <- v)
        for &(w, wx) in &into_x {
            for &(v, yv) in &from_y {
                if index[w] == usize::MAX || index[v] == usize::MAX {
                    continue;
                }
                let mut corr = PathElement::zero();
                corr.add_element(&wx.compose(yv), -u);
                out.add_entry(index[w], index[v], &corr);
            }
        }
        out
    }

    /// Hom into the simple module at node `j`: one generator per object at
    /// `j`; maps are the coefficients of `e_j` since longer paths act by zero.
    pub fn hom_to_simple(&self, j: usize) -> CochainComplex {
        let gens: Vec<usize> = (0..self.len()).filter(|&i| self.objects[i].node == j).collect();
        let mut pos = vec![usize::MAX; self.len()];
        for (g, &i) in gens.iter().enumerate() {
            pos[i] = g;
        }
        let mut cc = CochainComplex {
            degrees: gens.iter().map(|&i| (self.objects[i].k, self.objects[i].d)).collect(),
            entries: BTreeMap::new(),
        };
        for (&(r, c), e) in &self.entries {
            if pos[r] == usize::MAX || pos[c] == usize::MAX {
                continue;
            }
            let v = e.idempotent_coeff(j);
            if v != 0 {
                cc.entries.insert((pos[r], pos[c]), v);
            }
        }
        cc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("chain map entry {row} <- {col} does not have degree (0, 0)")]
    Degree { row: usize, col: usize },
    #[error("chain map entry {row} <- {col} has mismatched nodes")]
    Nodes { row: usize, col: usize },
    #[error("complexes live over different algebras")]
    Algebra,
}

/// A map of twisted complexes of degree `(0, 0)`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: TwistedComplex,
    pub target: TwistedComplex,
    /// `(target object, source object) -> entry`.
    pub entries: BTreeMap<(usize, usize), PathElement>,
}

/// Mapping cone `source[1] ⊕ target` with differential `[[-Q_s, 0], [f, Q_t]]`.
pub fn cone(f: &ChainMap) -> Result<TwistedComplex, ConeError> {
    if f.source.nodes != f.target.nodes {
        return Err(ConeError::Algebra);
    }
    for (&(r, c), x) in &f.entries {
        let (s, t) = (f.source.objects[c], f.target.objects[r]);
        for (p, _) in x.terms() {
            if p.source != s.node || p.target() != t.node {
                return Err(ConeError::Nodes { row: r, col: c });
            }
            if t.k != s.k || p.q_degree() + t.d - s.d != 0 {
                return Err(ConeError::Degree { row: r, col: c });
            }
        }
    }
    let ns = f.source.len();
    let mut out = TwistedComplex::new(f.source.nodes);
    for o in &f.source.objects {
        out.push(Object { k: o.k - 1, ..*o });
    }
    for o in &f.target.objects {
        out.push(*o);
    }
    for (&(r, c), x) in &f.source.entries {
        let mut neg = PathElement::zero();
        neg.add_element(x, -1);
        out.add_entry(r, c, &neg);
    }
    for (&(r, c), x) in &f.target.entries {
        out.add_entry(ns + r, ns + c, x);
    }
    for (&(r, c), x) in &f.entries {
        out.add_entry(ns + r, c, x);
    }
    Ok(out)
}

/// A cochain complex of free abelian groups, one generator per entry of
/// `degrees` with bidegree `(k, d)`. Maps raise `k` by one and keep `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    pub degrees: Vec<(i64, i64)>,
    /// `(row, col) -> coefficient` of the map from generator `col` to `row`.
    pub entries: BTreeMap<(usize, usize), i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Group {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl Group {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Finitely supported groups indexed by a bidegree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigradedGroups {
    pub groups: BTreeMap<(i64, i64), Group>,
}

impl BigradedGroups {
    pub fn insert(&mut self, at: (i64, i64), g: Group) {
        if !g.is_trivial() {
            self.groups.insert(at, g);
        }
    }

    pub fn total_rank(&self) -> usize {
        self.groups.values().map(|g| g.rank).sum()
    }

    /// Rows `[a, b, rank, [torsion]]` sorted by bidegree.
    pub fn rows(&self) -> Vec<(i64, i64, usize, Vec<i64>)> {
        self.groups
            .iter()
            .map(|(&(a, b), g)| (a, b, g.rank, g.torsion.clone()))
            .collect()
    }

    pub fn map_degrees(&self, f: impl Fn(i64, i64) -> (i64, i64)) -> BigradedGroups {
        let mut out = BigradedGroups::default();
        for (&(a, b), g) in &self.groups {
            out.insert(f(a, b), g.clone());
        }
        out
    }

    /// Support as a list of `(bidegree, rank)` with all torsion dropped.
    pub fn free_support(&self) -> Vec<((i64, i64), usize)> {
        self.groups
            .iter()
            .filter(|(_, g)| g.rank > 0)
            .map(|(&at, g)| (at, g.rank))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("differential does not square to zero at generator {0}")]
    NotSquareZero(usize),
    #[error("map from generator {col} to {row} does not have degree (1, 0)")]
    Degree { row: usize, col: usize },
}

/// Invariant factors (nonzero diagonal of the Smith normal form).
pub fn invariant_factors(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for i in t..rows {
                        m[i][j] -= q * m[i][t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // divisibility: p must divide the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            m[t][j] += m[i][j];
                        }
                        continue;
                    }
                }
            }
            // move the smallest entry of row t / column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if m[i][t] != 0 && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if m[t][j] != 0 && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        out.push(m[t][t].abs());
        t += 1;
    }
    out
}

fn rank_mod_p(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let inv = |a: i64| -> i64 {
        // p is prime: a^(p-2)
        let mut r = 1i64;
        for _ in 0..p - 2 {
            r = r * a % p;
        }
        r
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let s = inv(m[rank][c]);
        for j in 0..cols {
            m[rank][j] = m[rank][j] * s % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for j in 0..cols {
                    m[r][j] = (m[r][j] - f * m[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

impl CochainComplex {
    fn check(&self) -> Result<(), CohomologyError> {
        for &(r, c) in self.entries.keys() {
            let (a, b) = (self.degrees[c], self.degrees[r]);
            if b.0 != a.0 + 1 || b.1 != a.1 {
                return Err(CohomologyError::Degree { row: r, col: c });
            }
        }
        let mut sq: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (&(r, m), &x) in &self.entries {
            for (&(m2, c), &y) in &self.entries {
                if m2 == m {
                    *sq.entry((r, c)).or_insert(0) += x * y;
                }
            }
        }
        match sq.into_iter().find(|&(_, v)| v != 0) {
            Some(((_, c), _)) => Err(CohomologyError::NotSquareZero(c)),
            None => Ok(()),
        }
    }

    /// Generators of each bidegree, and the matrix of the map from degree
    /// `(k, d)` to `(k + 1, d)`.
    fn blocks(&self) -> (BTreeMap<(i64, i64), Vec<usize>>, impl Fn(&[usize], &[usize]) -> Vec<Vec<i64>> + '_) {
        let mut by_deg: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
        for (g, &deg) in self.degrees.iter().enumerate() {
            by_deg.entry(deg).or_default().push(g);
        }
        let matrix = move |src: &[usize], tgt: &[usize]| -> Vec<Vec<i64>> {
            tgt.iter()
                .map(|&r| src.iter().map(|&c| self.entries.get(&(r, c)).copied().unwrap_or(0)).collect())
                .collect()
        };
        (by_deg, matrix)
    }

    /// Integral cohomology, free rank and torsion per bidegree, by Smith
    /// normal form of each map.
    pub fn cohomology(&self) -> Result<BigradedGroups, CohomologyError> {
        self.check()?;
        let (by_deg, matrix) = self.blocks();
        let empty: Vec<usize> = Vec::new();
        let factors = |(k, d): (i64, i64)| -> Vec<i128> {
            let src = by_deg.get(&(k, d)).unwrap_or(&empty);
            let tgt = by_deg.get(&(k + 1, d)).unwrap_or(&empty);
            if src.is_empty() || tgt.is_empty() {
                return Vec::new();
            }
            let m = matrix(src, tgt);
            invariant_factors(m.into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect())
        };
        let mut out = BigradedGroups::default();
        for (&(k, d), gens) in &by_deg {
            let outgoing = factors((k, d)).len();
            let incoming = factors((k - 1, d));
            let rank = gens.len() - outgoing - incoming.len();
            let torsion: Vec<i64> = incoming.into_iter().filter(|&f| f > 1).map(|f| f as i64).collect();
            out.insert((k, d), Group { rank, torsion });
        }
        Ok(out)
    }

    /// Dimensions of cohomology over the field with `p` elements.
    pub fn cohomology_mod_p(&self, p: i64) -> Result<BTreeMap<(i64, i64), usize>, CohomologyError> {
        self.check()?;
        let (by_deg, matrix) = self.blocks();
        let empty: Vec<usize> = Vec::new();
        let rank = |(k, d): (i64, i64)| -> usize {
            let src = by_deg.get(&(k, d)).unwrap_or(&empty);
            let tgt = by_deg.get(&(k + 1, d)).unwrap_or(&empty);
            if src.is_empty() || tgt.is_empty() {
                return 0;
            }
            rank_mod_p(matrix(src, tgt), p)
        };
        let mut out = BTreeMap::new();
        for (&(k, d), gens) in &by_deg {
            let dim = gens.len() - rank((k, d)) - rank((k - 1, d));
            if dim > 0 {
                out.insert((k, d), dim);
            }
        }
        Ok(out)
    }
}

/// `Σ (-1)^k rank(k, d) q^d`, torsion ignored.
pub fn euler_characteristic(g: &BigradedGroups) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (&(k, d), grp) in &g.groups {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        out.add_term(d, sign * grp.rank as i64);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_algebra, Path};

    fn unit(nodes: usize, i: usize) -> PathElement {
        PathElement::from_path(Path::idempotent(nodes, i), 1)
    }

    #[test]
    fn validate_small() {
        let mut c = TwistedComplex::new(4);
        c.push(Object { node: 2, k: 0, d: 0 });
        assert_eq!(c.validate(), Validation::Ok);
        c.push(Object { node: 2, k: 1, d: 0 });
        c.add_entry(1, 0, &unit(4, 2));
        assert_eq!(c.validate(), Validation::Ok);
        let mut bad = c.clone();
        bad.objects[1].k = 2;
        assert_eq!(bad.validate(), Validation::WrongDegree { row: 1, col: 0 });
    }

    #[test]
    fn square_zero_detects_failure() {
        let alg = make_algebra(4).unwrap();
        let mut c = TwistedComplex::new(4);
        c.push(Object { node: 0, k: 0, d: 0 });
        c.push(Object { node: 1, k: 1, d: 0 });
        c.push(Object { node: 2, k: 2, d: 0 });
        c.add_entry(1, 0, &PathElement::from_path(alg.a(0), 1));
        c.add_entry(2, 1, &PathElement::from_path(alg.a(1), 1));
        assert_eq!(c.validate(), Validation::NotSquareZero { row: 2, col: 0 });
        // a then b closes by the relations
        let mut ok = TwistedComplex::new(4);
        ok.push(Object { node: 0, k: 0, d: 0 });
        ok.push(Object { node: 1, k: 1, d: 0 });
        ok.push(Object { node: 0, k: 2, d: -1 });
        ok.add_entry(1, 0, &PathElement::from_path(alg.a(0), 1));
        ok.add_entry(2, 1, &PathElement::from_path(alg.b(0), 1));
        assert_eq!(ok.validate(), Validation::Ok);
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let mut x = TwistedComplex::new(4);
        x.push(Object { node: 2, k: 0, d: 0 });
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), unit(4, 2));
        let f = ChainMap { source: x.clone(), target: x.clone(), entries };
        let c = cone(&f).unwrap();
        assert_eq!(c.validate(), Validation::Ok);
        assert!(c.hom_to_simple(2).cohomology().unwrap().groups.is_empty());
        assert!(c.gaussian_eliminate().is_empty());
        let zero = ChainMap { source: x.clone(), target: x, entries: BTreeMap::new() };
        assert_eq!(cone(&zero).unwrap().len(), 2);
    }

    #[test]
    fn cone_over_arrow() {
        let alg = make_algebra(4).unwrap();
        let mut s = TwistedComplex::new(4);
        s.push(Object { node: 1, k: 0, d: 0 });
        let mut t = TwistedComplex::new(4);
        t.push(Object { node: 2, k: 0, d: 0 });
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), PathElement::from_path(alg.a(1), 1));
        let c = cone(&ChainMap { source: s, target: t, entries }).unwrap();
        assert_eq!(c.validate(), Validation::Ok);
        assert_eq!(c.objects[0].k, -1);
        let h = c.hom_to_simple(2).cohomology().unwrap();
        assert_eq!(h.free_support(), vec![((0, 0), 1)]);
    }

    #[test]
    fn smith_torsion() {
        let cc = CochainComplex {
            degrees: vec![(0, 0), (1, 0)],
            entries: [((1, 0), 2)].into_iter().collect(),
        };
        let h = cc.cohomology().unwrap();
        assert_eq!(h.rows(), vec![(1, 0, 0, vec![2])]);
        assert_eq!(invariant_factors(vec![vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(invariant_factors(vec![vec![4, 6]]), vec![2]);
        assert_eq!(cc.cohomology_mod_p(2).unwrap().len(), 2);
        assert!(cc.cohomology_mod_p(3).unwrap().is_empty());
    }

    #[test]
    fn zero_differential() {
        let cc = CochainComplex {
            degrees: vec![(0, 0), (2, -2), (3, -3)],
            entries: BTreeMap::new(),
        };
        let h = cc.cohomology().unwrap();
        assert_eq!(h.total_rank(), 3);
        let chi = euler_characteristic(&h);
        let want: LaurentPoly = [(0, 1), (-2, 1), (-3, -1)].into_iter().collect();
        assert_eq!(chi, want);
        assert!(euler_characteristic(&BigradedGroups::default()).is_zero());
    }

    #[test]
    fn rejects_non_square_zero() {
        let cc = CochainComplex {
            degrees: vec![(0, 0), (1, 0), (2, 0)],
            entries: [((1, 0), 1), ((2, 1), 1)].into_iter().collect(),
        };
        assert_eq!(cc.cohomology(), Err(CohomologyError::NotSquareZero(0)));
    }
}
