//! Braid words, plat presentations and the planar diagram of a plat closure.
//!
//! A word on `n` strands is drawn top to bottom: letter `t` sits between
//! levels `t` and `t + 1`. Caps close positions `(0,1), (2,3), ...` above
//! level 0 and cups close the same pairs below the last level.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// One braid generator `σ_k^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub sign: i8,
}

impl Letter {
    pub fn new(gen: usize, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Letter { gen, sign }
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.gen, -self.sign)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.sign > 0 { 's' } else { 'S' };
        write!(f, "{}{}", c, self.gen)
    }
}

/// Serialized as `{"strands": n, "word": ["s2", "S1", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "WordJson", try_from = "WordJson")]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<Letter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing ':' after the strand count")]
    MissingColon,
    #[error("strand count {0:?} is not a positive integer")]
    BadStrandCount(String),
    #[error("strand count {0} is odd; plat closures need an even number of strands")]
    OddStrandCount(usize),
    #[error("token {position} ({token:?}) is not of the form s<k> or S<k>")]
    MalformedToken { position: usize, token: String },
    #[error("token {position} ({token:?}) uses generator {gen}, outside 1..={max}")]
    IndexOutOfRange {
        position: usize,
        token: String,
        gen: usize,
        max: usize,
    },
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Self {
        BraidWord { strands, letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The mirror link: every crossing switched, order kept.
    pub fn mirror(&self) -> Self {
        BraidWord::new(
            self.strands,
            self.letters.iter().map(|l| l.inverse()).collect(),
        )
    }

    /// Sum of letter signs. This is the writhe of the diagram only when every
    /// letter's sign agrees with its oriented crossing sign.
    pub fn letter_writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    pub fn tokens(&self) -> Vec<String> {
        self.letters.iter().map(|l| l.to_string()).collect()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {}", l)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    strands: usize,
    word: Vec<String>,
}

impl From<BraidWord> for WordJson {
    fn from(b: BraidWord) -> Self {
        WordJson {
            strands: b.strands,
            word: b.tokens(),
        }
    }
}

impl TryFrom<WordJson> for BraidWord {
    type Error = ParseError;

    fn try_from(w: WordJson) -> Result<Self, Self::Error> {
        parse_braid_word(&format!("{}: {}", w.strands, w.word.join(" ")))
    }
}

impl std::str::FromStr for BraidWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid_word(s)
    }
}

/// Parses `<n> ":" (s<k> | S<k>)*`. Token positions in errors are 1-based.
pub fn parse_braid_word(text: &str) -> Result<BraidWord, ParseError> {
    let (head, tail) = text.split_once(':').ok_or(ParseError::MissingColon)?;
    let head = head.trim();
    let strands: usize = head
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| ParseError::BadStrandCount(head.to_string()))?;
    if !strands.is_multiple_of(2) {
        return Err(ParseError::OddStrandCount(strands));
    }
    let mut letters = Vec::new();
    for (i, tok) in tail.split_whitespace().enumerate() {
        let position = i + 1;
        let malformed = || ParseError::MalformedToken {
            position,
            token: tok.to_string(),
        };
        let mut chars = tok.chars();
        let sign = match chars.next() {
            Some('s') => 1,
            Some('S') => -1,
            _ => return Err(malformed()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let gen: usize = digits.parse().map_err(|_| malformed())?;
        if gen == 0 || gen >= strands {
            return Err(ParseError::IndexOutOfRange {
                position,
                token: tok.to_string(),
                gen,
                max: strands - 1,
            });
        }
        letters.push(Letter::new(gen, sign));
    }
    Ok(BraidWord::new(strands, letters))
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PlatError {
    #[error("marked pair {pair} does not exist on {strands} strands")]
    MarkedPairOutOfRange { pair: usize, strands: usize },
}

/// A braid word together with the cup pair erased for reduced homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlatPresentation {
    pub braid: BraidWord,
    pub marked_pair: usize,
}

impl PlatPresentation {
    pub fn new(braid: BraidWord, marked_pair: usize) -> Result<Self, PlatError> {
        if marked_pair == 0 || marked_pair > braid.strands / 2 {
            return Err(PlatError::MarkedPairOutOfRange {
                pair: marked_pair,
                strands: braid.strands,
            });
        }
        Ok(PlatPresentation { braid, marked_pair })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingCounts {
    pub n_plus: usize,
    pub n_minus: usize,
}

impl CrossingCounts {
    pub fn writhe(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn total(&self) -> usize {
        self.n_plus + self.n_minus
    }
}

/// Counts letters by their sign.
pub fn letter_counts(b: &BraidWord) -> CrossingCounts {
    let n_plus = b.letters.iter().filter(|l| l.sign > 0).count();
    CrossingCounts {
        n_plus,
        n_minus: b.len() - n_plus,
    }
}

/// Counts crossings of the oriented plat closure by their oriented sign.
///
/// For braids whose closure orients all strands downward through a letter
/// this agrees with [`letter_counts`]. Plat closures can orient the two
/// strands of a letter antiparallel, in which case the sign flips.
pub fn crossing_counts(b: &BraidWord) -> CrossingCounts {
    let signs = plat_to_diagram(b).crossing_signs();
    let n_plus = signs.iter().filter(|&&s| s > 0).count();
    CrossingCounts {
        n_plus,
        n_minus: signs.len() - n_plus,
    }
}

pub fn component_count(b: &BraidWord) -> usize {
    plat_to_diagram(b).component_count()
}

/// One level of a plat diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Site {
    /// The letter `σ_gen^{sign}`. For `sign = +1` the strand running from the
    /// upper right to the lower left passes over.
    Crossing { gen: usize, sign: i8 },
    /// A resolved crossing: strands go straight down (`horizontal = false`)
    /// or are replaced by a cap and a cup (`horizontal = true`).
    Smoothing { gen: usize, horizontal: bool },
}

impl Site {
    pub fn gen(&self) -> usize {
        match *self {
            Site::Crossing { gen, .. } | Site::Smoothing { gen, .. } => gen,
        }
    }
}

/// A point of the diagram: strand position and level.
pub type Point = (usize, usize);

/// Over and under strands of one crossing, each as (start, end) following
/// the orientation of the closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingInfo {
    pub site: usize,
    pub over: (Point, Point),
    pub under: (Point, Point),
    pub sign: i8,
}

/// A plat closure diagram, possibly with some crossings smoothed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    pub strands: usize,
    pub sites: Vec<Site>,
}

pub fn plat_to_diagram(b: &BraidWord) -> LinkDiagram {
    LinkDiagram {
        strands: b.strands,
        sites: b
            .letters
            .iter()
            .map(|l| Site::Crossing {
                gen: l.gen,
                sign: l.sign,
            })
            .collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Vertical,
    Cap,
    Cup,
    /// The two strands through a crossing; `first` runs from `(a, t)` to
    /// `(b, t + 1)`, the other from `(b, t)` to `(a, t + 1)`.
    Strand { site: usize, first: bool },
    SmoothedCap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub ends: (Point, Point),
    pub kind: EdgeKind,
}

#[derive(Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub(crate) fn classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

impl LinkDiagram {
    pub fn levels(&self) -> usize {
        self.sites.len()
    }

    pub fn point_index(&self, p: Point) -> usize {
        p.1 * self.strands + p.0
    }

    pub fn point_count(&self) -> usize {
        (self.levels() + 1) * self.strands
    }

    /// Edges that do not depend on how crossings are resolved: straight
    /// segments past each site, caps, cups, and the edges of smoothed sites.
    pub fn fixed_edges(&self) -> Vec<Edge> {
        let n = self.strands;
        let m = self.levels();
        let mut out = Vec::new();
        for (t, site) in self.sites.iter().enumerate() {
            let k = site.gen();
            for p in 0..n {
                if p != k - 1 && p != k {
                    out.push(Edge {
                        ends: ((p, t), (p, t + 1)),
                        kind: EdgeKind::Vertical,
                    });
                }
            }
            if let Site::Smoothing { horizontal, .. } = *site {
                let (a, b) = (k - 1, k);
                if horizontal {
                    out.push(Edge {
                        ends: ((a, t), (b, t)),
                        kind: EdgeKind::SmoothedCap,
                    });
                    out.push(Edge {
                        ends: ((a, t + 1), (b, t + 1)),
                        kind: EdgeKind::SmoothedCap,
                    });
                } else {
                    for p in [a, b] {
                        out.push(Edge {
                            ends: ((p, t), (p, t + 1)),
                            kind: EdgeKind::Vertical,
                        });
                    }
                }
            }
        }
        for i in 0..n / 2 {
            out.push(Edge {
                ends: ((2 * i, 0), (2 * i + 1, 0)),
                kind: EdgeKind::Cap,
            });
            out.push(Edge {
                ends: ((2 * i, m), (2 * i + 1, m)),
                kind: EdgeKind::Cup,
            });
        }
        out
    }

    /// All edges of the closed diagram, crossings included as two strands.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = self.fixed_edges();
        for (t, site) in self.sites.iter().enumerate() {
            if let Site::Crossing { gen, .. } = *site {
                let (a, b) = (gen - 1, gen);
                out.push(Edge {
                    ends: ((a, t), (b, t + 1)),
                    kind: EdgeKind::Strand { site: t, first: true },
                });
                out.push(Edge {
                    ends: ((b, t), (a, t + 1)),
                    kind: EdgeKind::Strand { site: t, first: false },
                });
            }
        }
        out
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.point_count());
        for e in self.edges() {
            uf.union(self.point_index(e.ends.0), self.point_index(e.ends.1));
        }
        uf.classes()
    }

    /// Orients every component and returns, for each edge of [`Self::edges`],
    /// whether it is traversed from `ends.0` to `ends.1`.
    ///
    /// Each component is started at its smallest point (level-major order)
    /// and leaves along the first edge listed there, so the orientation is
    /// deterministic.
    pub fn orientation(&self) -> (Vec<Edge>, Vec<bool>) {
        let edges = self.edges();
        let np = self.point_count();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); np];
        for (i, e) in edges.iter().enumerate() {
            adj[self.point_index(e.ends.0)].push(i);
            adj[self.point_index(e.ends.1)].push(i);
        }
        let mut forward = vec![false; edges.len()];
        let mut used = vec![false; edges.len()];
        for start in 0..np {
            let Some(&first) = adj[start].iter().find(|&&e| !used[e]) else {
                continue;
            };
            let mut at = start;
            let mut edge = first;
            loop {
                used[edge] = true;
                let (u, v) = edges[edge].ends;
                let (iu, iv) = (self.point_index(u), self.point_index(v));
                let next = if iu == at {
                    forward[edge] = true;
                    iv
                } else {
                    forward[edge] = false;
                    iu
                };
                at = next;
                match adj[at].iter().find(|&&e| !used[e]) {
                    Some(&e) => edge = e,
                    None => break,
                }
            }
        }
        (edges, forward)
    }

    /// Over/under strands and oriented sign of every crossing site.
    pub fn crossings(&self) -> Vec<CrossingInfo> {
        let (edges, forward) = self.orientation();
        let mut first: Vec<Option<(Point, Point)>> = vec![None; self.levels()];
        let mut second: Vec<Option<(Point, Point)>> = vec![None; self.levels()];
        for (e, &fwd) in edges.iter().zip(&forward) {
            if let EdgeKind::Strand { site, first: is_first } = e.kind {
                let dir = if fwd { e.ends } else { (e.ends.1, e.ends.0) };
                if is_first {
                    first[site] = Some(dir);
                } else {
                    second[site] = Some(dir);
                }
            }
        }
        let vec_of = |d: (Point, Point)| -> (i64, i64) {
            // x grows with position, y grows upward (levels grow downward)
            let dx = d.1 .0 as i64 - d.0 .0 as i64;
            let dy = -(d.1 .1 as i64 - d.0 .1 as i64);
            (dx, dy)
        };
        let mut out = Vec::new();
        for (t, site) in self.sites.iter().enumerate() {
            if let Site::Crossing { sign, .. } = *site {
                let s1 = first[t].expect("crossing strand oriented");
                let s2 = second[t].expect("crossing strand oriented");
                let (over, under) = if sign > 0 { (s2, s1) } else { (s1, s2) };
                let (o, u) = (vec_of(over), vec_of(under));
                let cross = o.0 * u.1 - o.1 * u.0;
                out.push(CrossingInfo {
                    site: t,
                    over,
                    under,
                    sign: if cross > 0 { 1 } else { -1 },
                });
            }
        }
        out
    }

    pub fn crossing_signs(&self) -> Vec<i8> {
        self.crossings().iter().map(|c| c.sign).collect()
    }

    /// Whether the two strands through site `t` run in the same vertical
    /// direction. Their oriented smoothing is then the vertical one.
    pub fn strands_parallel(&self, t: usize) -> bool {
        let c = self
            .crossings()
            .into_iter()
            .find(|c| c.site == t)
            .expect("site is a crossing");
        let down = |d: (Point, Point)| d.1 .1 > d.0 .1;
        down(c.over) == down(c.under)
    }

    pub fn crossing_count(&self) -> usize {
        self.sites
            .iter()
            .filter(|s| matches!(s, Site::Crossing { .. }))
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        parse_braid_word(s).unwrap()
    }

    #[test]
    fn parses_grammar() {
        assert_eq!(w("4:"), BraidWord::new(4, vec![]));
        assert_eq!(
            w("4: s2 s2 s2"),
            BraidWord::new(4, vec![Letter::new(2, 1); 3])
        );
        assert_eq!(w("  6 :S5 s1").letters[0], Letter::new(5, -1));
        assert_eq!(w("4: S2 s1").to_string(), "4: S2 s1");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_braid_word("4: s5"),
            Err(ParseError::IndexOutOfRange { position: 1, gen: 5, .. })
        ));
        assert!(matches!(
            parse_braid_word("4: s1 x2"),
            Err(ParseError::MalformedToken { position: 2, .. })
        ));
        assert!(matches!(
            parse_braid_word("4: s0"),
            Err(ParseError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            parse_braid_word("4: s"),
            Err(ParseError::MalformedToken { .. })
        ));
        assert!(matches!(
            parse_braid_word("4: s+1"),
            Err(ParseError::MalformedToken { .. })
        ));
        assert_eq!(parse_braid_word("3:"), Err(ParseError::OddStrandCount(3)));
        assert_eq!(parse_braid_word("4 s1"), Err(ParseError::MissingColon));
        assert!(matches!(
            parse_braid_word("x: s1"),
            Err(ParseError::BadStrandCount(_))
        ));
    }

    #[test]
    fn counts() {
        assert_eq!(
            letter_counts(&w("4: s2 s2 s2")),
            CrossingCounts { n_plus: 3, n_minus: 0 }
        );
        assert_eq!(
            crossing_counts(&w("4: S2 S2 S2")),
            CrossingCounts { n_plus: 0, n_minus: 3 }
        );
        assert_eq!(crossing_counts(&w("4:")), CrossingCounts::default());
        // the two strands through a σ1 next to the caps run antiparallel
        assert_eq!(
            crossing_counts(&w("4: s1")),
            CrossingCounts { n_plus: 0, n_minus: 1 }
        );
    }

    #[test]
    fn components() {
        assert_eq!(component_count(&w("4:")), 2);
        assert_eq!(component_count(&w("4: s2")), 1);
        assert_eq!(component_count(&w("4: s2 s2")), 2);
        assert_eq!(component_count(&w("4: s2 s2 s2")), 1);
        assert_eq!(component_count(&w("6:")), 3);
    }

    #[test]
    fn diagram_is_closed() {
        let d = plat_to_diagram(&w("4: S2 s1 s3 S2 s2"));
        let mut degree = vec![0; d.point_count()];
        for e in d.edges() {
            degree[d.point_index(e.ends.0)] += 1;
            degree[d.point_index(e.ends.1)] += 1;
        }
        assert!(degree.iter().all(|&k| k == 2));
        assert_eq!(d.crossing_count(), 5);
    }

    #[test]
    fn mirror_swaps_counts() {
        let b = w("4: S2 s1 s2 s3 S1");
        let c = crossing_counts(&b);
        let m = crossing_counts(&b.mirror());
        assert_eq!((c.n_plus, c.n_minus), (m.n_minus, m.n_plus));
    }
}
