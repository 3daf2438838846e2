//! Executable property suites shared by `khplat check` and the acceptance run.
//!
//! Every suite returns a [`SuiteReport`] listing each violated instance, so
//! a failure can be reproduced from its word alone.

use crate::complexes::BigradedGroups;
use crate::corpus::{move_pairs, oracle_jones, random_word, random_words, unknot_corpus, MovePair};
use crate::curve::{figure_eight_at, Curve, MarkedSurface};
use crate::invariants::{mirror_check, reduced_homology, transport, PipelineError};
use crate::laurent::LaurentPoly;
use crate::oracle::{kauffman_bracket, skein_check, skein_triple, OracleError};
use crate::plat::{component_count, plat_to_diagram, BraidWord, Letter, PlatPresentation};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "{}: {} ({} checked, {} failed)",
            self.suite,
            status,
            self.checked,
            self.failures.len()
        )?;
        for x in &self.failures {
            write!(f, "\n  {}", x)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Decategorification,
    Invariance,
    Mirror,
    Skein,
    Unknot,
    Reidemeister,
    Curve,
    Intersections,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Decategorification,
        Suite::Invariance,
        Suite::Mirror,
        Suite::Skein,
        Suite::Unknot,
        Suite::Reidemeister,
        Suite::Curve,
        Suite::Intersections,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Decategorification => "decategorification",
            Suite::Invariance => "invariance",
            Suite::Mirror => "mirror",
            Suite::Skein => "skein",
            Suite::Unknot => "unknot",
            Suite::Reidemeister => "reidemeister",
            Suite::Curve => "curve",
            Suite::Intersections => "intersections",
        }
    }
}

impl FromStr for Suite {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| CheckError::UnknownSuite(s.to_string()))
    }
}

/// Corpus sizes. The defaults are the sizes the acceptance run uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckParams {
    pub seed: u64,
    pub max_length: usize,
    pub words: usize,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            seed: 1,
            max_length: 12,
            words: 250,
        }
    }
}

pub fn run_suite(suite: Suite, p: &CheckParams) -> Result<SuiteReport, CheckError> {
    let corpus = || random_words(p.seed, 4, p.words, p.max_length);
    match suite {
        Suite::Decategorification => decategorification(&corpus()),
        Suite::Invariance => invariance(&move_pairs(p.seed, p.words.div_ceil(4).max(25), p.max_length)),
        Suite::Mirror => mirror(&corpus()),
        Suite::Skein => skein(&random_words(p.seed, 4, p.words.min(40), p.max_length.min(10))),
        Suite::Unknot => unknot(&unknot_corpus(p.seed, p.words.min(100), p.max_length.min(10))?),
        Suite::Reidemeister => reidemeister(&random_words(p.seed, 4, p.words.min(60), p.max_length.min(8))),
        Suite::Curve => {
            let mut r = curve_relations(4, p.words.max(500), p.max_length, p.seed);
            r.suite = "curve".into();
            let r6 = curve_relations(6, p.words.max(500), p.max_length, p.seed + 1);
            r.checked += r6.checked;
            r.failures.extend(r6.failures);
            Ok(r)
        }
        Suite::Intersections => intersections(&corpus()),
    }
}

fn plat(w: &BraidWord) -> PlatPresentation {
    PlatPresentation::new(w.clone(), 2).expect("pair 2 exists on 4 strands")
}

/// Euler characteristic of the homology against the state sum.
pub fn decategorification(words: &[BraidWord]) -> Result<SuiteReport, CheckError> {
    let mut r = SuiteReport::new("decategorification");
    for w in words {
        let chi = reduced_homology(&plat(w))?.jones_t();
        let v = oracle_jones(w)?;
        r.record(chi == v, || {
            format!("{}: homology {} vs oracle {}", w, chi.display("t", 4), v.display("t", 4))
        });
    }
    Ok(r)
}

/// Homology of unknot plats is a single `Z` in degree `(0, 0)`.
pub fn unknot(words: &[BraidWord]) -> Result<SuiteReport, CheckError> {
    let mut r = SuiteReport::new("unknot");
    let mut expected = BigradedGroups::default();
    expected.insert((0, 0), crate::complexes::Group { rank: 1, torsion: vec![] });
    for w in words {
        let h = reduced_homology(&plat(w))?;
        r.record(h.groups_ij == expected, || format!("{}: {:?}", w, h.groups_ij.rows()));
    }
    Ok(r)
}

/// Shifts `b` so that its lowest bidegree matches that of `a`.
fn same_up_to_shift(a: &BigradedGroups, b: &BigradedGroups) -> bool {
    let (Some(&(ai, aj)), Some(&(bi, bj))) = (a.groups.keys().next(), b.groups.keys().next()) else {
        return a == b;
    };
    b.map_degrees(|i, j| (i - bi + ai, j - bj + aj)) == *a
}

/// Homology agrees across each move. Knots must agree exactly. For links
/// the plat closure may orient a component differently on the two sides
/// of a move, which shifts homology as a whole, so links are compared up
/// to an overall shift.
pub fn invariance(pairs: &[MovePair]) -> Result<SuiteReport, CheckError> {
    let mut r = SuiteReport::new("invariance");
    for p in pairs {
        let a = reduced_homology(&plat(&p.left))?;
        let b = reduced_homology(&plat(&p.right))?;
        let exact = a.groups_ij == b.groups_ij;
        let ok = exact
            || (component_count(&p.left) > 1 && same_up_to_shift(&a.groups_ij, &b.groups_ij));
        r.record(ok, || {
            format!(
                "{} [{}] vs [{}]: {:?} vs {:?}",
                p.kind,
                p.left,
                p.right,
                a.groups_ij.rows(),
                b.groups_ij.rows()
            )
        });
    }
    Ok(r)
}

pub fn mirror(words: &[BraidWord]) -> Result<SuiteReport, CheckError> {
    let mut r = SuiteReport::new("mirror");
    for w in words {
        let res = mirror_check(&plat(w))?;
        r.record(res.is_ok(), || match res {
            Err(c) => format!("{}: {:?} vs mirror {:?}", w, c.original, c.mirror),
            Ok(()) => unreachable!(),
        });
    }
    Ok(r)
}

/// Skein relation at every crossing of every word.
pub fn skein(words: &[BraidWord]) -> Result<SuiteReport, CheckError> {
    let mut r = SuiteReport::new("skein");
    for w in words {
        let dg = plat_to_diagram(w);
        for t in 0..w.len() {
            let (plus, minus, zero) = skein_triple(&dg, t).expect("every site is a crossing");
            let res = skein_check(&plus, &minus, &zero);
            r.record(res.is_ok(), || format!("{} at letter {}: {}", w, t + 1, res.unwrap_err()));
        }
    }
    Ok(r)
}

fn bracket(w: &BraidWord) -> Result<LaurentPoly, OracleError> {
    kauffman_bracket(&plat_to_diagram(w))
}

fn with(w: &BraidWord, at: usize, insert: &[Letter]) -> BraidWord {
    let mut l = w.letters.clone();
    l.splice(at..at, insert.iter().copied());
    BraidWord::new(w.strands, l)
}

/// Oracle behaviour under the three Reidemeister moves: a kink scales the
/// bracket by `-A^{∓3}` and leaves `V` of a knot unchanged, moves II and
/// III leave the bracket itself unchanged. `V` of a link is not compared
/// across a kink, because a twisted cap can reverse the orientation the
/// closure picks for one component.
pub fn reidemeister(words: &[BraidWord]) -> Result<SuiteReport, CheckError> {
    let mut r = SuiteReport::new("reidemeister");
    for w in words {
        let b = bracket(w)?;
        let v = oracle_jones(w)?;
        let knot = component_count(w) == 1;
        for gen in [1, 3] {
            for sign in [1i8, -1] {
                // a letter right under a cap is a kink
                let k = with(w, 0, &[Letter::new(gen, sign)]);
                let expect = &b * &LaurentPoly::monomial(-3 * sign as i64, -1);
                r.record(bracket(&k)? == expect, || format!("RI bracket {} -> {}", w, k));
                if knot {
                    r.record(oracle_jones(&k)? == v, || format!("RI jones {} -> {}", w, k));
                }
            }
        }
        for at in 0..=w.len() {
            for gen in 1..w.strands {
                let l = Letter::new(gen, 1);
                let k = with(w, at, &[l, l.inverse()]);
                r.record(bracket(&k)? == b, || format!("RII {} -> {}", w, k));
            }
        }
        for sign in [1i8, -1] {
            for (i, j) in [(1, 2), (2, 3)] {
                let at = w.len() / 2;
                let x = [Letter::new(i, sign), Letter::new(j, sign), Letter::new(i, sign)];
                let y = [Letter::new(j, sign), Letter::new(i, sign), Letter::new(j, sign)];
                let (a, c) = (with(w, at, &x), with(w, at, &y));
                r.record(bracket(&a)? == bracket(&c)?, || format!("RIII {} vs {}", a, c));
            }
        }
    }
    Ok(r)
}

/// Braid relations and inverse cancellation of the curve action on
/// `count` random graded curves with `n` punctures.
pub fn curve_relations(n: usize, count: usize, max_len: usize, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new(&format!("curve (n = {})", n));
    let s = MarkedSurface::new(n).expect("n >= 2");
    let mut rng = StdRng::seed_from_u64(seed);
    let act = |c: &Curve, w: &[(usize, i8)]| c.apply_word(w).expect("generators in range");
    for _ in 0..count {
        let start = figure_eight_at(s, rng.gen_range(0..n - 1));
        let len = rng.gen_range(0..=max_len);
        let word: Vec<(usize, i8)> = random_word(&mut rng, n, len)
            .letters
            .iter()
            .map(|l| (l.gen, l.sign))
            .collect();
        let c = act(&start, &word);
        let i = rng.gen_range(1..n - 1);
        let sign: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let lhs = act(&c, &[(i, sign), (i + 1, sign), (i, sign)]);
        let rhs = act(&c, &[(i + 1, sign), (i, sign), (i + 1, sign)]);
        r.record(lhs.same_class(&rhs) && lhs.is_normal(), || {
            format!("braid relation {} on {}: {} vs {}", i, c, lhs, rhs)
        });
        let k = rng.gen_range(1..n);
        let back = act(&c, &[(k, sign), (k, -sign)]);
        r.record(back.same_class(&c), || format!("inverse {} on {}: {}", k, c, back));
        if n >= 4 {
            let a = rng.gen_range(1..n - 2);
            let b = rng.gen_range(a + 2..n);
            let x = act(&c, &[(a, sign), (b, -sign)]);
            let y = act(&c, &[(b, -sign), (a, sign)]);
            r.record(x.same_class(&y), || format!("commutation {} {} on {}", a, b, c));
        }
    }
    r
}

/// Intersections of the transported figure-eight with the marked interval
/// against the generators of the hom complex into the simple module.
pub fn intersections(words: &[BraidWord]) -> Result<SuiteReport, CheckError> {
    let mut r = SuiteReport::new("intersections");
    for w in words {
        let t = transport(&plat(w))?;
        let gens = t.complex.hom_to_simple(t.marked_node).degrees.len();
        r.record(gens == t.intersection_count, || {
            format!("{}: {} intersections, {} generators", w, t.intersection_count, gens)
        });
    }
    Ok(r)
}

