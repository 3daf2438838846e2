//! The end-to-end pipeline from a 4-strand plat to reduced homology.
//!
//! The figure-eight around the marked pair is moved by the braid, compiled
//! into a twisted complex, and paired with the simple module of the marked
//! pair. Three conventions fix how a plat letter acts on the curve:
//!
//! * letters are applied in reading order, and the letter `σ_k^{ε}` acts as
//!   the half twist of sign `-ε` (the plat diagram is read from the caps);
//! * with pair 2 marked, `σ_1` acts as `σ_3`. Both twist one pair of the
//!   four ends and induce the same map on curves in the four-punctured
//!   sphere; using `σ_3` keeps `p_1` fixed, so the disk picture never has to
//!   move the unmarked puncture the sphere picture puts at infinity;
//! * marking pair 1 is reduced to marking pair 2 by rotating the diagram a
//!   half turn about the vertical axis, which sends `σ_k^{ε}` to `σ_{4-k}^{ε}`.
//!
//! Gradings convert as `i = k + 2d + i_0`, `j = 2d + 1 + n_+ - n_- + i_0`
//! where `n_±` count oriented crossings and `i_0` is the framing correction
//! `(w - w_letters) / 2`: half the difference between the writhe and the sum
//! of letter signs. It vanishes unless some letter's sign disagrees with
//! its oriented crossing sign.

use crate::algebra::make_algebra;
use crate::compiler::{compile, node_of_segment, assign_gradings, CompileError};
use crate::complexes::{euler_characteristic, BigradedGroups, CohomologyError, TwistedComplex};
use crate::curve::{figure_eight_brane, interval_brane, intersections, Curve, CurveError, MarkedSurface};
use crate::laurent::LaurentPoly;
use crate::oracle::q_to_jones;
use crate::plat::{crossing_counts, BraidWord, CrossingCounts, Letter, PlatPresentation};
use thiserror::Error;

pub const PIPELINE_STRANDS: usize = 4;
const MARKED_PAIR: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("homology is implemented for 4-strand plats only, got {0} strands (the oracle handles any even count)")]
    UnsupportedStrands(usize),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Compile(#[from] CompileError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub word: BraidWord,
    pub counts: CrossingCounts,
    /// `i_0` of the grading conversion.
    pub framing: i64,
    pub groups_kd: BigradedGroups,
    pub groups_ij: BigradedGroups,
    pub reduced: bool,
}

/// Word on the curve side, for marking pair 2.
fn curve_letters(word: &BraidWord, marked_pair: usize) -> Vec<(usize, i8)> {
    word.letters
        .iter()
        .map(|l| {
            let k = if marked_pair == 1 { PIPELINE_STRANDS - l.gen } else { l.gen };
            let k = if k == 1 { 3 } else { k };
            (k, -l.sign)
        })
        .collect()
}

/// Intermediate data of the pipeline, exposed for the cross-module checks.
#[derive(Clone, Debug)]
pub struct Transport {
    pub curve: Curve,
    pub complex: TwistedComplex,
    pub marked_node: usize,
    pub intersection_count: usize,
}

pub fn transport(p: &PlatPresentation) -> Result<Transport, PipelineError> {
    if p.braid.strands != PIPELINE_STRANDS {
        return Err(PipelineError::UnsupportedStrands(p.braid.strands));
    }
    let surface = MarkedSurface::new(PIPELINE_STRANDS)?;
    let alg = make_algebra(PIPELINE_STRANDS).expect("4 nodes");
    let brane = figure_eight_brane(surface, MARKED_PAIR)?;
    let curve = brane.apply_word(&curve_letters(&p.braid, p.marked_pair))?;
    let interval = interval_brane(surface, MARKED_PAIR)?;
    let (tc, trace) = compile(&curve, &alg)?;
    let complex = assign_gradings(&tc, &trace);
    Ok(Transport {
        intersection_count: intersections(&curve, &interval)?.count(),
        marked_node: node_of_segment(interval.segment(), PIPELINE_STRANDS),
        curve,
        complex,
    })
}

pub fn framing_correction(word: &BraidWord, counts: &CrossingCounts) -> i64 {
    let diff = counts.writhe() - word.letter_writhe();
    debug_assert!(diff % 2 == 0);
    diff / 2
}

pub fn convert_gradings(k: i64, d: i64, counts: &CrossingCounts, i0: i64) -> (i64, i64) {
    (k + 2 * d + i0, 2 * d + 1 + counts.writhe() + i0)
}

pub fn reduced_homology(p: &PlatPresentation) -> Result<HomologyResult, PipelineError> {
    let t = transport(p)?;
    let groups_kd = t.complex.hom_to_simple(t.marked_node).cohomology()?;
    let counts = crossing_counts(&p.braid);
    let framing = framing_correction(&p.braid, &counts);
    let groups_ij = groups_kd.map_degrees(|k, d| convert_gradings(k, d, &counts, framing));
    Ok(HomologyResult {
        word: p.braid.clone(),
        counts,
        framing,
        groups_kd,
        groups_ij,
        reduced: true,
    })
}

impl HomologyResult {
    /// `Σ (-1)^i rank q^j`.
    pub fn jones_q(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(i, j), g) in &self.groups_ij.groups {
            let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
            out.add_term(j, sign * g.rank as i64);
        }
        out
    }

    /// The same polynomial as `V(t)` in quarter powers of `t`.
    pub fn jones_t(&self) -> LaurentPoly {
        q_to_jones(&self.jones_q())
    }

    /// Euler characteristic in the `(k, d)` grading.
    pub fn euler_kd(&self) -> LaurentPoly {
        euler_characteristic(&self.groups_kd)
    }
}

/// Euler characteristic of the reduced homology, in the `j` grading.
pub fn jones_reduced(p: &PlatPresentation) -> Result<LaurentPoly, PipelineError> {
    Ok(reduced_homology(p)?.jones_q())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorCounterexample {
    pub word: BraidWord,
    pub original: Vec<(i64, i64, usize, Vec<i64>)>,
    pub mirror: Vec<(i64, i64, usize, Vec<i64>)>,
}

/// Checks that the mirror's homology is the `(i, j) -> (-i, -j)` image.
pub fn mirror_check(p: &PlatPresentation) -> Result<Result<(), MirrorCounterexample>, PipelineError> {
    let h = reduced_homology(p)?;
    let m = PlatPresentation {
        braid: p.braid.mirror(),
        marked_pair: p.marked_pair,
    };
    let hm = reduced_homology(&m)?;
    let flipped = h.groups_ij.map_degrees(|i, j| (-i, -j));
    if flipped == hm.groups_ij {
        Ok(Ok(()))
    } else {
        Ok(Err(MirrorCounterexample {
            word: p.braid.clone(),
            original: h.groups_ij.rows(),
            mirror: hm.groups_ij.rows(),
        }))
    }
}

/// Letters for a word given as `(gen, sign)` pairs.
pub fn word(strands: usize, letters: &[(usize, i8)]) -> BraidWord {
    BraidWord::new(strands, letters.iter().map(|&(g, s)| Letter::new(g, s)).collect())
}
