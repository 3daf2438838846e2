//! From a graded curve to a twisted complex over the path algebra.
//!
//! Every axis crossing becomes one projective `T_i`, where `i` is the gap
//! the crossing lies in: segment `s` in `1..n` is gap `s - 1`, and the two
//! outer rays `0` and `n` are the same gap `n - 1` seen from both sides.
//! Every arc of the curve between consecutive crossings becomes one
//! differential entry:
//!
//! * an arc below the axis from segment `s` to segment `s' > s` is the
//!   `a`-run of length `s' - s` from the crossing at `s` to the one at `s'`;
//! * an arc above the axis from segment `s'` to segment `s < s'` is the
//!   `b`-run of length `s' - s` from the crossing at `s'` to the one at `s`.
//!
//! The entry raises `k` by one and lowers `d` by the q-degree of the run.
//! Consecutive arcs lie on opposite sides of the axis, so any composite of
//! two entries mixes `a` and `b` and vanishes: `Q^2 = 0` holds automatically.

use crate::algebra::{Path, PathAlgebra, PathElement};
use crate::complexes::{Object, TwistedComplex, Validation};
use crate::curve::Curve;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error("curve has {curve} punctures but the algebra has {algebra} nodes")]
    NodeMismatch { curve: usize, algebra: usize },
    #[error("arc {0} winds once around the cylinder")]
    Winding(usize),
    #[error("arc {0} returns to its own segment; the curve is not in normal form")]
    NotNormalForm(usize),
    #[error("gradings do not close up around the curve")]
    InconsistentGrading,
    #[error("compiled complex fails validation: {0:?}")]
    Invalid(Validation),
}

/// One cone of the breaking procedure: the arc `arc` of the curve becomes
/// the entry `path` from object `source` to object `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BreakingEvent {
    pub arc: usize,
    pub source: usize,
    pub target: usize,
    pub path: Path,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BreakingTrace {
    /// Grading of the first crossing as carried by the curve.
    pub anchor: (i64, i64),
    pub events: Vec<BreakingEvent>,
}

impl BreakingTrace {
    /// Rebuilds the differential on the given objects.
    pub fn replay(&self, nodes: usize, objects: &[Object]) -> TwistedComplex {
        let mut tc = TwistedComplex::new(nodes);
        for o in objects {
            tc.push(*o);
        }
        for e in &self.events {
            tc.add_entry(e.target, e.source, &PathElement::from_path(e.path, 1));
        }
        tc
    }
}

/// Gap of an axis segment.
pub fn node_of_segment(seg: usize, punctures: usize) -> usize {
    if seg == 0 || seg == punctures {
        punctures - 1
    } else {
        seg - 1
    }
}

/// Compiles a normal-form curve. Object `i` is crossing `i`; gradings are
/// relative, with the first crossing at `(0, 0)` (see [`assign_gradings`]).
pub fn compile(c: &Curve, alg: &PathAlgebra) -> Result<(TwistedComplex, BreakingTrace), CompileError> {
    compile_inner(c, alg, false)
}

/// Like [`compile`] but accepts bigons between the curve and the axis. An
/// arc that returns to its own segment becomes an identity entry, directed
/// by the gradings the curve carries.
pub fn compile_unreduced(c: &Curve, alg: &PathAlgebra) -> Result<(TwistedComplex, BreakingTrace), CompileError> {
    compile_inner(c, alg, true)
}

fn compile_inner(
    c: &Curve,
    alg: &PathAlgebra,
    allow_bigons: bool,
) -> Result<(TwistedComplex, BreakingTrace), CompileError> {
    let n = c.surface.punctures;
    if alg.nodes() != n {
        return Err(CompileError::NodeMismatch {
            curve: n,
            algebra: alg.nodes(),
        });
    }
    let len = c.crossings.len();
    let mut events = Vec::with_capacity(len);
    for i in 0..len {
        let j = (i + 1) % len;
        let (x, y) = (c.crossings[i], c.crossings[j]);
        let below = Curve::is_down(i);
        let span = x.seg.abs_diff(y.seg);
        if span == n {
            return Err(CompileError::Winding(i));
        }
        let (source, target, path) = if span == 0 {
            if !allow_bigons {
                return Err(CompileError::NotNormalForm(i));
            }
            let (s, t) = if x.k < y.k { (i, j) } else { (j, i) };
            (s, t, Path::idempotent(n, node_of_segment(x.seg, n)))
        } else if below {
            let (s, t) = if x.seg < y.seg { (i, j) } else { (j, i) };
            let from = c.crossings[s].seg;
            (s, t, Path::a_run(n, node_of_segment(from, n), span))
        } else {
            let (s, t) = if x.seg > y.seg { (i, j) } else { (j, i) };
            let from = c.crossings[s].seg;
            (s, t, Path::b_run(n, node_of_segment(from, n), span))
        };
        events.push(BreakingEvent {
            arc: i,
            source,
            target,
            path,
        });
    }

    // relative gradings: walk around the curve from crossing 0
    let mut grades = vec![(0i64, 0i64); len];
    for e in events.iter().take(len.saturating_sub(1)) {
        let i = e.arc;
        let j = i + 1;
        let q = e.path.q_degree();
        let (k, d) = grades[i];
        grades[j] = if e.source == i { (k + 1, d - q) } else { (k - 1, d + q) };
    }
    if let Some(last) = events.last() {
        let (k, d) = grades[last.arc];
        let q = last.path.q_degree();
        let closing = if last.source == last.arc { (k + 1, d - q) } else { (k - 1, d + q) };
        if closing != grades[0] {
            return Err(CompileError::InconsistentGrading);
        }
    }
    let objects: Vec<Object> = c
        .crossings
        .iter()
        .zip(&grades)
        .map(|(x, &(k, d))| Object {
            node: node_of_segment(x.seg, n),
            k,
            d,
        })
        .collect();
    let trace = BreakingTrace {
        anchor: c.crossings.first().map(|x| (x.k, x.d)).unwrap_or((0, 0)),
        events,
    };
    let tc = trace.replay(n, &objects);
    match tc.validate() {
        Validation::Ok => Ok((tc, trace)),
        v => Err(CompileError::Invalid(v)),
    }
}

/// Fixes absolute gradings: shifts every object so that the first crossing
/// sits at the grading the curve carries there.
pub fn assign_gradings(tc: &TwistedComplex, trace: &BreakingTrace) -> TwistedComplex {
    let mut out = tc.clone();
    let Some(first) = tc.objects.first() else {
        return out;
    };
    let (dk, dd) = (trace.anchor.0 - first.k, trace.anchor.1 - first.d);
    for o in out.objects.iter_mut() {
        o.k += dk;
        o.d += dd;
    }
    out
}

/// Compiles and anchors in one step.
pub fn compile_graded(c: &Curve, alg: &PathAlgebra) -> Result<TwistedComplex, CompileError> {
    let (tc, trace) = compile(c, alg)?;
    Ok(assign_gradings(&tc, &trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_algebra;
    use crate::curve::{figure_eight_brane, AxisCrossing, MarkedSurface};

    #[test]
    fn figure_eight_complex() {
        let s = MarkedSurface::new(4).unwrap();
        let alg = make_algebra(4).unwrap();
        let e = figure_eight_brane(s, 2).unwrap();
        let tc = compile_graded(&e, &alg).unwrap();
        assert_eq!(tc.len(), 4);
        assert_eq!(tc.validate(), Validation::Ok);
        let h = tc.hom_to_simple(2).cohomology().unwrap();
        assert_eq!(h.total_rank(), 2);
        // gradings agree with what the curve carries
        for (o, x) in tc.objects.iter().zip(&e.crossings) {
            assert_eq!((o.k, o.d), (x.k, x.d));
        }
    }

    #[test]
    fn rejects_bigons_and_winding() {
        let s = MarkedSurface::new(4).unwrap();
        let alg = make_algebra(4).unwrap();
        let bigon = Curve {
            surface: s,
            crossings: vec![AxisCrossing::new(2, 0, 0), AxisCrossing::new(2, 1, 0)],
        };
        assert_eq!(compile(&bigon, &alg).unwrap_err(), CompileError::NotNormalForm(0));
        let wind = Curve {
            surface: s,
            crossings: vec![AxisCrossing::new(0, 0, 0), AxisCrossing::new(4, 1, 0)],
        };
        assert_eq!(compile(&wind, &alg).unwrap_err(), CompileError::Winding(0));
        let alg6 = make_algebra(6).unwrap();
        assert!(matches!(
            compile(&figure_eight_brane(s, 1).unwrap(), &alg6),
            Err(CompileError::NodeMismatch { .. })
        ));
    }

    #[test]
    fn replay_reproduces_complex() {
        let s = MarkedSurface::new(4).unwrap();
        let alg = make_algebra(4).unwrap();
        let c = figure_eight_brane(s, 2)
            .unwrap()
            .apply_word(&[(2, 1), (3, -1), (2, 1)])
            .unwrap();
        let (tc, trace) = compile(&c, &alg).unwrap();
        assert_eq!(trace.replay(4, &tc.objects), tc);
    }

    #[test]
    fn node_map() {
        assert_eq!(node_of_segment(0, 4), 3);
        assert_eq!(node_of_segment(4, 4), 3);
        assert_eq!(node_of_segment(1, 4), 0);
        assert_eq!(node_of_segment(3, 4), 2);
    }
}
