//! Graded curves on a punctured disk and the half-twist action on them.
//!
//! Punctures `p_0, ..., p_{n-1}` lie on a horizontal axis. The axis is cut
//! into segments `0..=n`: segment `s` runs between `p_{s-1}` and `p_s`, and
//! segments `0` and `n` are the outer rays. A closed curve in minimal
//! position with respect to the axis is recorded by the cyclic sequence of
//! segments it crosses. Crossings alternate direction, even positions going
//! down and odd positions going up, so the arc after an even crossing runs
//! below the axis and the arc after an odd crossing runs above it.
//!
//! Each crossing also carries a bigrading `(k, d)`. Braid generators act by
//! substituting every crossing of the segment between the two swapped
//! punctures by three crossings, shifting gradings on the way, and then
//! cancelling bigons.

use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// Grading shift picked up by the two crossings a positive half twist pushes
/// across the swapped punctures.
pub const TWIST_SHIFT: i64 = -1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("a surface needs at least 2 punctures, got {0}")]
    TooFewPunctures(usize),
    #[error("pair {pair} does not exist among {punctures} punctures")]
    PairOutOfRange { pair: usize, punctures: usize },
    #[error("generator {gen} is outside 1..={max}")]
    GeneratorOutOfRange { gen: usize, max: usize },
    #[error("curves live on different surfaces")]
    SurfaceMismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MarkedSurface {
    pub punctures: usize,
}

impl MarkedSurface {
    pub fn new(punctures: usize) -> Result<Self, CurveError> {
        if punctures < 2 {
            return Err(CurveError::TooFewPunctures(punctures));
        }
        Ok(MarkedSurface { punctures })
    }

    pub fn segments(&self) -> usize {
        self.punctures + 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AxisCrossing {
    pub seg: usize,
    pub k: i64,
    pub d: i64,
}

impl AxisCrossing {
    pub fn new(seg: usize, k: i64, d: i64) -> Self {
        AxisCrossing { seg, k, d }
    }
}

/// A closed graded curve, as its cyclic word of axis crossings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Curve {
    pub surface: MarkedSurface,
    pub crossings: Vec<AxisCrossing>,
}

/// The straight arc along the axis joining the two punctures of a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntervalBrane {
    pub surface: MarkedSurface,
    pub pair: usize,
}

impl IntervalBrane {
    /// The axis segment the interval covers.
    pub fn segment(&self) -> usize {
        2 * self.pair - 1
    }
}

fn check_pair(s: MarkedSurface, pair: usize) -> Result<(), CurveError> {
    if pair == 0 || 2 * pair > s.punctures {
        return Err(CurveError::PairOutOfRange {
            pair,
            punctures: s.punctures,
        });
    }
    Ok(())
}

/// Interval between punctures `2·pair − 1` and `2·pair` (counting from 1).
pub fn interval_brane(s: MarkedSurface, pair: usize) -> Result<IntervalBrane, CurveError> {
    check_pair(s, pair)?;
    Ok(IntervalBrane { surface: s, pair })
}

/// Figure-eight around punctures `2·pair − 1` and `2·pair` (counting from 1).
pub fn figure_eight_brane(s: MarkedSurface, pair: usize) -> Result<Curve, CurveError> {
    check_pair(s, pair)?;
    Ok(figure_eight_at(s, 2 * (pair - 1)))
}

/// Figure-eight around `p_i` and `p_{i+1}` (0-based), self-crossing on the
/// segment between them. Each lobe crosses the axis once on each side of
/// its puncture.
pub fn figure_eight_at(s: MarkedSurface, i: usize) -> Curve {
    assert!(i + 1 < s.punctures, "figure-eight needs two punctures");
    let t = TWIST_SHIFT;
    Curve {
        surface: s,
        crossings: vec![
            AxisCrossing::new(i, 1, t),
            AxisCrossing::new(i + 1, 2, t),
            AxisCrossing::new(i + 2, 1, 0),
            AxisCrossing::new(i + 1, 0, 0),
        ],
    }
}

impl Curve {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Whether crossing `i` goes downward.
    pub fn is_down(i: usize) -> bool {
        i.is_multiple_of(2)
    }

    /// Bigon-free representative: cancels adjacent crossings of the same
    /// segment, cyclically, keeping the down/up parity of the survivors.
    pub fn normal_form(&self) -> Curve {
        Curve {
            surface: self.surface,
            crossings: reduce(&self.crossings),
        }
    }

    pub fn is_normal(&self) -> bool {
        let n = self.crossings.len();
        (0..n).all(|i| self.crossings[i].seg != self.crossings[(i + 1) % n].seg) || n == 0
    }

    /// Image under the half twist exchanging punctures `k` and `k + 1`
    /// (counting from 1), counterclockwise for `sign = +1`, in normal form.
    pub fn apply_generator(&self, k: usize, sign: i8) -> Result<Curve, CurveError> {
        let n = self.surface.punctures;
        if k == 0 || k >= n {
            return Err(CurveError::GeneratorOutOfRange { gen: k, max: n - 1 });
        }
        let t = TWIST_SHIFT;
        let mut out = Vec::with_capacity(self.crossings.len() * 3);
        for (i, c) in self.crossings.iter().enumerate() {
            if c.seg != k {
                out.push(*c);
                continue;
            }
            let (kk, dd) = (c.k, c.d);
            let mut img = if sign > 0 {
                [
                    AxisCrossing::new(k - 1, kk, dd + t),
                    AxisCrossing::new(k, kk + 1, dd + t),
                    AxisCrossing::new(k + 1, kk, dd),
                ]
            } else {
                [
                    AxisCrossing::new(k + 1, kk, dd - t),
                    AxisCrossing::new(k, kk - 1, dd - t),
                    AxisCrossing::new(k - 1, kk, dd),
                ]
            };
            if !Curve::is_down(i) {
                img.reverse();
            }
            out.extend_from_slice(&img);
        }
        Ok(Curve {
            surface: self.surface,
            crossings: reduce(&out),
        })
    }

    /// Applies letters `(k, sign)` in order.
    pub fn apply_word(&self, letters: &[(usize, i8)]) -> Result<Curve, CurveError> {
        let mut c = self.clone();
        for &(k, s) in letters {
            c = c.apply_generator(k, s)?;
        }
        Ok(c)
    }

    /// Representative independent of the starting crossing: the smallest
    /// rotation by an even number of steps.
    pub fn canonical(&self) -> Vec<AxisCrossing> {
        let n = self.crossings.len();
        (0..n)
            .step_by(2)
            .map(|r| {
                let mut v = self.crossings.clone();
                v.rotate_left(r);
                v
            })
            .min()
            .unwrap_or_default()
    }

    pub fn same_class(&self, other: &Curve) -> bool {
        self.surface == other.surface && self.canonical() == other.canonical()
    }

    /// Rotates the starting point by an even number of crossings.
    pub fn rotated(&self, by: usize) -> Curve {
        let mut v = self.crossings.clone();
        if !v.is_empty() {
            let r = (2 * by) % v.len();
            v.rotate_left(r);
        }
        Curve {
            surface: self.surface,
            crossings: v,
        }
    }

    /// Number of crossings with the given axis segments.
    pub fn crossings_on(&self, segs: &[usize]) -> usize {
        self.crossings.iter().filter(|c| segs.contains(&c.seg)).count()
    }

    /// Debug word, e.g. `D3 U2 D1 U2` (D = down, U = up, then the segment).
    pub fn word(&self) -> String {
        self.crossings
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{}{}", if Curve::is_down(i) { 'D' } else { 'U' }, c.seg))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

fn reduce(w: &[AxisCrossing]) -> Vec<AxisCrossing> {
    let mut out: Vec<AxisCrossing> = Vec::with_capacity(w.len());
    for &c in w {
        if out.last().map(|l| l.seg) == Some(c.seg) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    // the wrap-around arc joins the last crossing to the first
    while out.len() >= 2 && out[0].seg == out[out.len() - 1].seg {
        if out.len() == 2 {
            out.clear();
        } else {
            // drop first and last; the old second crossing goes to the end
            // so that even positions still go down
            let second = out[1];
            let mut next: Vec<AxisCrossing> = out[2..out.len() - 1].to_vec();
            next.push(second);
            out = next;
        }
    }
    out
}

/// One point of a curve meeting an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionPoint {
    /// Index of the crossing along the curve.
    pub along_curve: usize,
    /// `+1` where the curve crosses downward, `-1` upward.
    pub sign: i8,
    pub k: i64,
    pub d: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IntersectionSet {
    pub points: Vec<IntersectionPoint>,
}

impl IntersectionSet {
    pub fn count(&self) -> usize {
        self.points.len()
    }
}

/// Intersections of a normal-form curve with an interval brane. Since the
/// interval lies on the axis and the curve has no bigons with the axis, the
/// count is the geometric intersection number.
pub fn intersections(c: &Curve, i: &IntervalBrane) -> Result<IntersectionSet, CurveError> {
    if c.surface != i.surface {
        return Err(CurveError::SurfaceMismatch);
    }
    let nf = c.normal_form();
    let seg = i.segment();
    Ok(IntersectionSet {
        points: nf
            .crossings
            .iter()
            .enumerate()
            .filter(|(_, x)| x.seg == seg)
            .map(|(idx, x)| IntersectionPoint {
                along_curve: idx,
                sign: if Curve::is_down(idx) { 1 } else { -1 },
                k: x.k,
                d: x.d,
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> MarkedSurface {
        MarkedSurface::new(4).unwrap()
    }

    #[test]
    fn branes() {
        let i = interval_brane(s4(), 2).unwrap();
        assert_eq!(i.segment(), 3);
        assert_eq!(interval_brane(s4(), 1).unwrap().segment(), 1);
        assert!(interval_brane(MarkedSurface::new(2).unwrap(), 2).is_err());
        let e = figure_eight_brane(s4(), 1).unwrap();
        assert_eq!(e.word(), "D0 U1 D2 U1");
        assert!(figure_eight_brane(s4(), 3).is_err());
        assert!(figure_eight_brane(MarkedSurface::new(2).unwrap(), 1).is_ok());
        assert!(MarkedSurface::new(1).is_err());
    }

    #[test]
    fn inverse_twist_is_identity() {
        let e = figure_eight_brane(s4(), 2).unwrap();
        for k in 1..4 {
            for s in [1, -1] {
                let back = e.apply_generator(k, s).unwrap().apply_generator(k, -s).unwrap();
                assert!(back.same_class(&e), "k={} s={}", k, s);
            }
        }
        assert!(e.apply_generator(4, 1).is_err());
    }

    #[test]
    fn disjoint_twist_fixes_curve() {
        let e = figure_eight_at(MarkedSurface::new(6).unwrap(), 0);
        // σ4 swaps p3 and p4 (0-based), away from p0, p1
        assert_eq!(e.apply_generator(4, 1).unwrap(), e);
    }

    #[test]
    fn wiggles_cancel() {
        let mut e = figure_eight_brane(s4(), 2).unwrap();
        let nf = e.clone();
        e.crossings.insert(1, AxisCrossing::new(1, 5, 5));
        e.crossings.insert(1, AxisCrossing::new(1, 6, 6));
        assert!(!e.is_normal());
        assert_eq!(e.normal_form(), nf);
        assert_eq!(nf.normal_form(), nf);
    }

    #[test]
    fn trefoil_count() {
        // σ2^3 moves the figure-eight around p2, p3 (1-based 3, 4) so that
        // it meets the interval of pair 2 three times
        let e = figure_eight_brane(s4(), 2).unwrap();
        let t = e.apply_word(&[(2, 1), (2, 1), (2, 1)]).unwrap();
        let i = interval_brane(s4(), 2).unwrap();
        assert_eq!(intersections(&t, &i).unwrap().count(), 3);
        assert_eq!(intersections(&e, &i).unwrap().count(), 2);
    }

    #[test]
    fn cyclic_reduction_keeps_parity() {
        let c = Curve {
            surface: s4(),
            crossings: vec![
                AxisCrossing::new(1, 0, 0),
                AxisCrossing::new(2, 0, 0),
                AxisCrossing::new(3, 0, 0),
                AxisCrossing::new(2, 0, 0),
                AxisCrossing::new(1, 0, 0),
                AxisCrossing::new(4, 0, 0),
            ],
        };
        // not reducible: last and first differ
        assert_eq!(c.normal_form().len(), 6);
        let wrap = Curve {
            surface: s4(),
            crossings: vec![
                AxisCrossing::new(1, 0, 0),
                AxisCrossing::new(2, 1, 0),
                AxisCrossing::new(3, 2, 0),
                AxisCrossing::new(1, 3, 0),
            ],
        };
        let r = wrap.normal_form();
        assert_eq!(r.crossings, vec![AxisCrossing::new(3, 2, 0), AxisCrossing::new(2, 1, 0)]);
    }
}
