//! Jones polynomial by the Kauffman bracket state sum.
//!
//! This is the independent reference for every polynomial the homology
//! pipeline produces. It shares nothing with the curve side except the plat
//! diagram itself.
//!
//! Conventions: the bracket is a polynomial in `A` with integer exponents,
//! `<O> = 1`, `<D> = A<D_A> + A^{-1}<D_B>` and each extra loop contributes
//! `-A^2 - A^{-2}`. At a letter of sign `+1` the A-smoothing joins the
//! strands vertically. The Jones polynomial is `V = (-A^3)^{-w} <D>` under
//! `A = t^{-1/4}`, stored with exponents in quarter powers of `t`.

use crate::laurent::LaurentPoly;
use crate::plat::{LinkDiagram, Site, UnionFind};
use thiserror::Error;

pub const MAX_CROSSINGS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("diagram has {0} crossings; the state sum is limited to {MAX_CROSSINGS}")]
    TooManyCrossings(usize),
}

fn loop_value() -> LaurentPoly {
    [(2, -1), (-2, -1)].into_iter().collect()
}

/// Kauffman bracket of the diagram, exponents in powers of `A`.
pub fn kauffman_bracket(dg: &LinkDiagram) -> Result<LaurentPoly, OracleError> {
    let crossing_sites: Vec<(usize, usize, i8)> = dg
        .sites
        .iter()
        .enumerate()
        .filter_map(|(t, s)| match *s {
            Site::Crossing { gen, sign } => Some((t, gen, sign)),
            Site::Smoothing { .. } => None,
        })
        .collect();
    let c = crossing_sites.len();
    if c > MAX_CROSSINGS {
        return Err(OracleError::TooManyCrossings(c));
    }
    let fixed: Vec<(usize, usize)> = dg
        .fixed_edges()
        .iter()
        .map(|e| (dg.point_index(e.ends.0), dg.point_index(e.ends.1)))
        .collect();
    let mut base = UnionFind::new(dg.point_count());
    for &(a, b) in &fixed {
        base.union(a, b);
    }

    // loops -> number of states with a given (A - B) count
    let mut tally: std::collections::BTreeMap<(i64, usize), i64> = Default::default();
    for state in 0u64..(1u64 << c) {
        let mut uf = base.clone();
        let mut a_minus_b = 0i64;
        for (bit, &(t, gen, sign)) in crossing_sites.iter().enumerate() {
            let is_a = state >> bit & 1 == 0;
            a_minus_b += if is_a { 1 } else { -1 };
            let vertical = is_a == (sign > 0);
            let (a, b) = (gen - 1, gen);
            if vertical {
                uf.union(dg.point_index((a, t)), dg.point_index((a, t + 1)));
                uf.union(dg.point_index((b, t)), dg.point_index((b, t + 1)));
            } else {
                uf.union(dg.point_index((a, t)), dg.point_index((b, t)));
                uf.union(dg.point_index((a, t + 1)), dg.point_index((b, t + 1)));
            }
        }
        *tally.entry((a_minus_b, uf.classes())).or_insert(0) += 1;
    }

    let delta = loop_value();
    let mut out = LaurentPoly::zero();
    for ((power, loops), count) in tally {
        let term = &LaurentPoly::monomial(power, count) * &delta.pow(loops as u32 - 1);
        out = &out + &term;
    }
    Ok(out)
}

/// Writhe-normalized bracket as a polynomial in quarter powers of `t`,
/// for a diagram whose writhe is given.
pub fn jones_with_writhe(dg: &LinkDiagram, writhe: i64) -> Result<LaurentPoly, OracleError> {
    let br = kauffman_bracket(dg)?;
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    let norm = &br * &LaurentPoly::monomial(-3 * writhe, sign);
    Ok(norm.scale_exponents(-1))
}

/// Jones polynomial `V(t)` of the oriented closure, exponents in quarters of `t`.
pub fn jones_from_bracket(dg: &LinkDiagram) -> Result<LaurentPoly, OracleError> {
    let w: i64 = dg.crossing_signs().iter().map(|&s| s as i64).sum();
    jones_with_writhe(dg, w)
}

/// Converts `V(t)` (quarter exponents) to the q-variable of the homology
/// side, `t = q^2` with `t^{1/2} = -q`. Returns `None` when a term has an
/// exponent that is not a multiple of `t^{1/2}`.
pub fn jones_to_q(v: &LaurentPoly) -> Option<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for (e, c) in v.terms() {
        if e % 2 != 0 {
            return None;
        }
        let m = e / 2;
        out.add_term(m, if m.rem_euclid(2) == 0 { c } else { -c });
    }
    Some(out)
}

/// Inverse of [`jones_to_q`].
pub fn q_to_jones(p: &LaurentPoly) -> LaurentPoly {
    p.map_terms(|m, c| (2 * m, if m.rem_euclid(2) == 0 { c } else { -c }))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinViolation {
    #[error("the diagrams do not differ at exactly one site")]
    NotLocallyMatched,
    #[error("site {0} does not carry a positive, a negative and an oriented smoothing")]
    WrongSiteTypes(usize),
    #[error("skein identity fails: lhs {lhs}, rhs {rhs}")]
    IdentityFails { lhs: String, rhs: String },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Builds the skein triple `(L+, L-, L0)` at crossing site `t` of `dg`.
pub fn skein_triple(dg: &LinkDiagram, t: usize) -> Option<(LinkDiagram, LinkDiagram, LinkDiagram)> {
    let Site::Crossing { gen, sign } = *dg.sites.get(t)? else {
        return None;
    };
    let oriented = dg.crossings().into_iter().find(|c| c.site == t)?.sign;
    let positive_letter = if oriented > 0 { sign } else { -sign };
    let mut plus = dg.clone();
    let mut minus = dg.clone();
    let mut zero = dg.clone();
    plus.sites[t] = Site::Crossing {
        gen,
        sign: positive_letter,
    };
    minus.sites[t] = Site::Crossing {
        gen,
        sign: -positive_letter,
    };
    zero.sites[t] = Site::Smoothing {
        gen,
        horizontal: !dg.strands_parallel(t),
    };
    Some((plus, minus, zero))
}

/// Checks `t^{-1} V(L+) - t V(L-) = (t^{1/2} - t^{-1/2}) V(L0)`.
///
/// `L0` inherits its orientation from `L+`, so its writhe is that of `L+`
/// minus the resolved crossing.
pub fn skein_check(
    plus: &LinkDiagram,
    minus: &LinkDiagram,
    zero: &LinkDiagram,
) -> Result<(), SkeinViolation> {
    if plus.strands != minus.strands || plus.strands != zero.strands {
        return Err(SkeinViolation::NotLocallyMatched);
    }
    if plus.sites.len() != minus.sites.len() || plus.sites.len() != zero.sites.len() {
        return Err(SkeinViolation::NotLocallyMatched);
    }
    let diffs: Vec<usize> = (0..plus.sites.len())
        .filter(|&i| plus.sites[i] != minus.sites[i] || plus.sites[i] != zero.sites[i])
        .collect();
    let [t] = diffs[..] else {
        return Err(SkeinViolation::NotLocallyMatched);
    };
    let sign_at = |dg: &LinkDiagram| dg.crossings().into_iter().find(|c| c.site == t).map(|c| c.sign);
    let types_ok = sign_at(plus) == Some(1)
        && sign_at(minus) == Some(-1)
        && matches!(zero.sites[t], Site::Smoothing { gen, horizontal }
            if gen == plus.sites[t].gen() && horizontal != plus.strands_parallel(t));
    if !types_ok {
        return Err(SkeinViolation::WrongSiteTypes(t));
    }
    let w_plus: i64 = plus.crossing_signs().iter().map(|&s| s as i64).sum();
    let w_minus: i64 = minus.crossing_signs().iter().map(|&s| s as i64).sum();
    let v_plus = jones_with_writhe(plus, w_plus)?;
    let v_minus = jones_with_writhe(minus, w_minus)?;
    let v_zero = jones_with_writhe(zero, w_plus - 1)?;
    let lhs = &v_plus.shift(-4) - &v_minus.shift(4);
    let factor: LaurentPoly = [(2, 1), (-2, -1)].into_iter().collect();
    let rhs = &factor * &v_zero;
    if lhs == rhs {
        Ok(())
    } else {
        Err(SkeinViolation::IdentityFails {
            lhs: lhs.display("t", 4),
            rhs: rhs.display("t", 4),
        })
    }
}
