//! Seeded word corpora and move-related word pairs for the property checks.

use crate::laurent::LaurentPoly;
use crate::oracle::{jones_from_bracket, OracleError};
use crate::plat::{component_count, plat_to_diagram, BraidWord, Letter};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;
use std::fmt;

pub fn random_letter(rng: &mut impl Rng, strands: usize) -> Letter {
    let gen = rng.gen_range(1..strands);
    Letter::new(gen, if rng.gen_bool(0.5) { 1 } else { -1 })
}

pub fn random_word(rng: &mut impl Rng, strands: usize, len: usize) -> BraidWord {
    BraidWord::new(strands, (0..len).map(|_| random_letter(rng, strands)).collect())
}

/// Up to `count` distinct words of length `0..=max_len`. Lengths are drawn
/// uniformly, so short lengths saturate and the result may fall short of
/// `count` only when the whole space is smaller.
pub fn random_words(seed: u64, strands: usize, count: usize, max_len: usize) -> Vec<BraidWord> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 50 {
        attempts += 1;
        let len = rng.gen_range(0..=max_len);
        let w = random_word(&mut rng, strands, len);
        if seen.insert(w.to_string()) {
            out.push(w);
        }
    }
    out
}

pub fn oracle_jones(w: &BraidWord) -> Result<LaurentPoly, OracleError> {
    jones_from_bracket(&plat_to_diagram(w))
}

/// A knot whose Jones polynomial is 1. No nontrivial knot with this property
/// is known, and none exists in the crossing range of the corpora here.
pub fn is_unknot(w: &BraidWord) -> Result<bool, OracleError> {
    Ok(component_count(w) == 1 && oracle_jones(w)? == LaurentPoly::one())
}

/// Unknot plats found among random 4-strand words.
pub fn unknot_corpus(seed: u64, count: usize, max_len: usize) -> Result<Vec<BraidWord>, OracleError> {
    let mut out = Vec::new();
    for w in random_words(seed, 4, count * 8, max_len) {
        if out.len() == count {
            break;
        }
        if is_unknot(&w)? {
            out.push(w);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MoveKind {
    FreeCancellation,
    DistantCommutation,
    BraidRelation,
    Pitchfork,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MoveKind::FreeCancellation => "free-cancellation",
            MoveKind::DistantCommutation => "distant-commutation",
            MoveKind::BraidRelation => "braid-relation",
            MoveKind::Pitchfork => "pitchfork",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovePair {
    pub kind: MoveKind,
    pub left: BraidWord,
    pub right: BraidWord,
}

fn letters(pairs: &[(usize, i8)]) -> Vec<Letter> {
    pairs.iter().map(|&(g, s)| Letter::new(g, s)).collect()
}

/// Words that can be absorbed by the caps of a 4-strand plat. Twisting one
/// cap is `σ_1` or `σ_3`; carrying one cap through the other is
/// `σ_2 σ_1 σ_3 σ_2`; dragging a cap around one end of the other is
/// `σ_2 σ_1^2 σ_2`. Every one of them is a palindrome up to commuting `σ_1`
/// and `σ_3`, so the same words are absorbed by the cups.
pub fn pitchfork_words() -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for sign in [1i8, -1] {
        out.push(letters(&[(1, sign)]));
        out.push(letters(&[(3, sign)]));
        out.push(letters(&[(2, sign), (1, sign), (3, sign), (2, sign)]));
        out.push(letters(&[(2, sign), (1, sign), (1, sign), (2, sign)]));
    }
    out
}

fn splice(w: &BraidWord, at: usize, remove: usize, insert: &[Letter]) -> BraidWord {
    let mut l = w.letters.clone();
    l.splice(at..at + remove, insert.iter().copied());
    BraidWord::new(w.strands, l)
}

/// Generates `per_kind` pairs of each move on 4-strand words, starting from
/// random words of length at most `max_len`.
pub fn move_pairs(seed: u64, per_kind: usize, max_len: usize) -> Vec<MovePair> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    let hilden = pitchfork_words();
    for kind in [
        MoveKind::FreeCancellation,
        MoveKind::DistantCommutation,
        MoveKind::BraidRelation,
        MoveKind::Pitchfork,
    ] {
        let mut made = 0;
        while made < per_kind {
            let len = rng.gen_range(0..=max_len);
            let base = random_word(&mut rng, 4, len);
            let at = rng.gen_range(0..=base.len());
            let s1: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
            let (left, right) = match kind {
                MoveKind::FreeCancellation => {
                    let l = random_letter(&mut rng, 4);
                    (base.clone(), splice(&base, at, 0, &[l, l.inverse()]))
                }
                MoveKind::DistantCommutation => {
                    let s2: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
                    let a = Letter::new(1, s1);
                    let b = Letter::new(3, s2);
                    (splice(&base, at, 0, &[a, b]), splice(&base, at, 0, &[b, a]))
                }
                MoveKind::BraidRelation => {
                    let (i, j) = if rng.gen_bool(0.5) { (1, 2) } else { (2, 3) };
                    let x = letters(&[(i, s1), (j, s1), (i, s1)]);
                    let y = letters(&[(j, s1), (i, s1), (j, s1)]);
                    (splice(&base, at, 0, &x), splice(&base, at, 0, &y))
                }
                MoveKind::Pitchfork => {
                    let h = &hilden[rng.gen_range(0..hilden.len())];
                    let right = if rng.gen_bool(0.5) {
                        splice(&base, 0, 0, h)
                    } else {
                        splice(&base, base.len(), 0, h)
                    };
                    (base.clone(), right)
                }
            };
            out.push(MovePair { kind, left, right });
            made += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plat::parse_braid_word;

    #[test]
    fn corpus_is_deterministic_and_distinct() {
        let a = random_words(7, 4, 50, 6);
        let b = random_words(7, 4, 50, 6);
        assert_eq!(a, b);
        let set: BTreeSet<String> = a.iter().map(|w| w.to_string()).collect();
        assert_eq!(set.len(), a.len());
        assert!(a.iter().all(|w| w.len() <= 6 && w.strands == 4));
    }

    #[test]
    fn unknot_detection() {
        assert!(is_unknot(&parse_braid_word("4: s2").unwrap()).unwrap());
        assert!(!is_unknot(&parse_braid_word("4: s2 s2 s2").unwrap()).unwrap());
        assert!(!is_unknot(&parse_braid_word("4:").unwrap()).unwrap());
    }

    #[test]
    fn pairs_have_expected_lengths() {
        for p in move_pairs(3, 5, 6) {
            let diff = p.right.len() as i64 - p.left.len() as i64;
            match p.kind {
                MoveKind::FreeCancellation => assert_eq!(diff, 2),
                MoveKind::Pitchfork => assert!(diff == 1 || diff == 4),
                _ => assert_eq!(diff, 0),
            }
        }
    }
}
