//! Sparse Laurent polynomials with integer coefficients.
//!
//! Exponents are plain integers; what one unit means is fixed by the
//! producer. The oracle stores exponents in quarter powers of `t`, the Euler
//! characteristics store the q-degree directly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies every exponent by `k`, e.g. substituting `x -> x^k`.
    pub fn scale_exponents(&self, k: i64) -> Self {
        self.map_terms(|e, c| (e * k, c))
    }

    pub fn shift(&self, by: i64) -> Self {
        self.map_terms(|e, c| (e + by, c))
    }

    pub fn map_terms(&self, f: impl Fn(i64, i64) -> (i64, i64)) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            let (e2, c2) = f(e, c);
            out.add_term(e2, c2);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Renders with exponents divided by `unit`, so `unit = 4` prints quarter
    /// exponents as fractions of the variable.
    pub fn display(&self, var: &str, unit: i64) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().map(|(&e, &c)| (e, c)).enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {} ", sign));
            }
            let exp = format_exponent(e, unit);
            match (mag, exp) {
                (m, None) => out.push_str(&m.to_string()),
                (1, Some(x)) => out.push_str(&format!("{}{}", var, x)),
                (m, Some(x)) => out.push_str(&format!("{}{}{}", m, var, x)),
            }
        }
        out
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn format_exponent(e: i64, unit: i64) -> Option<String> {
    if e == 0 {
        return None;
    }
    if e == unit {
        return Some(String::new());
    }
    let g = gcd(e, unit);
    let (num, den) = (e / g, unit / g);
    Some(if den == 1 {
        format!("^{}", num)
    } else {
        format!("^({}/{})", num, den)
    })
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("x", 1))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.map_terms(|e, c| (e, -c))
    }
}

impl FromIterator<(i64, i64)> for LaurentPoly {
    fn from_iter<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_cancels() {
        let a: LaurentPoly = [(1, 2), (-1, 1)].into_iter().collect();
        let b: LaurentPoly = [(1, -2)].into_iter().collect();
        assert_eq!(&a + &b, LaurentPoly::monomial(-1, 1));
        assert!((&a - &a).is_zero());
        let sq = &a * &a;
        assert_eq!(sq.coeff(2), 4);
        assert_eq!(sq.coeff(0), 4);
        assert_eq!(sq.coeff(-2), 1);
        assert_eq!(a.pow(0), LaurentPoly::one());
    }

    #[test]
    fn display_quarters() {
        let p: LaurentPoly = [(-4, 1), (-12, 1), (-16, -1)].into_iter().collect();
        assert_eq!(p.display("t", 4), "t^-1 + t^-3 - t^-4");
        let h: LaurentPoly = [(2, -1), (-2, -1)].into_iter().collect();
        assert_eq!(h.display("t", 4), "-t^(1/2) - t^(-1/2)");
        assert_eq!(LaurentPoly::one().display("t", 4), "1");
        assert_eq!(LaurentPoly::zero().display("q", 1), "0");
        assert_eq!(LaurentPoly::monomial(1, 3).display("q", 1), "3q");
    }
}
