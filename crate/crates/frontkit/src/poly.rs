//! Laurent polynomials in one variable with `i64` coefficients.
//!
//! This is the coefficient arithmetic used by the Kauffman bracket and the
//! ruling polynomial. Only the handful of ring operations those computations
//! need are provided; exponents may be negative.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// A Laurent polynomial `sum c_e * x^e` with integer coefficients.
///
/// Internally a sorted exponent -> coefficient map with no zero entries, so
/// equality is structural equality of the reduced form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The monomial `c * x^e`.
    pub fn monomial(exponent: i64, coefficient: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coefficient != 0 {
            terms.insert(exponent, coefficient);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c * x^e` in place.
    pub fn add_term(&mut self, exponent: i64, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.terms.remove(&exponent);
        }
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff this is the constant polynomial `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    /// The coefficient of `x^e`.
    pub fn coeff(&self, exponent: i64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// Iterates over `(exponent, coefficient)` pairs in increasing exponent
    /// order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True iff there are no nonzero terms (same as [`is_zero`](Self::is_zero)).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest exponent with nonzero coefficient, if any.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with nonzero coefficient, if any.
    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Sum of the coefficients, i.e. the evaluation at `x = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Multiplies by `x^e` (shifts every exponent).
    pub fn shifted(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, &c)| (k + e, c)).collect(),
        }
    }

    /// Substitutes `x -> x^-1` (mirrors every exponent).
    pub fn inverted(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, &c)| (-k, c)).collect(),
        }
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, c);
        }
        out
    }

    /// Ring product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in other.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Scales every coefficient.
    pub fn scaled(&self, by: i64) -> Self {
        if by == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e, c * by)).collect(),
        }
    }

    /// `self^n` for small non-negative `n`.
    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Exact division: returns `q` with `self = q * divisor` when such a
    /// Laurent polynomial with integer coefficients exists, `None` otherwise.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (&lead_e, &lead_c) = divisor.terms.iter().next_back().unwrap();
        // Any exact quotient has its low exponent bounded below by this.
        let floor = self.min_exponent().unwrap() - divisor.min_exponent().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (&re, &rc) = rem.terms.iter().next_back().unwrap();
            if rc % lead_c != 0 {
                return None;
            }
            let (qe, qc) = (re - lead_e, rc / lead_c);
            if qe < floor {
                return None;
            }
            quot.add_term(qe, qc);
            for (&e, &c) in &divisor.terms {
                rem.add_term(e + qe, -c * qc);
            }
            // Progress check: the leading exponent must strictly drop.
            if rem.terms.iter().next_back().map(|(&e, _)| e) >= Some(re) {
                return None;
            }
        }
        Some(quot)
    }

    /// Renders with an explicit variable name, e.g. `"A"` or `"z"`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            let coeff_part = if mag == 1 && e != 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match e {
                0 => String::new(),
                1 => var.to_owned(),
                _ => format!("{var}^{e}"),
            };
            if coeff_part.is_empty() {
                out.push_str(&var_part);
            } else if var_part.is_empty() {
                out.push_str(&coeff_part);
            } else {
                out.push_str(&format!("{coeff_part}{var_part}"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl Serialize for LaurentPoly {
    /// Serializes as an exponent -> coefficient map with string keys in
    /// increasing exponent order, e.g. `{"-4": 1, "0": 2}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.iter() {
            map.serialize_entry(&e.to_string(), &c)?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_one() {
        assert!(LaurentPoly::zero().is_zero());
        assert!(LaurentPoly::one().is_one());
        assert!(!LaurentPoly::monomial(1, 1).is_one());
        assert_eq!(LaurentPoly::monomial(3, 0), LaurentPoly::zero());
    }

    #[test]
    fn cancellation_is_structural() {
        let mut p = LaurentPoly::monomial(2, 5);
        p.add_term(2, -5);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn product_with_negative_exponents() {
        // (x + x^-1)^2 = x^2 + 2 + x^-2
        let p = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
        let sq = p.mul(&p);
        assert_eq!(sq, LaurentPoly::from_terms([(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(sq.eval_at_one(), 4);
    }

    #[test]
    fn shift_and_invert() {
        let p = LaurentPoly::from_terms([(0, 1), (3, -2)]);
        assert_eq!(p.shifted(-3), LaurentPoly::from_terms([(-3, 1), (0, -2)]));
        assert_eq!(p.inverted(), LaurentPoly::from_terms([(0, 1), (-3, -2)]));
        assert_eq!(p.inverted().inverted(), p);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let d = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
        assert_eq!(d.pow(0), LaurentPoly::one());
        assert_eq!(d.pow(3), d.mul(&d).mul(&d));
    }

    #[test]
    fn display_is_readable() {
        let p = LaurentPoly::from_terms([(-4, 1), (-12, 1), (-16, -1)]);
        assert_eq!(p.display_with("A"), "-A^-16 + A^-12 + A^-4");
        assert_eq!(LaurentPoly::zero().display_with("A"), "0");
        assert_eq!(LaurentPoly::from_terms([(0, 2)]).display_with("z"), "2");
        assert_eq!(LaurentPoly::from_terms([(1, -1)]).display_with("z"), "-z");
    }

    #[test]
    fn serializes_as_ordered_map() {
        let p = LaurentPoly::from_terms([(-4, 1), (8, -3)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"-4":1,"8":-3}"#);
    }

    #[test]
    fn exact_division_inverts_multiplication() {
        let d = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
        let p = LaurentPoly::from_terms([(3, 2), (0, -1), (-5, 7)]);
        let prod = p.mul(&d);
        assert_eq!(prod.div_exact(&d), Some(p.clone()));
        assert_eq!(prod.div_exact(&p), Some(d.clone()));
        assert_eq!(d.div_exact(&d), Some(LaurentPoly::one()));
        assert_eq!(LaurentPoly::zero().div_exact(&d), Some(LaurentPoly::zero()));
    }

    #[test]
    fn inexact_division_is_refused() {
        let d = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
        let one = LaurentPoly::one();
        assert_eq!(one.div_exact(&d), None);
        assert_eq!(one.div_exact(&LaurentPoly::zero()), None);
        // Coefficient non-divisibility.
        let p = LaurentPoly::from_terms([(1, 3)]);
        let q = LaurentPoly::from_terms([(0, 2)]);
        assert_eq!(p.div_exact(&q), None);
        // x divided by x - 1 has no Laurent-polynomial quotient.
        let x = LaurentPoly::monomial(1, 1);
        let xm1 = LaurentPoly::from_terms([(1, 1), (0, -1)]);
        assert_eq!(x.div_exact(&xm1), None);
    }
}
