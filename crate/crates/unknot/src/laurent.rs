//! Exact single-variable Laurent polynomials with big-integer coefficients.
//!
//! Exponents are plain integers. The Jones polynomial reuses this type with
//! exponents measured in half-steps of t (exponent 1 means t^{1/2}); the
//! display and JSON helpers take a flag for that convention.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Map from exponent to nonzero exact integer coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPolynomial { terms }
    }

    /// Builds from (exponent, coefficient) pairs, summing duplicates.
    pub fn from_terms<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by the monomial c·t^k.
    pub fn mul_monomial(&self, exp: i64, coeff: &BigInt) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(&e, c)| (e + exp, c * coeff)).collect();
        LaurentPolynomial { terms }
    }

    /// Substitutes t ↦ t⁻¹.
    pub fn invert_variable(&self) -> Self {
        let terms = self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect();
        LaurentPolynomial { terms }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; returns None when `self` is not a multiple of `divisor`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dexp, dcoeff) = divisor.terms.iter().next_back().map(|(&e, c)| (e, c.clone()))?;
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while !rem.is_zero() {
            let (rexp, rcoeff) = rem.terms.iter().next_back().map(|(&e, c)| (e, c.clone()))?;
            let (q, r) = num_integer::Integer::div_rem(&rcoeff, &dcoeff);
            if !r.is_zero() {
                return None;
            }
            let qexp = rexp - dexp;
            quo.add_term(qexp, q.clone());
            let piece = divisor.mul_monomial(qexp, &q);
            rem = &rem - &piece;
            if let Some(new_max) = rem.max_exp() {
                if new_max >= rexp {
                    return None; // no progress: not divisible
                }
            }
        }
        Some(quo)
    }

    /// Multiplies by ±t^k so the lowest exponent is 0 and the lowest-degree
    /// coefficient is positive. The zero polynomial is unchanged.
    pub fn normalize_alexander(&self) -> Self {
        match self.min_exp() {
            None => Self::zero(),
            Some(min) => {
                let low = &self.terms[&min];
                let sign = if low.is_negative() { BigInt::from(-1) } else { BigInt::one() };
                self.mul_monomial(-min, &sign)
            }
        }
    }

    /// Canonical text rendering: terms in ascending exponent order.
    ///
    /// With `half_exponents` set, a stored exponent k renders as t^{k/2}.
    pub fn render(&self, var: &str, half_exponents: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&exp, coeff)) in self.terms.iter().enumerate() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = if half_exponents {
                if exp == 0 {
                    String::new()
                } else if exp % 2 == 0 {
                    format!("{var}^{}", exp / 2)
                } else {
                    format!("{var}^{exp}/2")
                }
            } else if exp == 0 {
                String::new()
            } else {
                format!("{var}^{exp}")
            };
            let power = if power == format!("{var}^1") { var.to_string() } else { power };
            if power.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}*{power}"));
            }
        }
        out
    }

    /// JSON value: array of {"exp": "...", "coeff": "..."} in ascending order.
    pub fn to_json(&self, half_exponents: bool) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&exp, coeff)| {
                let e = if half_exponents {
                    if exp % 2 == 0 {
                        format!("{}", exp / 2)
                    } else {
                        format!("{exp}/2")
                    }
                } else {
                    format!("{exp}")
                };
                serde_json::json!({ "exp": e, "coeff": coeff.to_string() })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        let terms = self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect();
        LaurentPolynomial { terms }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("t", false))
    }
}
