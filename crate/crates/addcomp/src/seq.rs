//! Finite prefixes of rapidly growing integer sequences and their exact
//! counting functions.
//!
//! A [`Sequence`] stores a strictly increasing prefix `a_1 < a_2 < ...` of
//! arbitrary-precision positive integers, together with the growth contract
//! every consecutive pair must satisfy:
//!
//! ```text
//! a_{m+1} >= f(m) * m^e * a_m
//! ```
//!
//! where `e` is the growth exponent (4 by default) and `f` is a named
//! divergent factor (`f(m) = m` for the linear rule). Counting queries are
//! exact on `[1, a_N]` and never extrapolated: the terms grow so fast that
//! silent extrapolation would hide construction bugs. All derived ratios are
//! exact rationals, never floats.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, BigUint, One};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Named rule for the divergent factor `f(m)` in the growth requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowthRule {
    /// `f(m) = m`
    Linear,
    /// `f(m) = m^2`
    Quadratic,
}

impl GrowthRule {
    pub fn factor(&self, m: usize) -> BigUint {
        let m = BigUint::from(m);
        match self {
            GrowthRule::Linear => m,
            GrowthRule::Quadratic => &m * &m,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GrowthRule::Linear => "linear",
            GrowthRule::Quadratic => "quadratic",
        }
    }
}

impl fmt::Display for GrowthRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GrowthRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(GrowthRule::Linear),
            "quadratic" => Ok(GrowthRule::Quadratic),
            other => Err(Error::Parse(format!("unknown growth rule {other:?}"))),
        }
    }
}

/// A validated strictly increasing prefix of a fast-growing sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sequence {
    #[serde(with = "crate::json::biguint_vec")]
    terms: Vec<BigUint>,
    growth_exponent: u32,
    growth_factor_rule: GrowthRule,
}

/// Minimum required for `a_{m+1}` given `a_m` at 1-based index `m`:
/// `f(m) * m^e * a_m`.
pub fn growth_floor(rule: GrowthRule, exponent: u32, m: usize, a_m: &BigUint) -> BigUint {
    rule.factor(m) * BigUint::from(m).pow(exponent) * a_m
}

impl Sequence {
    /// Validates and wraps a term list. Terms must be >= 1, strictly
    /// increasing, and every consecutive pair must meet the growth floor.
    pub fn new(terms: Vec<BigUint>, exponent: u32, rule: GrowthRule) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Precondition("sequence must have at least one term".into()));
        }
        if terms[0] < BigUint::one() {
            return Err(Error::Precondition("sequence terms must be positive".into()));
        }
        for m in 1..terms.len() {
            if terms[m] <= terms[m - 1] {
                return Err(Error::Precondition(format!(
                    "terms must be strictly increasing: term {} = {} <= term {} = {}",
                    m + 1,
                    terms[m],
                    m,
                    terms[m - 1]
                )));
            }
            let floor = growth_floor(rule, exponent, m, &terms[m - 1]);
            if terms[m] < floor {
                return Err(Error::Precondition(format!(
                    "growth violated at index {}: {} < {}",
                    m + 1,
                    terms[m],
                    floor
                )));
            }
        }
        Ok(Sequence {
            terms,
            growth_exponent: exponent,
            growth_factor_rule: rule,
        })
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn growth_exponent(&self) -> u32 {
        self.growth_exponent
    }

    pub fn growth_rule(&self) -> GrowthRule {
        self.growth_factor_rule
    }

    /// 1-based term access.
    pub fn term(&self, k: usize) -> Result<&BigUint> {
        if k == 0 || k > self.terms.len() {
            return Err(Error::Precondition(format!(
                "term index {k} out of range 1..={}",
                self.terms.len()
            )));
        }
        Ok(&self.terms[k - 1])
    }

    pub fn last(&self) -> &BigUint {
        self.terms.last().expect("sequence is nonempty")
    }

    /// Counting function: number of stored terms `<= x`. Exact on the stored
    /// prefix; for `x` beyond the last term this is the count of stored terms.
    pub fn count(&self, x: &BigUint) -> usize {
        self.terms.partition_point(|t| t <= x)
    }

    /// Largest stored term `<= x`. Errors when `x` is below the first term.
    pub fn largest_le(&self, x: &BigUint) -> Result<&BigUint> {
        let n = self.count(x);
        if n == 0 {
            return Err(Error::Precondition(format!(
                "no term <= {x}: first term is {}",
                self.terms[0]
            )));
        }
        Ok(&self.terms[n - 1])
    }

    /// Exact counting snapshot at `x`, optionally carrying a complement count.
    pub fn snapshot(&self, x: &BigUint, b_of_x: Option<u64>) -> CountingSnapshot {
        let a_of_x = self.count(x) as u64;
        let a_star = if a_of_x == 0 {
            None
        } else {
            Some(self.terms[a_of_x as usize - 1].clone())
        };
        CountingSnapshot {
            x: x.clone(),
            a_of_x,
            a_star,
            b_of_x,
        }
    }

    /// Exact growth diagnostics for every consecutive pair: at index `m`
    /// (1-based) reports `a_{m+1} / (m * a_m)` and `a_{m+1} / (m^e * a_m)`.
    /// Divergence of the first ratio is the hypothesis under which a thin
    /// sequence admits an exact complement; the second measures the slack
    /// over the raw power growth floor.
    pub fn growth_ratios(&self) -> Vec<GrowthRatio> {
        let mut out = Vec::new();
        for m in 1..self.terms.len() {
            let next = BigInt::from(self.terms[m].clone());
            let m_big = BigInt::from(m);
            let a_m = BigInt::from(self.terms[m - 1].clone());
            let ratio_linear = BigRational::new(next.clone(), &m_big * &a_m);
            let ratio_growth =
                BigRational::new(next, m_big.pow(self.growth_exponent) * a_m);
            out.push(GrowthRatio {
                index: m,
                ratio_linear,
                ratio_growth,
            });
        }
        out
    }

    /// Canonical JSON form; round-trips bit-exactly through [`Sequence::from_json`].
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("sequence serializes");
        s.push('\n');
        s
    }

    pub fn from_json(data: &str) -> Result<Sequence> {
        let raw: Sequence =
            serde_json::from_str(data).map_err(|e| Error::Parse(format!("sequence json: {e}")))?;
        Sequence::new(raw.terms, raw.growth_exponent, raw.growth_factor_rule)
    }
}

/// Exact growth diagnostics at one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRatio {
    /// 1-based index `m` of the pair `(a_m, a_{m+1})`.
    pub index: usize,
    /// `a_{m+1} / (m * a_m)`
    pub ratio_linear: BigRational,
    /// `a_{m+1} / (m^e * a_m)`
    pub ratio_growth: BigRational,
}

/// Exact counting-function values at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingSnapshot {
    pub x: BigUint,
    pub a_of_x: u64,
    /// Largest term `<= x`; present iff `a_of_x >= 1`.
    pub a_star: Option<BigUint>,
    pub b_of_x: Option<u64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from_u64(v).unwrap()
    }

    fn seq(terms: &[u64]) -> Sequence {
        Sequence::new(terms.iter().map(|&t| big(t)).collect(), 4, GrowthRule::Linear).unwrap()
    }

    #[test]
    fn count_examples() {
        let s = seq(&[1, 4, 130, 31591]);
        assert_eq!(s.count(&big(4)), 2);
        assert_eq!(s.count(&big(130)), 3);
        assert_eq!(s.count(&big(3)), 1);
    }

    #[test]
    fn largest_le_examples() {
        let s = seq(&[1, 4, 130]);
        assert_eq!(s.largest_le(&big(10)).unwrap(), &big(4));
        assert_eq!(s.largest_le(&big(130)).unwrap(), &big(130));
        assert_eq!(s.largest_le(&big(129)).unwrap(), &big(4));
        assert!(s.largest_le(&big(0)).is_err());
    }

    #[test]
    fn growth_ratio_examples() {
        let two_terms = seq(&[1, 4]);
        let r = two_terms.growth_ratios();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].ratio_linear, BigRational::from_integer(4.into()));
        assert_eq!(r[0].ratio_growth, BigRational::from_integer(4.into()));

        let three = seq(&[1, 4, 130]);
        let r = three.growth_ratios();
        assert_eq!(r[1].ratio_linear, BigRational::new(130.into(), 8.into()));
        assert_eq!(r[1].ratio_growth, BigRational::new(130.into(), 64.into()));

        let four = seq(&[1, 4, 130, 31591]);
        let r = four.growth_ratios();
        assert_eq!(r[2].ratio_growth, BigRational::new(31591.into(), 10530.into()));
    }

    #[test]
    fn validation_rejects_bad_sequences() {
        assert!(Sequence::new(vec![], 4, GrowthRule::Linear).is_err());
        // not increasing
        assert!(Sequence::new(vec![big(4), big(4)], 4, GrowthRule::Linear).is_err());
        // growth floor violated at m=2: needs >= 2*16*4 = 128
        assert!(Sequence::new(vec![big(1), big(4), big(127)], 4, GrowthRule::Linear).is_err());
        assert!(Sequence::new(vec![big(1), big(4), big(128)], 4, GrowthRule::Linear).is_ok());
    }

    #[test]
    fn snapshot_fields() {
        let s = seq(&[1, 4, 130]);
        let snap = s.snapshot(&big(10), Some(6));
        assert_eq!(snap.a_of_x, 2);
        assert_eq!(snap.a_star, Some(big(4)));
        assert_eq!(snap.b_of_x, Some(6));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let s = seq(&[1, 4, 130, 31591]);
        let j = s.to_json();
        let s2 = Sequence::from_json(&j).unwrap();
        assert_eq!(s, s2);
        assert_eq!(j, s2.to_json());
        assert!(j.contains("\"31591\""));
        assert!(j.contains("\"linear\""));
    }

    proptest! {
        #[test]
        fn count_is_monotone(x in 1u64..40_000, y in 1u64..40_000) {
            let s = seq(&[1, 4, 130, 31591]);
            let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
            prop_assert!(s.count(&big(lo)) <= s.count(&big(hi)));
        }

        #[test]
        fn count_of_largest_le_matches(x in 1u64..40_000) {
            let s = seq(&[1, 4, 130, 31591]);
            let a_star = s.largest_le(&big(x)).unwrap().clone();
            prop_assert_eq!(s.count(&a_star), s.count(&big(x)));
        }
    }
}
