//! Greedy construction of the thin sequence.
//!
//! Seeds are `a_1 = 1`, `a_2 = 4`. The construction proceeds in levels: the
//! level indices satisfy `n_1 = 2` and `n_{k+1} = a_{n_k}`, and while
//! building terms `a_{m+1}` for `n_k < m+1 <= n_{k+1}` each new term is the
//! least integer at or above the growth floor whose residue modulo
//! `n_{k+1}` is the smallest residue not yet used. A completed level `k`
//! therefore leaves `a_1, ..., a_{n_k}` as a complete residue system modulo
//! `n_k`, with the zero class supplied by the term equal to `n_k` itself.
//! The build is fully deterministic.

use crate::error::{Error, Result};
use crate::seq::{growth_floor, GrowthRule, Sequence};
use num::{BigUint, One, ToPrimitive, Zero};
use std::collections::HashSet;

/// Default cap on the number of generated terms. Completing level 3 needs
/// 31591 terms with entries of ~10^5 digits, so it is rejected by default.
pub const DEFAULT_TERM_CAP: usize = 64;

/// Caps for [`build_sequence`].
#[derive(Debug, Clone, Copy)]
pub struct BuildCaps {
    /// Hard bound on the total number of generated terms.
    pub max_terms: usize,
    /// Additional terms to generate beyond the last completed level.
    pub extra_terms: usize,
}

impl Default for BuildCaps {
    fn default() -> Self {
        BuildCaps {
            max_terms: DEFAULT_TERM_CAP,
            extra_terms: 0,
        }
    }
}

/// One completed level: the index `n_k` and, when built, the evaluation
/// point `x_k = a_{n_k + 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderLevel {
    pub k: usize,
    pub n_k: u64,
    pub x_k: Option<BigUint>,
}

/// The level indices realized by a sequence prefix.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LevelLadder {
    pub levels: Vec<LadderLevel>,
}

impl LevelLadder {
    pub fn level(&self, k: usize) -> Option<&LadderLevel> {
        self.levels.iter().find(|l| l.k == k)
    }

    /// Indices `n_k` of all completed levels.
    pub fn indices(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.n_k).collect()
    }
}

/// Reads the ladder off a built prefix: level `k` is listed once `n_k` terms
/// exist, and `x_k` once term `n_k + 1` exists.
pub fn level_ladder(seq: &Sequence) -> LevelLadder {
    let mut levels = Vec::new();
    let len = seq.len() as u64;
    let mut k = 1usize;
    let mut n_k = 2u64;
    while n_k <= len {
        let x_k = if n_k < len {
            Some(seq.terms()[n_k as usize].clone())
        } else {
            None
        };
        levels.push(LadderLevel { k, n_k, x_k });
        // n_{k+1} = a_{n_k}; stop once it cannot be a realized index.
        let next = &seq.terms()[(n_k - 1) as usize];
        match next.to_u64() {
            Some(v) if v > n_k => n_k = v,
            _ => break,
        }
        k += 1;
    }
    LevelLadder { levels }
}

/// Incremental construction state: the terms so far plus the residue
/// bookkeeping for the level currently being filled.
#[derive(Debug, Clone)]
pub struct GreedyState {
    terms: Vec<BigUint>,
    exponent: u32,
    rule: GrowthRule,
    /// Modulus of the level being filled (`n_{k+1}`), absent during seeds.
    target_modulus: Option<BigUint>,
    used: HashSet<BigUint>,
    /// Smallest residue not yet used; only ever increases within a level.
    cursor: BigUint,
}

impl GreedyState {
    pub fn new(rule: GrowthRule) -> Self {
        GreedyState {
            terms: Vec::new(),
            exponent: 4,
            rule,
            target_modulus: None,
            used: HashSet::new(),
            cursor: BigUint::zero(),
        }
    }

    /// Rebuilds the state for a prefix that was produced by this builder.
    pub fn from_terms(terms: &[BigUint], rule: GrowthRule) -> Result<Self> {
        let mut st = GreedyState::new(rule);
        for want in terms {
            let got = st.next_term();
            if &got != want {
                return Err(Error::Precondition(format!(
                    "terms are not a greedy-built prefix: expected {got}, found {want}"
                )));
            }
        }
        Ok(st)
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    pub fn target_modulus(&self) -> Option<&BigUint> {
        self.target_modulus.as_ref()
    }

    fn enter_level(&mut self) {
        // The new modulus is a_{n_k} where n_k is the current term count.
        let modulus = self.terms.last().expect("level entered after seeds").clone();
        self.used = self
            .terms
            .iter()
            .map(|t| t % &modulus)
            .collect::<HashSet<_>>();
        self.cursor = BigUint::zero();
        while self.used.contains(&self.cursor) {
            self.cursor += 1u32;
        }
        self.target_modulus = Some(modulus);
    }

    /// Produces the next term: the least integer at or above the growth
    /// floor whose residue modulo the target modulus is the smallest unused
    /// residue.
    pub fn next_term(&mut self) -> BigUint {
        let term = match self.terms.len() {
            0 => BigUint::one(),
            1 => BigUint::from(4u32),
            m => {
                if self.target_modulus.is_none() {
                    self.enter_level();
                }
                let modulus = self.target_modulus.clone().expect("modulus set");
                let lower = growth_floor(self.rule, self.exponent, m, &self.terms[m - 1])
                    + BigUint::one();
                let want = self.cursor.clone();
                let rem = &lower % &modulus;
                let offset = (&want + &modulus - rem) % &modulus;
                let term = lower + offset;
                self.used.insert(want);
                while self.used.contains(&self.cursor) {
                    self.cursor += 1u32;
                }
                term
            }
        };
        self.terms.push(term.clone());
        // A freshly completed level switches the target modulus.
        if let Some(modulus) = &self.target_modulus {
            if BigUint::from(self.terms.len() as u64) == *modulus {
                self.enter_level();
            }
        } else if self.terms.len() == 2 {
            self.enter_level();
        }
        term
    }
}

/// Builds the canonical sequence through `levels` completed levels plus
/// `caps.extra_terms` further terms, all within `caps.max_terms`.
pub fn build_sequence(
    levels: usize,
    rule: GrowthRule,
    caps: &BuildCaps,
) -> Result<(Sequence, LevelLadder)> {
    if levels == 0 {
        return Err(Error::Precondition("need at least one level".into()));
    }
    let mut st = GreedyState::new(rule);
    st.next_term();
    st.next_term();
    // Complete levels 2..=levels; level 1 is the seed pair.
    for _ in 2..=levels {
        let target = st
            .target_modulus()
            .expect("target modulus set after seeds")
            .clone();
        let n_next = target.to_u64().ok_or_else(|| {
            Error::Cap(format!(
                "level index {target} is far beyond any representable term cap"
            ))
        })?;
        if n_next > caps.max_terms as u64 {
            return Err(Error::Cap(format!(
                "completing the next level needs {n_next} terms, above the cap {}",
                caps.max_terms
            )));
        }
        while (st.terms().len() as u64) < n_next {
            st.next_term();
        }
    }
    for _ in 0..caps.extra_terms {
        if st.terms().len() >= caps.max_terms {
            return Err(Error::Cap(format!(
                "extra terms exceed the term cap {}",
                caps.max_terms
            )));
        }
        st.next_term();
    }
    let seq = Sequence::new(st.terms().to_vec(), 4, rule)?;
    let ladder = level_ladder(&seq);
    Ok((seq, ladder))
}

/// Checks the complete-residue-system invariant of every completed level:
/// the residues of `a_1, ..., a_{n_k}` modulo `n_k` are a permutation of
/// `0..n_k`.
pub fn validate_residue_systems(seq: &Sequence, ladder: &LevelLadder) -> Result<()> {
    for level in &ladder.levels {
        let n = level.n_k;
        let n_big = BigUint::from(n);
        let mut seen = vec![false; n as usize];
        for t in &seq.terms()[..n as usize] {
            let r = (t % &n_big).to_u64().expect("residue fits u64") as usize;
            if seen[r] {
                return Err(Error::Precondition(format!(
                    "level {}: residue {r} modulo {n} appears twice",
                    level.k
                )));
            }
            seen[r] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::Precondition(format!(
                "level {}: residue {missing} modulo {n} is missing",
                level.k
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn big(v: u64) -> BigUint {
        BigUint::from_u64(v).unwrap()
    }

    #[test]
    fn level_one_is_the_seed_pair() {
        let (seq, ladder) = build_sequence(1, GrowthRule::Linear, &BuildCaps::default()).unwrap();
        assert_eq!(seq.terms(), &[big(1), big(4)]);
        assert_eq!(ladder.levels.len(), 1);
        assert_eq!(ladder.levels[0].n_k, 2);
        assert_eq!(ladder.levels[0].x_k, None);
    }

    #[test]
    fn level_two_matches_hand_trace() {
        let (seq, ladder) = build_sequence(2, GrowthRule::Linear, &BuildCaps::default()).unwrap();
        assert_eq!(seq.terms(), &[big(1), big(4), big(130), big(31591)]);
        assert_eq!(ladder.levels.len(), 2);
        assert_eq!(ladder.levels[0].x_k, Some(big(130)));
        assert_eq!(ladder.levels[1].n_k, 4);
        assert_eq!(ladder.levels[1].x_k, None);
        validate_residue_systems(&seq, &ladder).unwrap();
    }

    #[test]
    fn next_term_examples() {
        let terms = [big(1), big(4)];
        let mut st = GreedyState::from_terms(&terms, GrowthRule::Linear).unwrap();
        assert_eq!(st.target_modulus(), Some(&big(4)));
        assert_eq!(st.next_term(), big(130));
        assert_eq!(st.next_term(), big(31591));
        // level 2 complete; modulus switches to a_4
        assert_eq!(st.target_modulus(), Some(&big(31591)));
        assert_eq!(st.next_term(), big(32349186));
    }

    #[test]
    fn extra_terms_walk_into_the_next_level() {
        let caps = BuildCaps {
            extra_terms: 2,
            ..BuildCaps::default()
        };
        let (seq, ladder) = build_sequence(2, GrowthRule::Linear, &caps).unwrap();
        assert_eq!(seq.len(), 6);
        assert_eq!(seq.terms()[4], big(32349186));
        assert_eq!(seq.terms()[5], big(101091231594));
        // x_2 = a_5 now present
        assert_eq!(ladder.levels[1].x_k, Some(big(32349186)));
    }

    #[test]
    fn ladder_examples() {
        let (seq, _) = build_sequence(2, GrowthRule::Linear, &BuildCaps::default()).unwrap();
        let prefix = Sequence::new(seq.terms()[..3].to_vec(), 4, GrowthRule::Linear).unwrap();
        let ladder = level_ladder(&prefix);
        assert_eq!(ladder.levels.len(), 1);
        assert_eq!(ladder.levels[0].x_k, Some(big(130)));
    }

    #[test]
    fn level_three_hits_the_term_cap() {
        let err = build_sequence(3, GrowthRule::Linear, &BuildCaps::default()).unwrap_err();
        assert_eq!(err.category(), "cap");
    }

    #[test]
    fn build_is_deterministic() {
        let caps = BuildCaps {
            extra_terms: 2,
            ..BuildCaps::default()
        };
        let (a, la) = build_sequence(2, GrowthRule::Linear, &caps).unwrap();
        let (b, lb) = build_sequence(2, GrowthRule::Linear, &caps).unwrap();
        assert_eq!(a, b);
        assert_eq!(la, lb);
    }

    #[test]
    fn growth_invariant_linear_rule() {
        let caps = BuildCaps {
            extra_terms: 2,
            ..BuildCaps::default()
        };
        let (seq, _) = build_sequence(2, GrowthRule::Linear, &caps).unwrap();
        for m in 1..seq.len() {
            let m5 = BigUint::from(m).pow(5);
            assert!(seq.terms()[m] >= m5 * &seq.terms()[m - 1]);
        }
    }

    #[test]
    fn from_terms_rejects_non_greedy_prefixes() {
        let err = GreedyState::from_terms(&[big(1), big(5)], GrowthRule::Linear).unwrap_err();
        assert_eq!(err.category(), "precondition");
    }
}
