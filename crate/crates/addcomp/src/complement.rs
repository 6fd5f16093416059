//! Block construction of the additive complement.
//!
//! For each block index `k` the complement contributes
//! `V_k = U_k + a_k * {j_min(k), ..., j_max(k)}`, where `U_k` is a translate
//! set covering every residue class modulo `a_k` by the elements up to
//! `a_k`, `j_min(k) = q_k - 1`, `j_max(k) = floor(q_{k+1} a_{k+1} / a_k)`,
//! and `q_k = floor(a_{k+1} / (k^e a_k))` is the block multiplier. The full
//! complement is the union of all blocks; a finite build stores blocks
//! `1..=K` and is an exact representation of the full set on every query
//! window below the start of block `K+1`.
//!
//! Counting deduplicates members shared between adjacent blocks; blocks two
//! or more apart are verified disjoint at build time, so no further merging
//! is needed.

use crate::cover::{
    cover_exact, cover_greedy_with_cap, cover_structured, cover_validate, CoverInstance,
    DEFAULT_EXACT_CAP, DEFAULT_MODULUS_CAP,
};
use crate::error::{Error, Result};
use crate::greedy::level_ladder;
use crate::seq::Sequence;
use num::{BigUint, Integer, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Default cap on the number of members [`ComplementBlocks::members`] will
/// enumerate in one call.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

/// Block multiplier `q_k = floor(a_{k+1} / (k^e a_k))`, with the sandwich
/// check `q_k * k^e * a_k <= a_{k+1} <= (q_k + 1) * k^e * a_k`.
pub fn block_multiplier(seq: &Sequence, k: usize) -> Result<BigUint> {
    let a_k = seq.term(k)?;
    let a_next = seq.term(k + 1)?;
    let denom = BigUint::from(k).pow(seq.growth_exponent()) * a_k;
    let q = a_next / &denom;
    if &q * &denom > *a_next || *a_next > (&q + BigUint::one()) * &denom {
        return Err(Error::Precondition(format!(
            "block multiplier sandwich failed at k={k}"
        )));
    }
    if q.is_zero() {
        return Err(Error::Precondition(format!(
            "block multiplier is zero at k={k}: growth too slow"
        )));
    }
    Ok(q)
}

/// One complement block: `translates + modulus * {shift_min..=shift_max}`.
/// Translates live in `[1, modulus]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub index: usize,
    pub modulus: BigUint,
    pub translates: Vec<BigUint>,
    pub shift_min: BigUint,
    pub shift_max: BigUint,
}

impl Block {
    fn min_member(&self) -> BigUint {
        &self.translates[0] + &self.modulus * &self.shift_min
    }

    fn max_member(&self) -> BigUint {
        self.translates.last().expect("translates nonempty") + &self.modulus * &self.shift_max
    }

    /// Members within `[lo, hi]` in ascending order.
    fn members_in(&self, lo: &BigUint, hi: &BigUint, out: &mut Vec<BigUint>) {
        let mut j = self.shift_min.clone();
        if lo > &self.modulus {
            // first shift whose largest translate can reach lo
            let last = self.translates.last().expect("translates nonempty");
            if lo > last {
                let needed = (lo - last).div_ceil(&self.modulus);
                if needed > j {
                    j = needed;
                }
            }
        }
        while j <= self.shift_max {
            let base = &self.modulus * &j;
            if &base > hi {
                break;
            }
            for u in &self.translates {
                let v = &base + u;
                if &v >= lo && &v <= hi {
                    out.push(v);
                }
            }
            j += BigUint::one();
        }
    }

    /// Number of members `<= x`. Fixed-width arithmetic when everything
    /// fits; the values are exact either way.
    fn count_le(&self, x: &BigUint) -> u64 {
        if let (Some(x), Some(m), Some(j_min), Some(j_max)) = (
            x.to_u64(),
            self.modulus.to_u64(),
            self.shift_min.to_u64(),
            self.shift_max.to_u64(),
        ) {
            let mut total = 0u64;
            for u in &self.translates {
                let u = u.to_u64().expect("translate bounded by modulus");
                if u > x {
                    break;
                }
                let hi = ((x - u) / m).min(j_max);
                if hi >= j_min {
                    total += hi - j_min + 1;
                }
            }
            return total;
        }
        self.count_le_wide(x)
    }

    fn count_le_wide(&self, x: &BigUint) -> u64 {
        let mut total = 0u64;
        for u in &self.translates {
            if u > x {
                break;
            }
            let reach = (x - u) / &self.modulus;
            let hi = if reach < self.shift_max { &reach } else { &self.shift_max };
            if *hi >= self.shift_min {
                total += (hi - &self.shift_min + BigUint::one())
                    .to_u64()
                    .expect("per-block count fits u64");
            }
        }
        total
    }
}

/// A finite block representation of the complement, with precomputed
/// adjacent-block intersections for exact counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementBlocks {
    blocks: Vec<Block>,
    /// `overlaps[i]` = sorted members shared by blocks `i` and `i+1`.
    overlaps: Vec<Vec<BigUint>>,
}

#[derive(Serialize, Deserialize)]
struct BlockRepr {
    k: usize,
    #[serde(with = "crate::json::biguint_str")]
    a_k: BigUint,
    #[serde(rename = "U_k", with = "crate::json::biguint_vec")]
    u_k: Vec<BigUint>,
    #[serde(with = "crate::json::biguint_str")]
    j_min: BigUint,
    #[serde(with = "crate::json::biguint_str")]
    j_max: BigUint,
}

#[derive(Serialize, Deserialize)]
struct BlocksRepr {
    blocks: Vec<BlockRepr>,
}

impl ComplementBlocks {
    /// Validates block shape, verifies that non-adjacent blocks are disjoint
    /// as integer sets, and precomputes adjacent intersections.
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Precondition("need at least one block".into()));
        }
        for (i, b) in blocks.iter().enumerate() {
            if b.index != i + 1 {
                return Err(Error::Precondition(format!(
                    "block indices must be 1..=K, found {} at position {}",
                    b.index,
                    i + 1
                )));
            }
            if b.translates.is_empty() {
                return Err(Error::Precondition(format!("block {} has no translates", b.index)));
            }
            if b.translates.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Precondition(format!(
                    "block {} translates must be strictly increasing",
                    b.index
                )));
            }
            if b.translates[0] < BigUint::one()
                || b.translates.last().expect("nonempty") > &b.modulus
            {
                return Err(Error::Precondition(format!(
                    "block {} translates must lie in [1, modulus]",
                    b.index
                )));
            }
            if b.shift_min > b.shift_max {
                return Err(Error::Precondition(format!(
                    "block {} has empty shift range",
                    b.index
                )));
            }
        }
        // Non-adjacent disjointness: max(V_k) < min(V_{k+2}).
        for w in blocks.windows(3) {
            if w[0].max_member() >= w[2].min_member() {
                return Err(Error::Precondition(format!(
                    "blocks {} and {} overlap; only adjacent blocks may",
                    w[0].index, w[2].index
                )));
            }
        }
        let mut overlaps = Vec::with_capacity(blocks.len().saturating_sub(1));
        for w in blocks.windows(2) {
            overlaps.push(adjacent_overlap(&w[0], &w[1])?);
        }
        Ok(ComplementBlocks { blocks, overlaps })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Largest member represented by the stored blocks.
    pub fn span_max(&self) -> BigUint {
        self.blocks.last().expect("nonempty").max_member()
    }

    /// Smallest member.
    pub fn span_min(&self) -> BigUint {
        self.blocks[0].min_member()
    }

    /// Exact count of distinct members `<= x`. Errors beyond the stored span
    /// because larger members would belong to blocks that were not built.
    pub fn count(&self, x: &BigUint) -> Result<u64> {
        if *x > self.span_max() {
            return Err(Error::Span(format!(
                "count at {x} exceeds the stored block span {}",
                self.span_max()
            )));
        }
        let mut total: u64 = 0;
        for b in &self.blocks {
            total += b.count_le(x);
        }
        for ov in &self.overlaps {
            total -= ov.partition_point(|v| v <= x) as u64;
        }
        Ok(total)
    }

    /// Sorted distinct members in `[lo, hi]`, bounded by `enum_cap`.
    pub fn members(&self, lo: &BigUint, hi: &BigUint, enum_cap: u64) -> Result<Vec<BigUint>> {
        if lo > hi {
            return Err(Error::Precondition(format!("empty window [{lo}, {hi}]")));
        }
        // Candidate count before deduplication.
        let mut candidates = BigUint::zero();
        for b in &self.blocks {
            let lo_c = if lo >= &b.min_member() { lo.clone() } else { b.min_member() };
            let hi_c = if hi <= &b.max_member() { hi.clone() } else { b.max_member() };
            if lo_c > hi_c {
                continue;
            }
            let shifts = (&hi_c - &b.translates[0]) / &b.modulus + BigUint::one();
            candidates += shifts * BigUint::from(b.translates.len());
        }
        if candidates > BigUint::from(enum_cap) {
            return Err(Error::Cap(format!(
                "window [{lo}, {hi}] may contain up to {candidates} members, above the cap {enum_cap}"
            )));
        }
        let mut out = Vec::new();
        for b in &self.blocks {
            b.members_in(lo, hi, &mut out);
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        let repr = BlocksRepr {
            blocks: self
                .blocks
                .iter()
                .map(|b| BlockRepr {
                    k: b.index,
                    a_k: b.modulus.clone(),
                    u_k: b.translates.clone(),
                    j_min: b.shift_min.clone(),
                    j_max: b.shift_max.clone(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&repr).expect("blocks serialize");
        s.push('\n');
        s
    }

    pub fn from_json(data: &str) -> Result<ComplementBlocks> {
        let repr: BlocksRepr =
            serde_json::from_str(data).map_err(|e| Error::Parse(format!("blocks json: {e}")))?;
        let blocks = repr
            .blocks
            .into_iter()
            .map(|b| Block {
                index: b.k,
                modulus: b.a_k,
                translates: b.u_k,
                shift_min: b.j_min,
                shift_max: b.j_max,
            })
            .collect();
        ComplementBlocks::new(blocks)
    }

    /// Re-checks every stored translate set against the sequence it was
    /// built from: `U_k` must cover all classes modulo `a_k` and the shift
    /// ranges must match the block multipliers.
    pub fn validate_against(&self, seq: &Sequence) -> Result<()> {
        for b in &self.blocks {
            let m = b
                .modulus
                .to_u64()
                .ok_or_else(|| Error::Cap(format!("block {} modulus too large to validate", b.index)))?;
            if seq.term(b.index)? != &b.modulus {
                return Err(Error::Precondition(format!(
                    "block {} modulus {} is not term {}",
                    b.index, b.modulus, b.index
                )));
            }
            let count = seq.count(&b.modulus);
            let inst = CoverInstance::from_elements(m, &seq.terms()[..count])?;
            let translates: Vec<u64> = b
                .translates
                .iter()
                .map(|u| {
                    let v = u.to_u64().expect("translate fits once modulus does");
                    if v == m {
                        0
                    } else {
                        v
                    }
                })
                .collect();
            let (ok, uncovered) = cover_validate(&inst, &translates);
            if !ok {
                return Err(Error::Precondition(format!(
                    "block {} translate set leaves {} classes uncovered",
                    b.index,
                    uncovered.len()
                )));
            }
            let q_k = block_multiplier(seq, b.index)?;
            if b.shift_min != &q_k - BigUint::one() {
                return Err(Error::Precondition(format!(
                    "block {} shift_min {} does not match multiplier {q_k}",
                    b.index, b.shift_min
                )));
            }
            let q_next = block_multiplier(seq, b.index + 1)?;
            let expect_max = q_next * seq.term(b.index + 1)? / &b.modulus;
            if b.shift_max != expect_max {
                return Err(Error::Precondition(format!(
                    "block {} shift_max {} does not match expected {expect_max}",
                    b.index, b.shift_max
                )));
            }
        }
        Ok(())
    }
}

/// Members shared by two adjacent blocks, sorted ascending.
fn adjacent_overlap(a: &Block, b: &Block) -> Result<Vec<BigUint>> {
    let lo = a.min_member().max(b.min_member());
    let hi = a.max_member().min(b.max_member());
    if lo > hi {
        return Ok(Vec::new());
    }
    let mut left = Vec::new();
    a.members_in(&lo, &hi, &mut left);
    if left.len() as u64 > 4 * DEFAULT_ENUM_CAP {
        return Err(Error::Cap("adjacent overlap window too large".into()));
    }
    let set: HashSet<BigUint> = left.into_iter().collect();
    let mut right = Vec::new();
    b.members_in(&lo, &hi, &mut right);
    let mut shared: Vec<BigUint> = right.into_iter().filter(|v| set.contains(v)).collect();
    shared.sort();
    shared.dedup();
    Ok(shared)
}

/// Configuration for [`build_blocks`].
#[derive(Debug, Clone, Copy)]
pub struct BuildConfig {
    /// Moduli at or below this use the exact solver.
    pub exact_cap: u64,
    /// Extra repair translates allowed in structured covers; `None` derives
    /// `ceil(k/2) + 2` from the element count.
    pub extras_cap: Option<usize>,
    /// Hard cap on moduli any solver will materialize.
    pub modulus_cap: u64,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            exact_cap: DEFAULT_EXACT_CAP,
            extras_cap: None,
            modulus_cap: DEFAULT_MODULUS_CAP,
        }
    }
}

/// Result of a block build, with notes about any solver fallbacks.
#[derive(Debug, Clone)]
pub struct BlocksBuild {
    pub blocks: ComplementBlocks,
    pub notes: Vec<String>,
}

/// Builds blocks `1..=levels` from a sequence prefix. Requires terms through
/// index `levels + 2` (block `k` needs both multipliers `q_k` and
/// `q_{k+1}`). Translate sets come from the exact solver below the cap, the
/// structured cover at ladder moduli, and the greedy cover otherwise; a
/// structured failure falls back to greedy and is recorded in the notes.
pub fn build_blocks(seq: &Sequence, levels: usize, cfg: &BuildConfig) -> Result<BlocksBuild> {
    if levels == 0 {
        return Err(Error::Precondition("need at least one block".into()));
    }
    if seq.len() < levels + 2 {
        return Err(Error::Precondition(format!(
            "building {levels} blocks needs {} terms, sequence has {}",
            levels + 2,
            seq.len()
        )));
    }
    let ladder = level_ladder(seq);
    let mut notes = Vec::new();
    let mut blocks = Vec::with_capacity(levels);
    for k in 1..=levels {
        let a_k = seq.term(k)?.clone();
        let m = a_k.to_u64().ok_or_else(|| {
            Error::Cap(format!("block {k} modulus {a_k} exceeds the covering solver range"))
        })?;
        if m > cfg.modulus_cap {
            return Err(Error::Cap(format!(
                "block {k} modulus {m} exceeds the materialization cap {}",
                cfg.modulus_cap
            )));
        }
        let elements = &seq.terms()[..seq.count(&a_k)];
        let inst = CoverInstance::from_elements(m, elements)?;
        let extras_cap = cfg
            .extras_cap
            .unwrap_or_else(|| (inst.element_count() + 1) / 2 + 2);

        let solution = if m <= cfg.exact_cap {
            cover_exact(&inst, cfg.exact_cap)?
        } else if let Some(level) = ladder.levels.iter().find(|l| l.n_k == k as u64) {
            match cover_structured(elements, level.n_k, m, extras_cap, cfg.modulus_cap) {
                Ok(sol) => sol,
                Err(e) => {
                    let sol = cover_greedy_with_cap(&inst, cfg.modulus_cap)?;
                    notes.push(format!(
                        "block {k}: structured cover failed ({e}); using greedy cover of size {}",
                        sol.size()
                    ));
                    sol
                }
            }
        } else {
            cover_greedy_with_cap(&inst, cfg.modulus_cap)?
        };

        let (ok, _) = cover_validate(&inst, solution.translates());
        if !ok {
            return Err(Error::Precondition(format!(
                "block {k}: solver produced an invalid cover"
            )));
        }
        // Lift translates into [1, m]: class 0 is represented by m itself.
        let mut translates: Vec<BigUint> = solution
            .translates()
            .iter()
            .map(|&v| BigUint::from(if v == 0 { m } else { v }))
            .collect();
        translates.sort();

        let q_k = block_multiplier(seq, k)?;
        let q_next = block_multiplier(seq, k + 1)?;
        let shift_max = &q_next * seq.term(k + 1)? / &a_k;
        blocks.push(Block {
            index: k,
            modulus: a_k,
            translates,
            shift_min: &q_k - BigUint::one(),
            shift_max,
        });
    }
    Ok(BlocksBuild {
        blocks: ComplementBlocks::new(blocks)?,
        notes,
    })
}

/// Upper bound on the member count at `x` for level `k`:
/// `(floor(x/a_k) - q_k + 2) L(a_k) + sum_{i<k} (j_max(i) - j_min(i) + 1) L(a_i)`.
/// Valid for `q_k a_k <= x < (q_{k+1} - 1) a_{k+1}`; the left endpoint is
/// admitted even when the window is otherwise empty.
pub fn count_upper_bound(
    seq: &Sequence,
    blocks: &ComplementBlocks,
    x: &BigUint,
    k: usize,
) -> Result<BigUint> {
    if k == 0 || k > blocks.len() {
        return Err(Error::Precondition(format!(
            "level {k} out of range 1..={}",
            blocks.len()
        )));
    }
    let b = &blocks.blocks()[k - 1];
    let q_k = &b.shift_min + BigUint::one();
    let window_lo = &q_k * &b.modulus;
    if *x < window_lo {
        return Err(Error::Span(format!(
            "x = {x} below the level-{k} window start {window_lo}"
        )));
    }
    if *x > window_lo {
        let q_next = block_multiplier(seq, k + 1)?;
        let window_hi = (&q_next - BigUint::one()) * seq.term(k + 1)?;
        if *x >= window_hi {
            return Err(Error::Span(format!(
                "x = {x} at or beyond the level-{k} window end {window_hi}"
            )));
        }
    }
    let l_k = BigUint::from(b.translates.len());
    let mut bound = (x / &b.modulus - &q_k + BigUint::from(2u32)) * l_k;
    for b_prev in &blocks.blocks()[..k - 1] {
        let shifts = &b_prev.shift_max - &b_prev.shift_min + BigUint::one();
        bound += shifts * BigUint::from(b_prev.translates.len());
    }
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::{build_sequence, BuildCaps};
    use crate::seq::GrowthRule;
    use num::FromPrimitive;
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from_u64(v).unwrap()
    }

    fn canonical_seq(extra: usize) -> Sequence {
        let caps = BuildCaps {
            extra_terms: extra,
            ..BuildCaps::default()
        };
        build_sequence(2, GrowthRule::Linear, &caps).unwrap().0
    }

    #[test]
    fn multiplier_examples() {
        let seq = canonical_seq(0);
        assert_eq!(block_multiplier(&seq, 1).unwrap(), big(4));
        assert_eq!(block_multiplier(&seq, 2).unwrap(), big(2));
        assert_eq!(block_multiplier(&seq, 3).unwrap(), big(3));
    }

    #[test]
    fn one_block_build() {
        let seq = canonical_seq(0);
        let build = build_blocks(&seq, 1, &BuildConfig::default()).unwrap();
        let b = &build.blocks.blocks()[0];
        assert_eq!(b.translates, vec![big(1)]);
        assert_eq!(b.shift_min, big(3));
        assert_eq!(b.shift_max, big(8));
        // V_1 = {4..9}
        let members = build.blocks.members(&big(1), &big(100), 1000).unwrap();
        assert_eq!(members, (4..=9).map(big).collect::<Vec<_>>());
        assert!(build.notes.is_empty());
    }

    #[test]
    fn two_block_build() {
        let seq = canonical_seq(0);
        let build = build_blocks(&seq, 2, &BuildConfig::default()).unwrap();
        let b = &build.blocks.blocks()[1];
        assert_eq!(b.translates, vec![big(1), big(3)]);
        assert_eq!(b.shift_min, big(1));
        assert_eq!(b.shift_max, big(97));
    }

    #[test]
    fn missing_terms_are_rejected() {
        let seq = Sequence::new(vec![big(1), big(4)], 4, GrowthRule::Linear).unwrap();
        let err = build_blocks(&seq, 1, &BuildConfig::default()).unwrap_err();
        assert_eq!(err.category(), "precondition");
    }

    #[test]
    fn count_examples() {
        let seq = canonical_seq(1);
        let blocks = build_blocks(&seq, 3, &BuildConfig::default()).unwrap().blocks;
        assert_eq!(blocks.count(&big(10)).unwrap(), 6);
        assert_eq!(blocks.count(&big(130)).unwrap(), 66);
        assert_eq!(blocks.count(&big(3)).unwrap(), 0);
        assert_eq!(blocks.count(&big(8)).unwrap(), 5);
    }

    #[test]
    fn members_examples() {
        let seq = canonical_seq(0);
        let blocks = build_blocks(&seq, 2, &BuildConfig::default()).unwrap().blocks;
        assert_eq!(
            blocks.members(&big(1), &big(10), 1000).unwrap(),
            (4..=9).map(big).collect::<Vec<_>>()
        );
        assert_eq!(
            blocks.members(&big(388), &big(392), 1000).unwrap(),
            vec![big(389), big(391)]
        );
        assert_eq!(blocks.members(&big(1), &big(3), 1000).unwrap(), Vec::<BigUint>::new());
    }

    #[test]
    fn members_cap() {
        let seq = canonical_seq(0);
        let blocks = build_blocks(&seq, 2, &BuildConfig::default()).unwrap().blocks;
        let err = blocks.members(&big(1), &big(391), 10).unwrap_err();
        assert_eq!(err.category(), "cap");
    }

    #[test]
    fn narrow_and_wide_counting_agree() {
        let seq = canonical_seq(1);
        let blocks = build_blocks(&seq, 3, &BuildConfig::default()).unwrap().blocks;
        for x in [1u64, 9, 130, 391, 5_000, 99_000, 126_400] {
            let x = big(x);
            for b in blocks.blocks() {
                assert_eq!(b.count_le(&x), b.count_le_wide(&x));
            }
        }
    }

    #[test]
    fn bound_examples() {
        let seq = canonical_seq(1);
        let blocks = build_blocks(&seq, 3, &BuildConfig::default()).unwrap().blocks;
        assert_eq!(count_upper_bound(&seq, &blocks, &big(8), 2).unwrap(), big(10));
        assert_eq!(count_upper_bound(&seq, &blocks, &big(130), 2).unwrap(), big(70));
        assert_eq!(count_upper_bound(&seq, &blocks, &big(4), 1).unwrap(), big(2));
        // window errors
        assert!(count_upper_bound(&seq, &blocks, &big(7), 2).is_err());
        assert!(count_upper_bound(&seq, &blocks, &big(5), 1).is_err());
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let seq = canonical_seq(1);
        let blocks = build_blocks(&seq, 3, &BuildConfig::default()).unwrap().blocks;
        let j = blocks.to_json();
        let blocks2 = ComplementBlocks::from_json(&j).unwrap();
        assert_eq!(blocks, blocks2);
        assert_eq!(j, blocks2.to_json());
        blocks2.validate_against(&seq).unwrap();
        assert!(j.contains("\"U_k\""));
        assert!(j.contains("\"a_k\": \"130\""));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn count_matches_enumeration(x in 1u64..3_000) {
            let seq = canonical_seq(1);
            let blocks = build_blocks(&seq, 3, &BuildConfig::default()).unwrap().blocks;
            let members = blocks.members(&big(1), &big(x), 100_000).unwrap();
            prop_assert_eq!(blocks.count(&big(x)).unwrap(), members.len() as u64);
        }
    }
}
