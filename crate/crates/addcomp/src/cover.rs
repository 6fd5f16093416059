//! Residue covering numbers.
//!
//! For a modulus `m` and the residues of a set of elements in `[1, m]`, the
//! covering number `L(m)` is the least number of translates `b_1, ..., b_l`
//! such that the sums `element + b_j` meet every residue class modulo `m`.
//! A valid cover always satisfies `l * k >= m` where `k` is the element
//! count, so `ceil(uncovered / |residues|)` is a sound lower bound during
//! search.
//!
//! Three solvers are provided:
//!
//! * [`cover_exact`] — depth-first branch and bound, branching on the
//!   smallest uncovered class (each candidate translate must cover it),
//!   pruned by the counting bound above. A second pass reconstructs the
//!   lexicographically smallest optimal translate list, where candidates are
//!   ordered by value in `1..=m` (a translate congruent to 0 is ordered as
//!   `m`, matching translate sets drawn from `[1, m]`). Results are
//!   deterministic for any input.
//! * [`cover_greedy`] — picks the translate covering the most currently
//!   uncovered classes, ties broken by smallest value in the same order.
//!   Valid but only an upper bound.
//! * [`cover_structured`] — the arithmetic-progression cover `j*n mod m` for
//!   `j = 1..=ceil(m/n)`, applicable when the elements cover every class
//!   modulo `n`. When `n` does not divide `m` the progression can leave
//!   gaps; a bounded greedy repair is attempted and an error is returned if
//!   the gap set is too large to repair.
//!
//! Stored solutions are canonical: translate values reduced into `[0, m)`
//! and sorted ascending.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use num::{BigUint, ToPrimitive};
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

/// Default modulus cap for the exact solver.
pub const DEFAULT_EXACT_CAP: u64 = 1 << 14;

/// Default cap on moduli the greedy/structured solvers will materialize.
pub const DEFAULT_MODULUS_CAP: u64 = 1 << 22;

/// One covering problem: a modulus and the distinct residues of the
/// underlying elements, which may be fewer than the element count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverInstance {
    modulus: u64,
    residues: Vec<u64>,
    element_count: usize,
}

impl CoverInstance {
    pub fn new(modulus: u64, residues: &[u64], element_count: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Precondition("modulus must be positive".into()));
        }
        if residues.is_empty() {
            return Err(Error::Precondition("residue set must be nonempty".into()));
        }
        let mut rs: Vec<u64> = residues.to_vec();
        rs.sort_unstable();
        rs.dedup();
        if let Some(&bad) = rs.iter().find(|&&r| r >= modulus) {
            return Err(Error::Precondition(format!(
                "residue {bad} not in [0, {modulus})"
            )));
        }
        if element_count < rs.len() {
            return Err(Error::Precondition(format!(
                "element count {element_count} below distinct residue count {}",
                rs.len()
            )));
        }
        Ok(CoverInstance {
            modulus,
            residues: rs,
            element_count,
        })
    }

    /// Builds the instance for `elements` reduced modulo `m`; the element
    /// count is the full list length even when residues collide.
    pub fn from_elements(modulus: u64, elements: &[BigUint]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Precondition("modulus must be positive".into()));
        }
        let m = BigUint::from(modulus);
        let residues: Vec<u64> = elements
            .iter()
            .map(|e| (e % &m).to_u64().expect("residue fits u64"))
            .collect();
        CoverInstance::new(modulus, &residues, elements.len())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn element_count(&self) -> usize {
        self.element_count
    }
}

/// How a solution's size relates to the true covering number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    ExactMinimum,
    UpperBound,
    Structured,
}

impl Exactness {
    pub fn name(&self) -> &'static str {
        match self {
            Exactness::ExactMinimum => "exact-minimum",
            Exactness::UpperBound => "upper-bound",
            Exactness::Structured => "structured",
        }
    }
}

impl std::fmt::Display for Exactness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A validated translate set, canonicalized into `[0, m)` and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    translates: Vec<u64>,
    exactness: Exactness,
}

impl CoverSolution {
    pub fn translates(&self) -> &[u64] {
        &self.translates
    }

    pub fn size(&self) -> usize {
        self.translates.len()
    }

    pub fn exactness(&self) -> Exactness {
        self.exactness
    }
}

/// Checks whether `translates` covers every class modulo the instance
/// modulus; returns the sorted uncovered classes otherwise.
pub fn cover_validate(inst: &CoverInstance, translates: &[u64]) -> (bool, Vec<u64>) {
    let m = inst.modulus as usize;
    let mut covered = BitSet::new(m);
    for &b in translates {
        debug_assert!(b < inst.modulus);
        for &r in &inst.residues {
            covered.set(((r + b) % inst.modulus) as usize);
        }
    }
    if covered.all_set() {
        (true, Vec::new())
    } else {
        (false, covered.iter_unset().map(|c| c as u64).collect())
    }
}

/// Candidate order: translate values are ranked `1, 2, ..., m-1, 0`, i.e. by
/// their representative in `[1, m]`.
#[inline]
fn rank(value: u64, m: u64) -> u64 {
    if value == 0 {
        m
    } else {
        value
    }
}

#[inline]
fn value_of_rank(rank: u64, m: u64) -> u64 {
    if rank == m {
        0
    } else {
        rank
    }
}

fn canonical(mut values: Vec<u64>, exactness: Exactness) -> CoverSolution {
    values.sort_unstable();
    values.dedup();
    CoverSolution {
        translates: values,
        exactness,
    }
}

fn check_materializable(m: u64, cap: u64) -> Result<usize> {
    if m > cap {
        return Err(Error::Cap(format!(
            "modulus {m} exceeds solver materialization cap {cap}"
        )));
    }
    usize::try_from(m).map_err(|_| Error::Cap(format!("modulus {m} does not fit in memory")))
}

/// Greedy cover with the default materialization cap.
pub fn cover_greedy(inst: &CoverInstance) -> Result<CoverSolution> {
    cover_greedy_with_cap(inst, DEFAULT_MODULUS_CAP)
}

pub fn cover_greedy_with_cap(inst: &CoverInstance, cap: u64) -> Result<CoverSolution> {
    let m_us = check_materializable(inst.modulus, cap)?;
    Ok(canonical(
        greedy_core(inst.modulus, m_us, &inst.residues),
        Exactness::UpperBound,
    ))
}

/// Heap key packing: maximize fresh-coverage count, then minimize rank.
/// Requires m < 2^32 (guaranteed by the modulus caps).
#[inline]
fn heap_key(cnt: u32, v: u64, m: u64) -> u64 {
    ((cnt as u64) << 32) | (m - rank(v, m))
}

#[inline]
fn heap_value(key: u64, m: u64) -> u64 {
    value_of_rank(m - (key & 0xFFFF_FFFF), m)
}

/// Core greedy loop: repeatedly take the translate covering the most
/// uncovered classes (ties by smallest rank) using a lazy max-heap over
/// per-candidate fresh-coverage counts. Stale entries are skipped on pop and
/// the heap is rebuilt when lazy insertions dominate, keeping memory O(m).
fn greedy_core(m: u64, m_us: usize, residues: &[u64]) -> Vec<u64> {
    let k = residues.len();
    let mut counts: Vec<u32> = vec![k as u32; m_us];
    let mut heap: BinaryHeap<u64> =
        BinaryHeap::from((0..m).map(|v| heap_key(k as u32, v, m)).collect::<Vec<_>>());
    let mut covered = BitSet::new(m_us);
    let mut chosen = Vec::new();
    while !covered.all_set() {
        let key = heap.pop().expect("heap nonempty while classes uncovered");
        let v = heap_value(key, m);
        let cnt = (key >> 32) as u32;
        if counts[v as usize] != cnt {
            continue; // stale
        }
        debug_assert!(cnt > 0);
        chosen.push(v);
        for &r in residues {
            let c = (r + v) % m;
            if covered.set(c as usize) {
                // every candidate that would have covered c freshly loses one
                for &r2 in residues {
                    let w = (c + m - r2) % m;
                    let wc = &mut counts[w as usize];
                    *wc -= 1;
                    if *wc > 0 {
                        heap.push(heap_key(*wc, w, m));
                    }
                }
            }
        }
        if heap.len() > 4 * m_us + 64 {
            let live: Vec<u64> = (0..m)
                .filter(|&w| counts[w as usize] > 0)
                .map(|w| heap_key(counts[w as usize], w, m))
                .collect();
            heap = BinaryHeap::from(live);
        }
    }
    chosen
}

/// Work budget above which the windowed DP is not attempted.
const DP_BUDGET: u128 = 300_000_000;

/// Residue span up to which the windowed DP applies.
const DP_SPAN_MAX: u64 = 14;

fn dp_applicable(m: u64, residues: &[u64]) -> bool {
    let span = residues.last().expect("nonempty") - residues[0];
    span >= 1
        && span <= DP_SPAN_MAX
        && m > span
        && (m as u128) << (2 * span + 1) <= DP_BUDGET
}

/// Exact minimum cover, followed by deterministic reconstruction of the
/// lexicographically smallest optimal translate list.
///
/// The optimum is computed by a sliding-window DP over translate positions
/// when the residue span is small (the window of positions that can cover a
/// class has width `span + 1`, so states are `span`-bit vectors), and by
/// branch and bound otherwise. Both routes give the same answer; the DP
/// keeps narrow-span instances with large moduli tractable, where branch
/// and bound would have to close a wide gap between the counting bound and
/// the true optimum.
pub fn cover_exact(inst: &CoverInstance, exact_cap: u64) -> Result<CoverSolution> {
    let m = inst.modulus;
    if m > exact_cap {
        return Err(Error::Cap(format!(
            "modulus {m} exceeds exact-search cap {exact_cap}"
        )));
    }
    let m_us = m as usize;
    let residues = &inst.residues;

    // A single residue class forces one translate per class.
    if residues.len() == 1 {
        return Ok(canonical((0..m).collect(), Exactness::ExactMinimum));
    }

    let use_dp = dp_applicable(m, residues);
    let optimal = if use_dp {
        let free = vec![PositionRule::Free; m_us];
        dp_min_ones(m_us, residues, &free).expect("unconstrained cover exists")
    } else {
        let greedy = greedy_core(m, m_us, residues);
        let lower = div_ceil(m_us, residues.len());
        let mut best = greedy.len();
        if best > lower {
            let mut search = Search {
                m,
                residues,
                covered: BitSet::new(m_us),
                chosen: 0,
                best,
                lower,
                found_lower: false,
            };
            search.optimize();
            best = search.best;
        }
        best
    };

    // Lexicographic reconstruction: extend by the smallest-ranked translate
    // that still admits a completion within the optimal size.
    let mut covered = BitSet::new(m_us);
    let mut rules = vec![PositionRule::Free; m_us];
    let mut fixed: Vec<u64> = Vec::with_capacity(optimal);
    let mut next_rank = 1u64;
    while !covered.all_set() {
        let budget = optimal.checked_sub(fixed.len() + 1).ok_or_else(|| {
            Error::Precondition("internal: optimal cover size underestimated".into())
        })?;
        let mut advanced = false;
        let mut r_cursor = next_rank;
        while r_cursor <= m {
            let v = value_of_rank(r_cursor, m);
            let newly = apply(&mut covered, m, residues, v);
            if newly.is_empty() {
                r_cursor += 1;
                continue;
            }
            let feasible = if covered.all_set() {
                true
            } else if use_dp {
                rules[v as usize] = PositionRule::ForcedOne;
                for r in next_rank..r_cursor {
                    rules[value_of_rank(r, m) as usize] = PositionRule::ForcedZero;
                }
                let fits =
                    dp_min_ones(m_us, residues, &rules).is_some_and(|need| need <= optimal);
                if !fits {
                    rules[v as usize] = PositionRule::Free;
                    for r in next_rank..r_cursor {
                        rules[value_of_rank(r, m) as usize] = PositionRule::Free;
                    }
                }
                fits
            } else {
                completion_exists(m, residues, &mut covered, budget, r_cursor + 1)
            };
            if feasible {
                fixed.push(v);
                next_rank = r_cursor + 1;
                advanced = true;
                break;
            }
            undo(&mut covered, &newly);
            r_cursor += 1;
        }
        if !advanced {
            return Err(Error::Precondition(
                "internal: failed to reconstruct an optimal cover".into(),
            ));
        }
    }
    debug_assert_eq!(fixed.len(), optimal);
    Ok(canonical(fixed, Exactness::ExactMinimum))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PositionRule {
    Free,
    ForcedOne,
    ForcedZero,
}

/// Minimum number of selected positions subject to per-position rules such
/// that every class `c` has a selected position among `(c - r) mod m` for
/// `r` in `residues`. Sliding-window DP over positions `0..m` with
/// `span`-bit states; the cyclic seam is closed by enumerating the initial
/// window. Returns `None` when the rules are unsatisfiable.
fn dp_min_ones(m: usize, residues: &[u64], rules: &[PositionRule]) -> Option<usize> {
    let r_min = residues[0];
    let w = (residues.last().expect("nonempty") - r_min) as usize;
    debug_assert!(w >= 1 && m > w);
    // Class c is covered iff some position (c' - d) mod m is selected, where
    // d ranges over the normalized offsets and c' = (c - r_min) mod m runs
    // over all classes exactly once. Window bit j of `span+1` bits holds
    // position p - w + j; offset d corresponds to bit w - d.
    let mut cover_mask: u32 = 0;
    for &r in residues {
        cover_mask |= 1 << (w - (r - r_min) as usize);
    }
    let states = 1usize << w;
    let state_mask = (states - 1) as u32;
    const INF: u32 = u32::MAX;

    let allowed = |pos: usize, bit: u32| -> bool {
        match rules[pos] {
            PositionRule::Free => true,
            PositionRule::ForcedOne => bit == 1,
            PositionRule::ForcedZero => bit == 0,
        }
    };

    let mut best: Option<usize> = None;
    let mut dp = vec![INF; states];
    let mut next = vec![INF; states];
    for s0 in 0..states as u32 {
        // initial window = positions 0..w
        let mut ok = true;
        for j in 0..w {
            if !allowed(j, (s0 >> j) & 1) {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        dp.fill(INF);
        dp[s0 as usize] = s0.count_ones();
        for p in w..m {
            next.fill(INF);
            let mut any = false;
            for (st, &cost) in dp.iter().enumerate() {
                if cost == INF {
                    continue;
                }
                for bit in 0..2u32 {
                    if !allowed(p, bit) {
                        continue;
                    }
                    // window bit j holds T[p - w + j]; the new bit is bit w
                    let window = (st as u32) | (bit << w);
                    if window & cover_mask == 0 {
                        continue; // class p uncovered
                    }
                    let nst = (window >> 1) as usize;
                    debug_assert!(nst as u32 <= state_mask);
                    let ncost = cost + bit;
                    if ncost < next[nst] {
                        next[nst] = ncost;
                        any = true;
                    }
                }
            }
            std::mem::swap(&mut dp, &mut next);
            if !any {
                break;
            }
        }
        // close the cycle: classes 0..w read positions from both ends
        for (st, &cost) in dp.iter().enumerate() {
            if cost == INF {
                continue;
            }
            let mut ok = true;
            for c in 0..w {
                let mut covered = false;
                for &r in residues {
                    let d = (r - r_min) as usize;
                    let bit = if d <= c {
                        (s0 >> (c - d)) & 1
                    } else {
                        // position m - (d - c), held in the final window
                        ((st as u32) >> (w - (d - c))) & 1
                    };
                    if bit == 1 {
                        covered = true;
                        break;
                    }
                }
                if !covered {
                    ok = false;
                    break;
                }
            }
            if ok && best.map_or(true, |b| (cost as usize) < b) {
                best = Some(cost as usize);
            }
        }
    }
    best
}

fn div_ceil(a: usize, b: usize) -> usize {
    (a + b - 1) / b
}

fn apply(covered: &mut BitSet, m: u64, residues: &[u64], v: u64) -> Vec<usize> {
    let mut newly = Vec::new();
    for &r in residues {
        let c = ((r + v) % m) as usize;
        if covered.set(c) {
            newly.push(c);
        }
    }
    newly
}

fn undo(covered: &mut BitSet, newly: &[usize]) {
    for &c in newly {
        covered.clear(c);
    }
}

/// Candidates covering class `c`, i.e. values `(c - r) mod m`, sorted by rank.
fn candidates_for(c: usize, m: u64, residues: &[u64]) -> Vec<u64> {
    let mut cands: Vec<u64> = residues
        .iter()
        .map(|&r| ((c as u64) + m - r) % m)
        .collect();
    cands.sort_unstable_by_key(|&v| rank(v, m));
    cands.dedup();
    cands
}

struct Search<'a> {
    m: u64,
    residues: &'a [u64],
    covered: BitSet,
    chosen: usize,
    best: usize,
    lower: usize,
    found_lower: bool,
}

impl Search<'_> {
    fn optimize(&mut self) {
        if self.found_lower {
            return;
        }
        let unc = self.covered.len() - self.covered.count_ones();
        if unc == 0 {
            if self.chosen < self.best {
                self.best = self.chosen;
                if self.best == self.lower {
                    self.found_lower = true;
                }
            }
            return;
        }
        if self.chosen + div_ceil(unc, self.residues.len()) >= self.best {
            return;
        }
        let c = self.covered.first_unset().expect("uncovered class exists");
        for v in candidates_for(c, self.m, self.residues) {
            let newly = apply(&mut self.covered, self.m, self.residues, v);
            debug_assert!(!newly.is_empty());
            self.chosen += 1;
            self.optimize();
            self.chosen -= 1;
            undo(&mut self.covered, &newly);
            if self.found_lower {
                return;
            }
        }
    }
}

/// Does any completion of the current partial cover exist using at most
/// `budget` further translates, all of rank >= `min_rank`?
fn completion_exists(
    m: u64,
    residues: &[u64],
    covered: &mut BitSet,
    budget: usize,
    min_rank: u64,
) -> bool {
    let unc = covered.len() - covered.count_ones();
    if unc == 0 {
        return true;
    }
    if budget == 0 || div_ceil(unc, residues.len()) > budget {
        return false;
    }
    let c = covered.first_unset().expect("uncovered class exists");
    for v in candidates_for(c, m, residues) {
        if rank(v, m) < min_rank {
            continue;
        }
        let newly = apply(covered, m, residues, v);
        debug_assert!(!newly.is_empty());
        let ok = completion_exists(m, residues, covered, budget - 1, min_rank);
        undo(covered, &newly);
        if ok {
            return true;
        }
    }
    false
}

/// Structured arithmetic-progression cover for ladder moduli.
///
/// `elements` are the underlying integers (their classes modulo `n` must
/// cover all of `0..n`); the base translates are `j*n mod m` for
/// `j = 1..=ceil(m/n)`. Any residual gaps are repaired greedily with at most
/// `extras_cap` additional translates; a larger gap set is an error since it
/// signals that the progression structure does not apply.
pub fn cover_structured(
    elements: &[BigUint],
    n: u64,
    m: u64,
    extras_cap: usize,
    modulus_cap: u64,
) -> Result<CoverSolution> {
    if n == 0 {
        return Err(Error::Precondition("step must be positive".into()));
    }
    if n > m {
        return Err(Error::Precondition(format!("step {n} exceeds modulus {m}")));
    }
    let m_us = check_materializable(m, modulus_cap)?;
    let inst = CoverInstance::from_elements(m, elements)?;

    // The elements must hit every class modulo n.
    let n_big = BigUint::from(n);
    let mut class_seen = vec![false; n as usize];
    for e in elements {
        class_seen[(e % &n_big).to_u64().expect("class fits u64") as usize] = true;
    }
    if let Some(missing) = class_seen.iter().position(|&s| !s) {
        return Err(Error::Precondition(format!(
            "elements do not cover class {missing} modulo {n}"
        )));
    }

    let passes = (m + n - 1) / n;
    let mut translates: BTreeSet<u64> = BTreeSet::new();
    for j in 1..=passes {
        translates.insert((j as u128 * n as u128 % m as u128) as u64);
    }

    let base: Vec<u64> = translates.iter().copied().collect();
    let (ok, mut gaps) = cover_validate(&inst, &base);
    let mut extras = 0usize;
    if !ok {
        let mut covered = BitSet::new(m_us);
        for c in 0..m_us {
            covered.set(c);
        }
        for &g in &gaps {
            covered.clear(g as usize);
        }
        while !gaps.is_empty() {
            if extras >= extras_cap {
                return Err(Error::Precondition(format!(
                    "structured cover at modulus {m} with step {n} leaves {} classes uncovered; \
                     repair would exceed the {extras_cap}-translate cap",
                    gaps.len()
                )));
            }
            // Best repair translate: covers the most gaps, ties by rank.
            let mut scores: BTreeMap<u64, usize> = BTreeMap::new();
            for &g in &gaps {
                for &r in inst.residues() {
                    *scores.entry((g + m - r) % m).or_insert(0) += 1;
                }
            }
            let (&v, _) = scores
                .iter()
                .max_by_key(|(&v, &cnt)| (cnt, std::cmp::Reverse(rank(v, m))))
                .expect("gap set nonempty");
            translates.insert(v);
            extras += 1;
            for &r in inst.residues() {
                covered.set(((r + v) % m) as usize);
            }
            gaps.retain(|&g| !covered.get(g as usize));
        }
    }

    let values: Vec<u64> = translates.into_iter().collect();
    debug_assert!(values.len() >= passes as usize);
    debug_assert!(cover_validate(&inst, &values).0);
    Ok(canonical(values, Exactness::Structured))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from_u64(v).unwrap()
    }

    fn inst(m: u64, residues: &[u64]) -> CoverInstance {
        CoverInstance::new(m, residues, residues.len()).unwrap()
    }

    #[test]
    fn validate_examples() {
        let i = inst(4, &[1, 0]);
        assert_eq!(cover_validate(&i, &[1, 3]), (true, vec![]));
        assert_eq!(cover_validate(&i, &[1]), (false, vec![0, 3]));
        let i2 = inst(2, &[0, 1]);
        assert_eq!(cover_validate(&i2, &[0]), (true, vec![]));
    }

    #[test]
    fn exact_examples() {
        let s = cover_exact(&inst(1, &[0]), DEFAULT_EXACT_CAP).unwrap();
        assert_eq!(s.translates(), &[0]);
        assert_eq!(s.exactness(), Exactness::ExactMinimum);

        let s = cover_exact(&inst(4, &[1, 0]), DEFAULT_EXACT_CAP).unwrap();
        assert_eq!(s.translates(), &[1, 3]);

        let s = cover_exact(&inst(5, &[0, 1, 2, 3, 4]), DEFAULT_EXACT_CAP).unwrap();
        assert_eq!(s.size(), 1);
        assert_eq!(s.translates(), &[1]);
    }

    #[test]
    fn exact_cap_is_enforced() {
        let e = cover_exact(&inst(100, &[0]), 99).unwrap_err();
        assert_eq!(e.category(), "cap");
    }

    #[test]
    fn greedy_examples() {
        let s = cover_greedy(&inst(4, &[1, 0])).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.exactness(), Exactness::UpperBound);

        let s = cover_greedy(&inst(1, &[0])).unwrap();
        assert_eq!(s.size(), 1);

        let s = cover_greedy(&inst(6, &[0])).unwrap();
        assert_eq!(s.size(), 6);
    }

    #[test]
    fn structured_examples() {
        // ladder level 1: n=2, m=4, elements {1, 4}
        let s = cover_structured(&[big(1), big(4)], 2, 4, 3, DEFAULT_MODULUS_CAP).unwrap();
        assert_eq!(s.translates(), &[0, 2]);
        assert_eq!(s.size(), 2);
        assert_eq!(s.exactness(), Exactness::Structured);

        // n=1 degenerates to one translate per class
        let s = cover_structured(&[big(1), big(2), big(3)], 1, 3, 0, DEFAULT_MODULUS_CAP).unwrap();
        assert_eq!(s.size(), 3);

        // missing class modulo n
        let e = cover_structured(&[big(2), big(4)], 2, 4, 0, DEFAULT_MODULUS_CAP).unwrap_err();
        assert_eq!(e.category(), "precondition");
    }

    #[test]
    fn exact_is_at_most_greedy_and_lower_bounded() {
        for m in 1u64..=12 {
            for r1 in 0..m {
                for r2 in r1..m {
                    let residues: Vec<u64> = if r1 == r2 { vec![r1] } else { vec![r1, r2] };
                    let i = inst(m, &residues);
                    let ex = cover_exact(&i, DEFAULT_EXACT_CAP).unwrap();
                    let gr = cover_greedy(&i).unwrap();
                    assert!(ex.size() <= gr.size());
                    assert!(ex.size() * i.element_count() >= m as usize);
                    assert!(cover_validate(&i, ex.translates()).0);
                    assert!(cover_validate(&i, gr.translates()).0);
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn exact_and_greedy_always_valid(m in 1u64..24, seed in any::<u64>()) {
            let mut residues: Vec<u64> = Vec::new();
            let mut state = seed;
            let count = 1 + (seed % 4) as usize;
            for _ in 0..count {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                residues.push(state % m);
            }
            let i = CoverInstance::new(m, &residues, residues.len().max(4)).unwrap();
            let ex = cover_exact(&i, DEFAULT_EXACT_CAP).unwrap();
            let gr = cover_greedy(&i).unwrap();
            prop_assert!(cover_validate(&i, ex.translates()).0);
            prop_assert!(cover_validate(&i, gr.translates()).0);
            prop_assert!(ex.size() <= gr.size());
            prop_assert!(ex.size() * i.residues().len() >= m as usize);
        }
    }
}
