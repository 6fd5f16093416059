//! Verification of the construction's checkable claims: sumset coverage,
//! sum/difference collision statistics, and the exact second-order
//! criterion.
//!
//! All criterion arithmetic is exact rational. Ratios such as
//! `A(x)B(x)/x` approach their limits only asymptotically, so they are
//! reported, never asserted; assertions are reserved for identities that
//! hold at every finite prefix.

use crate::bitset::BitSet;
use crate::complement::{block_multiplier, ComplementBlocks};
use crate::error::{Error, Result};
use crate::greedy::level_ladder;
use crate::seq::Sequence;
use num::{BigInt, BigRational, BigUint, One, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Default cap on the sumset sieve window.
pub const DEFAULT_SIEVE_CAP: u64 = 100_000_000;

/// Default cap on enumerated pair counts.
pub const DEFAULT_PAIR_CAP: u64 = 10_000_000;

/// Largest `x` at which a `levels`-block build provably equals the infinite
/// complement on `[1, x]`: every member of block `K+1` exceeds
/// `(q_{K+1} - 1) a_{K+1}`.
pub fn truncation_safe_max(seq: &Sequence, blocks: &ComplementBlocks) -> Result<BigUint> {
    let k = blocks.len();
    let q_next = block_multiplier(seq, k + 1)?;
    Ok((q_next - BigUint::one()) * seq.term(k + 1)?)
}

/// Sumset coverage report: every integer in `[n0, x_max]` is a sum of a
/// sequence term and a complement member; `gaps` are the uncovered integers
/// below `n0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub n0: u64,
    pub gaps: Vec<u64>,
}

/// Sieves `[1, x_max]` for integers not of the form `a + b`. The stored
/// blocks are a subset of the full complement, so a clean window is
/// definitive; gaps at or beyond the truncation-safe bound could be
/// artifacts of the finite build and are rejected.
pub fn sumset_coverage(
    seq: &Sequence,
    blocks: &ComplementBlocks,
    x_max: u64,
    sieve_cap: u64,
) -> Result<CoverageReport> {
    if x_max == 0 {
        return Err(Error::Precondition("window must be nonempty".into()));
    }
    if x_max > sieve_cap {
        return Err(Error::Cap(format!("window {x_max} exceeds sieve cap {sieve_cap}")));
    }
    let x_big = BigUint::from(x_max);
    if x_big > *seq.last() {
        return Err(Error::Span(format!(
            "window {x_max} extends beyond the stored sequence prefix"
        )));
    }
    let members = blocks.members(&BigUint::one(), &x_big, x_max)?;
    let b_small: Vec<u64> = members
        .iter()
        .map(|b| b.to_u64().expect("member below x_max fits u64"))
        .collect();
    let mut covered = BitSet::new(x_max as usize + 1);
    for a in seq.terms() {
        let a = match a.to_u64() {
            Some(a) if a <= x_max => a,
            _ => break,
        };
        for &b in &b_small {
            let s = a + b;
            if s > x_max {
                break;
            }
            covered.set(s as usize);
        }
    }
    if covered.count_ones() == 0 {
        return Err(Error::Precondition(format!(
            "no integer in [1, {x_max}] is a sum; coverage is vacuous"
        )));
    }
    let mut n0 = 1u64;
    for i in (1..=x_max as usize).rev() {
        if !covered.get(i) {
            n0 = i as u64 + 1;
            break;
        }
    }
    let gaps: Vec<u64> = (1..n0).filter(|&i| !covered.get(i as usize)).collect();
    if let Some(&worst) = gaps.last() {
        // Unbuilt blocks only contribute members strictly beyond the safe
        // bound, so a gap at or below it can never be a truncation artifact.
        let safe = truncation_safe_max(seq, blocks)?;
        if BigUint::from(worst) > safe {
            return Err(Error::Span(format!(
                "gap {worst} lies beyond the truncation-safe bound {safe}; build more blocks"
            )));
        }
    }
    Ok(CoverageReport { n0, gaps })
}

/// Exact sum and difference pair statistics over a bounded window:
/// `sigma[n]` counts pairs `a + b = n` and `delta[n]` pairs `b - a = n`
/// with `a <= x`, `b <= x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairStats {
    pub x: u64,
    pub sigma: BTreeMap<u64, u64>,
    pub delta: BTreeMap<i64, u64>,
}

impl PairStats {
    pub fn sigma_total(&self) -> u64 {
        self.sigma.values().sum()
    }

    pub fn delta_total(&self) -> u64 {
        self.delta.values().sum()
    }
}

pub fn pair_stats(
    seq: &Sequence,
    b_members: &[BigUint],
    x: u64,
    pair_cap: u64,
) -> Result<PairStats> {
    let x_big = BigUint::from(x);
    let a_vals: Vec<u64> = seq
        .terms()
        .iter()
        .take_while(|t| **t <= x_big)
        .map(|t| t.to_u64().expect("term below x fits u64"))
        .collect();
    let b_vals: Vec<u64> = b_members
        .iter()
        .take_while(|b| **b <= x_big)
        .map(|b| b.to_u64().expect("member below x fits u64"))
        .collect();
    let pairs = a_vals.len() as u64 * b_vals.len() as u64;
    if pairs > pair_cap {
        return Err(Error::Cap(format!("{pairs} pairs exceed the cap {pair_cap}")));
    }
    let mut sigma: BTreeMap<u64, u64> = BTreeMap::new();
    let mut delta: BTreeMap<i64, u64> = BTreeMap::new();
    for &a in &a_vals {
        for &b in &b_vals {
            *sigma.entry(a + b).or_insert(0) += 1;
            *delta.entry(b as i64 - a as i64).or_insert(0) += 1;
        }
    }
    Ok(PairStats { x, sigma, delta })
}

/// Sum/difference collision inequality over two finite sets: the excess of
/// repeated sums is at least `1/|U|` times the excess of repeated
/// differences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionCheck {
    pub lhs: u64,
    pub rhs: BigRational,
    pub holds: bool,
}

pub fn collision_inequality(u: &[i64], v: &[i64]) -> Result<CollisionCheck> {
    let mut us: Vec<i64> = u.to_vec();
    us.sort_unstable();
    us.dedup();
    let mut vs: Vec<i64> = v.to_vec();
    vs.sort_unstable();
    vs.dedup();
    if us.is_empty() || vs.is_empty() {
        return Err(Error::Precondition("both sets must be nonempty".into()));
    }
    let mut sigma: BTreeMap<i64, u64> = BTreeMap::new();
    let mut delta: BTreeMap<i64, u64> = BTreeMap::new();
    for &a in &us {
        for &b in &vs {
            *sigma.entry(a + b).or_insert(0) += 1;
            *delta.entry(b - a).or_insert(0) += 1;
        }
    }
    let lhs: u64 = sigma.values().filter(|&&c| c > 1).map(|&c| c - 1).sum();
    let rhs_num: u64 = delta.values().filter(|&&c| c > 1).map(|&c| c - 1).sum();
    let rhs = BigRational::new(BigInt::from(rhs_num), BigInt::from(us.len() as u64));
    let holds = BigRational::from_integer(BigInt::from(lhs)) >= rhs;
    Ok(CollisionCheck { lhs, rhs, holds })
}

/// Exact second-order criterion at a point:
/// `T = A(x)B(x) - x - a*(x)/A(x)`, `scale = a*(x)/A(x)^2`, `R = T/scale`,
/// plus the first-order ratio `A(x)B(x)/x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub x: BigUint,
    pub a_of_x: u64,
    pub b_of_x: u64,
    pub a_star: BigUint,
    pub t: BigRational,
    pub scale: BigRational,
    pub ratio: BigRational,
    pub exactness_ratio: BigRational,
}

impl CriterionReport {
    pub fn csv_header() -> &'static str {
        "x,A,B,a_star,T_num,T_den,scale_num,scale_den,R_num,R_den,exactness_num,exactness_den"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.x,
            self.a_of_x,
            self.b_of_x,
            self.a_star,
            self.t.numer(),
            self.t.denom(),
            self.scale.numer(),
            self.scale.denom(),
            self.ratio.numer(),
            self.ratio.denom(),
            self.exactness_ratio.numer(),
            self.exactness_ratio.denom(),
        )
    }
}

/// Renders reports in the stable CSV schema.
pub fn reports_to_csv(reports: &[CriterionReport]) -> String {
    let mut out = String::from(CriterionReport::csv_header());
    out.push('\n');
    for r in reports {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

pub fn criterion(seq: &Sequence, blocks: &ComplementBlocks, x: &BigUint) -> Result<CriterionReport> {
    if x.is_zero() {
        return Err(Error::Precondition("x must be positive".into()));
    }
    let safe = truncation_safe_max(seq, blocks)?;
    if *x >= safe {
        return Err(Error::Span(format!(
            "x = {x} is not truncation-safe for {} blocks (bound {safe})",
            blocks.len()
        )));
    }
    let a_of_x = seq.count(x) as u64;
    let a_star = seq.largest_le(x)?.clone();
    let b_of_x = blocks.count(x)?;

    let a_rat = BigRational::from_integer(BigInt::from(a_of_x));
    let b_rat = BigRational::from_integer(BigInt::from(b_of_x));
    let x_rat = BigRational::from_integer(BigInt::from(x.clone()));
    let astar_rat = BigRational::from_integer(BigInt::from(a_star.clone()));

    let t = &a_rat * &b_rat - &x_rat - &astar_rat / &a_rat;
    let scale = &astar_rat / (&a_rat * &a_rat);
    let ratio = &t / &scale;
    let exactness_ratio = &a_rat * &b_rat / &x_rat;
    Ok(CriterionReport {
        x: x.clone(),
        a_of_x,
        b_of_x,
        a_star,
        t,
        scale,
        ratio,
        exactness_ratio,
    })
}

/// Default sweep points: every ladder evaluation point `x_k` plus every
/// block boundary `q_k a_k` inside the truncation-safe span.
pub fn default_sweep_points(seq: &Sequence, blocks: &ComplementBlocks) -> Result<Vec<BigUint>> {
    let safe = truncation_safe_max(seq, blocks)?;
    let mut points: Vec<BigUint> = Vec::new();
    for level in level_ladder(seq).levels {
        if let Some(x_k) = level.x_k {
            if x_k < safe {
                points.push(x_k);
            }
        }
    }
    for b in blocks.blocks() {
        let boundary = (&b.shift_min + BigUint::one()) * &b.modulus;
        if boundary < safe {
            points.push(boundary);
        }
    }
    points.sort();
    points.dedup();
    Ok(points)
}

/// Criterion reports at the given points (default sweep when `None`),
/// sorted by `x`.
pub fn criterion_sweep(
    seq: &Sequence,
    blocks: &ComplementBlocks,
    points: Option<&[BigUint]>,
) -> Result<Vec<CriterionReport>> {
    let pts: Vec<BigUint> = match points {
        Some(p) => {
            let mut v = p.to_vec();
            v.sort();
            v.dedup();
            v
        }
        None => default_sweep_points(seq, blocks)?,
    };
    pts.iter().map(|x| criterion(seq, blocks, x)).collect()
}

/// Comparison of the normalized criterion at the first two ladder points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionTrend {
    pub x1: BigUint,
    pub r1: BigRational,
    pub x2: BigUint,
    pub r2: BigRational,
    /// Whether `R(x2) < R(x1)`, the expected direction as the construction
    /// deepens. A violation is report-worthy, not an error.
    pub decreasing: bool,
}

pub fn criterion_trend(seq: &Sequence, blocks: &ComplementBlocks) -> Result<Option<CriterionTrend>> {
    let ladder = level_ladder(seq);
    let safe = truncation_safe_max(seq, blocks)?;
    let mut xs = ladder
        .levels
        .iter()
        .filter_map(|l| l.x_k.clone())
        .filter(|x| *x < safe);
    let (x1, x2) = match (xs.next(), xs.next()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(None),
    };
    let r1 = criterion(seq, blocks, &x1)?.ratio;
    let r2 = criterion(seq, blocks, &x2)?.ratio;
    let decreasing = r2 < r1;
    Ok(Some(CriterionTrend {
        x1,
        r1,
        x2,
        r2,
        decreasing,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complement::{build_blocks, BuildConfig};
    use crate::greedy::{build_sequence, BuildCaps};
    use crate::seq::GrowthRule;
    use num::FromPrimitive;

    fn big(v: u64) -> BigUint {
        BigUint::from_u64(v).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn setup(extra: usize, levels: usize) -> (Sequence, ComplementBlocks) {
        let caps = BuildCaps {
            extra_terms: extra,
            ..BuildCaps::default()
        };
        let (seq, _) = build_sequence(2, GrowthRule::Linear, &caps).unwrap();
        let blocks = build_blocks(&seq, levels, &BuildConfig::default()).unwrap().blocks;
        (seq, blocks)
    }

    #[test]
    fn coverage_at_300_with_two_blocks() {
        let (seq, blocks) = setup(0, 2);
        let report = sumset_coverage(&seq, &blocks, 300, DEFAULT_SIEVE_CAP).unwrap();
        assert_eq!(report.n0, 5);
        assert_eq!(report.gaps, vec![1, 2, 3, 4]);
    }

    #[test]
    fn coverage_small_window_one_block() {
        let (seq, blocks) = setup(0, 1);
        let report = sumset_coverage(&seq, &blocks, 9, DEFAULT_SIEVE_CAP).unwrap();
        assert_eq!(report.n0, 5);
    }

    #[test]
    fn coverage_vacuous_window_errors() {
        let (seq, blocks) = setup(0, 1);
        let err = sumset_coverage(&seq, &blocks, 4, DEFAULT_SIEVE_CAP).unwrap_err();
        assert_eq!(err.category(), "precondition");
    }

    #[test]
    fn pair_stats_examples() {
        let (seq, blocks) = setup(0, 1);
        let members = blocks.members(&big(1), &big(9), 100).unwrap();
        let stats = pair_stats(&seq, &members, 9, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(stats.sigma.get(&8), Some(&2)); // 1+7 and 4+4
        assert_eq!(stats.delta.get(&0), Some(&1)); // (4, 4)
        let ab = 2 * members.len() as u64;
        assert_eq!(stats.sigma_total(), ab);
        assert_eq!(stats.delta_total(), ab);
    }

    #[test]
    fn pair_stats_singletons() {
        let seq = Sequence::new(vec![big(1)], 4, GrowthRule::Linear).unwrap();
        let stats = pair_stats(&seq, &[big(2)], 2, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(stats.sigma.get(&3), Some(&1));
        assert_eq!(stats.delta.get(&1), Some(&1));
        assert_eq!(stats.sigma_total(), 1);
    }

    #[test]
    fn collision_examples() {
        let c = collision_inequality(&[1, 2], &[1, 2]).unwrap();
        assert_eq!(c.lhs, 1);
        assert_eq!(c.rhs, rat(1, 2));
        assert!(c.holds);

        let c = collision_inequality(&[1], &[3, 5, 9]).unwrap();
        assert_eq!(c.rhs, rat(0, 1));
        assert!(c.holds);

        let c = collision_inequality(&[1, 2, 3], &[10]).unwrap();
        assert_eq!(c.lhs, 0);
        assert_eq!(c.rhs, rat(0, 1));
        assert!(c.holds);
    }

    #[test]
    fn criterion_at_the_first_ladder_point() {
        let (seq, blocks) = setup(1, 3);
        let r = criterion(&seq, &blocks, &big(130)).unwrap();
        assert_eq!(r.a_of_x, 3);
        assert_eq!(r.b_of_x, 66);
        assert_eq!(r.a_star, big(130));
        assert_eq!(r.t, rat(74, 3));
        assert_eq!(r.scale, rat(130, 9));
        assert_eq!(r.ratio, rat(111, 65));
        assert_eq!(r.exactness_ratio, rat(198, 130));
    }

    #[test]
    fn criterion_at_ordinary_points() {
        let (seq, blocks) = setup(1, 3);
        let r = criterion(&seq, &blocks, &big(10)).unwrap();
        assert_eq!(r.t, rat(0, 1));
        assert_eq!(r.scale, rat(1, 1));
        assert_eq!(r.ratio, rat(0, 1));

        let r = criterion(&seq, &blocks, &big(4)).unwrap();
        assert_eq!(r.t, rat(-4, 1));
        assert_eq!(r.ratio, rat(-4, 1));
    }

    #[test]
    fn criterion_denominators_divide_a_squared() {
        let (seq, blocks) = setup(1, 3);
        for x in [4u64, 10, 130, 390, 1000] {
            let r = criterion(&seq, &blocks, &big(x)).unwrap();
            let a = BigInt::from(r.a_of_x);
            assert!((&a % r.t.denom()).is_zero());
            assert!(((&a * &a) % r.scale.denom()).is_zero());
        }
    }

    #[test]
    fn criterion_span_guard() {
        let (seq, blocks) = setup(1, 3);
        // bound = (q_4 - 1) a_4 = 3 * 31591
        assert!(criterion(&seq, &blocks, &big(94772)).is_ok());
        let err = criterion(&seq, &blocks, &big(94773)).unwrap_err();
        assert_eq!(err.category(), "span");
    }

    #[test]
    fn sweep_default_and_explicit() {
        let (seq, blocks) = setup(1, 3);
        let reports = criterion_sweep(&seq, &blocks, Some(&[big(130)])).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].ratio, rat(111, 65));

        let reports = criterion_sweep(&seq, &blocks, Some(&[])).unwrap();
        assert!(reports.is_empty());

        let reports = criterion_sweep(&seq, &blocks, None).unwrap();
        // x_1 = 130 plus boundaries 4, 8, 390; x_2 = a_5 is not truncation-safe here
        let xs: Vec<u64> = reports.iter().map(|r| r.x.to_u64().unwrap()).collect();
        assert_eq!(xs, vec![4, 8, 130, 390]);
    }

    #[test]
    fn csv_schema() {
        let (seq, blocks) = setup(1, 3);
        let reports = criterion_sweep(&seq, &blocks, Some(&[big(130)])).unwrap();
        let csv = reports_to_csv(&reports);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CriterionReport::csv_header()));
        assert_eq!(lines.next(), Some("130,3,66,130,74,3,130,9,111,65,99,65"));
    }
}
