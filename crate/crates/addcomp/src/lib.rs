//! Thin sequences and their additive complements, built explicitly and
//! verified with exact arithmetic.
//!
//! The crate constructs a rapidly growing integer sequence by a greedy rule
//! that keeps level prefixes as complete residue systems, realizes its
//! additive complement as a union of translated arithmetic-progression
//! blocks driven by residue covers, and verifies the resulting counting
//! identities, covering numbers, sumset coverage, and the exact
//! second-order criterion. Big integers and exact rationals throughout; no
//! floating point on any verified path.
//!
//! Modules:
//!
//! * [`seq`] — sequence prefixes and exact counting functions
//! * [`cover`] — residue covering numbers (exact, greedy, structured)
//! * [`greedy`] — the deterministic sequence builder and its level ladder
//! * [`complement`] — complement blocks, counting, and the count bound
//! * [`verify`] — sumset sieve, pair statistics, and criterion reports

pub mod bitset;
pub mod complement;
pub mod cover;
pub mod error;
pub mod greedy;
mod json;
pub mod seq;
pub mod verify;

pub use complement::{
    block_multiplier, build_blocks, count_upper_bound, Block, BlocksBuild, BuildConfig,
    ComplementBlocks, DEFAULT_ENUM_CAP,
};
pub use cover::{
    cover_exact, cover_greedy, cover_greedy_with_cap, cover_structured, cover_validate,
    CoverInstance, CoverSolution, Exactness, DEFAULT_EXACT_CAP, DEFAULT_MODULUS_CAP,
};
pub use error::{Error, Result};
pub use greedy::{
    build_sequence, level_ladder, validate_residue_systems, BuildCaps, GreedyState, LadderLevel,
    LevelLadder, DEFAULT_TERM_CAP,
};
pub use seq::{CountingSnapshot, GrowthRatio, GrowthRule, Sequence};
pub use verify::{
    collision_inequality, criterion, criterion_sweep, criterion_trend, default_sweep_points,
    pair_stats, reports_to_csv, sumset_coverage, truncation_safe_max, CollisionCheck,
    CoverageReport, CriterionReport, CriterionTrend, PairStats, DEFAULT_PAIR_CAP,
    DEFAULT_SIEVE_CAP,
};
