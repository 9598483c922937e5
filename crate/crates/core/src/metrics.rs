//! Welfare and fairness summaries of an allocation.
//!
//! Every metric works on the per-paper score vector `s_i = v_i(A_i)`,
//! computed with the pinned bundle summation from [`Instance`]. The
//! headline numbers:
//!
//! - mean utilitarian welfare and Nash welfare (geometric mean, zero as
//!   soon as any paper scores zero, with a positive-only companion),
//! - the Gini coefficient of the score distribution,
//! - total envy between papers, both as a positive-part sum and as the
//!   literal signed sum,
//! - bottom-percentile score blocks (mean and population standard
//!   deviation of the worst-off papers).
//!
//! [`full_report`] bundles all of them with the EF1 violation count.

use alloc::vec::Vec;
use core::fmt;

use crate::math;
use crate::model::{Allocation, Instance, ModelError};

/// Errors from individual metric computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricsError {
    /// Gini is undefined when every paper scores zero.
    AllZeroScores,
}

impl fmt::Display for MetricsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricsError::AllZeroScores => {
                write!(f, "gini coefficient is undefined when all scores are zero")
            }
        }
    }
}

impl core::error::Error for MetricsError {}

/// Mean and spread of the lowest-scoring block of papers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PercentileBlock {
    /// Fraction of papers in the block, in `(0, 1]`.
    pub fraction: f64,
    /// Mean score within the block.
    pub mean: f64,
    /// Population standard deviation within the block.
    pub std_dev: f64,
}

/// Everything [`full_report`] computes.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricsReport {
    /// Utilitarian welfare divided by the number of papers.
    pub usw_mean: f64,
    /// Nash welfare: geometric mean of scores, zero when any score is.
    pub nsw: f64,
    /// Geometric mean over the positive scores only (zero if none).
    pub nsw_positive: f64,
    /// Number of papers with score exactly zero.
    pub zero_score_count: usize,
    /// Lowest paper score.
    pub min_score: f64,
    /// Violating pairs found by the EF1 check.
    pub ef1_violations: usize,
    /// Gini coefficient of the scores; zero for an all-zero profile.
    pub gini: f64,
    /// Sum of positive envy terms `max(0, v_i(A_j) - v_i(A_i))`.
    pub total_envy: f64,
    /// Literal signed sum of `v_i(A_j) - v_i(A_i)` over ordered pairs.
    pub literal_envy_sum: f64,
    /// Bottom-percentile blocks, at the fractions in [`REPORT_FRACTIONS`].
    pub percentile_blocks: Vec<PercentileBlock>,
}

/// Fractions reported by [`full_report`].
pub const REPORT_FRACTIONS: [f64; 2] = [0.10, 0.25];

/// Per-paper scores `v_i(A_i)` in ascending paper order.
pub fn scores(inst: &Instance, alloc: &Allocation) -> Vec<f64> {
    inst.papers()
        .map(|p| inst.sorted_bundle_value(p, alloc.bundle(p)))
        .collect()
}

/// Mean utilitarian welfare: total welfare over the number of papers.
pub fn usw_mean(inst: &Instance, alloc: &Allocation) -> f64 {
    inst.usw(alloc) / inst.paper_count() as f64
}

/// Nash welfare as `(geometric mean, positive-only geometric mean,
/// zero-score count)`.
///
/// The geometric mean is computed in log space to survive hundreds of
/// factors without under- or overflow. Any zero score collapses the
/// first component to zero; the second skips zeros so that the rest of
/// the distribution stays visible, and is itself zero when no positive
/// scores exist.
pub fn nsw(inst: &Instance, alloc: &Allocation) -> (f64, f64, usize) {
    let s = scores(inst, alloc);
    nsw_of_scores(&s)
}

fn nsw_of_scores(s: &[f64]) -> (f64, f64, usize) {
    let zeros = s.iter().filter(|&&x| x == 0.0).count();
    let mut log_sum = 0.0;
    let mut positive = 0usize;
    for &x in s {
        if x > 0.0 {
            log_sum += math::ln(x);
            positive += 1;
        }
    }
    let geo_positive = if positive == 0 {
        0.0
    } else {
        math::exp(log_sum / positive as f64)
    };
    let geo_all = if zeros > 0 { 0.0 } else { geo_positive };
    (geo_all, geo_positive, zeros)
}

/// Gini coefficient of the score distribution, in `[0, 1)`.
///
/// Implemented over sorted scores in O(n log n); the quadratic
/// double-loop definition is kept as a test oracle.
pub fn gini(inst: &Instance, alloc: &Allocation) -> Result<f64, MetricsError> {
    gini_of_scores(&scores(inst, alloc))
}

fn gini_of_scores(s: &[f64]) -> Result<f64, MetricsError> {
    let n = s.len();
    let total: f64 = s.iter().sum();
    if total == 0.0 {
        return Err(MetricsError::AllZeroScores);
    }
    let mut sorted = s.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("scores are finite"));
    let mut weighted = 0.0;
    for (idx, &x) in sorted.iter().enumerate() {
        let rank = (idx + 1) as f64;
        weighted += (2.0 * rank - n as f64 - 1.0) * x;
    }
    Ok(weighted / (n as f64 * total))
}

/// Total envy between papers as `(positive-part sum, literal sum)`.
///
/// The first component adds `v_i(A_j) - v_i(A_i)` only where positive,
/// so mutually content papers contribute nothing. The second is the
/// uncensored signed sum, which can be negative.
pub fn total_envy(inst: &Instance, alloc: &Allocation) -> (f64, f64) {
    let own: Vec<f64> = scores(inst, alloc);
    let mut positive = 0.0;
    let mut literal = 0.0;
    for i in inst.papers() {
        for j in inst.papers() {
            if i == j {
                continue;
            }
            let d = inst.sorted_bundle_value(i, alloc.bundle(j)) - own[i.index()];
            if d > 0.0 {
                positive += d;
            }
            literal += d;
        }
    }
    (positive, literal)
}

/// Mean and population standard deviation of the lowest `fraction` of
/// scores. The block holds `ceil(fraction * n)` papers, at least one.
///
/// `fraction` must be in `(0, 1]`.
pub fn percentile_block(inst: &Instance, alloc: &Allocation, fraction: f64) -> (f64, f64) {
    assert!(
        fraction > 0.0 && fraction <= 1.0,
        "fraction must be in (0, 1]"
    );
    let mut s = scores(inst, alloc);
    s.sort_by(|a, b| a.partial_cmp(b).expect("scores are finite"));
    let count = (math::ceil(fraction * s.len() as f64) as usize).clamp(1, s.len());
    let block = &s[..count];
    let mean = block.iter().sum::<f64>() / count as f64;
    let var = block.iter().map(|&x| (x - mean) * (x - mean)).sum::<f64>() / count as f64;
    (mean, math::sqrt(var))
}

/// Computes every metric in one pass, plus the EF1 violation count.
///
/// The allocation must pass validation (the EF1 check enforces this).
/// Unlike the standalone [`gini`], an all-zero score profile reports a
/// Gini of zero here: a report for an empty allocation is meaningful
/// even though the coefficient's normalization is not.
pub fn full_report(inst: &Instance, alloc: &Allocation) -> Result<MetricsReport, ModelError> {
    let ef1 = inst.check_ef1(alloc)?;
    let s = scores(inst, alloc);
    let (geo_all, geo_positive, zeros) = nsw_of_scores(&s);
    let gini = gini_of_scores(&s).unwrap_or(0.0);
    let (positive_envy, literal_envy) = total_envy(inst, alloc);
    let min_score = s.iter().copied().fold(f64::INFINITY, f64::min);
    let percentile_blocks = REPORT_FRACTIONS
        .iter()
        .map(|&fraction| {
            let (mean, std_dev) = percentile_block(inst, alloc, fraction);
            PercentileBlock {
                fraction,
                mean,
                std_dev,
            }
        })
        .collect();
    Ok(MetricsReport {
        usw_mean: inst.usw(alloc) / inst.paper_count() as f64,
        nsw: geo_all,
        nsw_positive: geo_positive,
        zero_score_count: zeros,
        min_score,
        ef1_violations: ef1.count(),
        gini,
        total_envy: positive_envy,
        literal_envy_sum: literal_envy,
        percentile_blocks,
    })
}
