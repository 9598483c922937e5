//! Picking-order search: greedy construction and a brute-force oracle.
//!
//! [`greedy_rrr`] builds an order one paper at a time, always appending
//! the paper whose insertion yields the highest round-robin welfare.
//! Each step can optionally evaluate only a random subset of the
//! remaining papers (useful when n is large), and candidate evaluation
//! can be spread across threads when the `parallel` feature is enabled.
//!
//! [`exhaustive_best_order`] enumerates every full order and is the
//! ground truth the greedy search is measured against; it refuses
//! instances past a small factorial bound. [`approximation_report`]
//! checks the two against the weak-submodularity welfare guarantee.

use alloc::vec::Vec;
use core::fmt;

use crate::math;
use crate::model::{Instance, Order, PaperId};
use crate::rng::{partial_shuffle, Rng};
use crate::rrr;

/// Largest paper count [`exhaustive_best_order`] will enumerate (8! =
/// 40320 mechanism runs).
pub const EXHAUSTIVE_ORDER_BOUND: usize = 8;

/// Tuning knobs for [`greedy_rrr`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrrrConfig {
    /// When set, each greedy step evaluates only this many randomly
    /// chosen remaining papers (without replacement) instead of all of
    /// them. Must be positive and at most the paper count.
    pub subsample_size: Option<usize>,
    /// Seed for the subsampling generator. Irrelevant when
    /// `subsample_size` is `None`, but kept in the config so results
    /// are self-describing.
    pub seed: u64,
    /// Worker-count hint for candidate evaluation (≥ 1). More than one
    /// worker takes effect only with the `parallel` feature; results
    /// are identical regardless.
    pub parallelism: usize,
}

impl Default for GrrrConfig {
    fn default() -> Self {
        GrrrConfig {
            subsample_size: None,
            seed: 0,
            parallelism: 1,
        }
    }
}

/// Outcome of a greedy order search.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    /// The constructed picking order, always of full length.
    pub order: Order,
    /// Round-robin welfare of the final order.
    pub usw: f64,
    /// Welfare of the partial order after each insertion; the last
    /// entry equals `usw`.
    pub per_step_usw: Vec<f64>,
}

/// Errors from the search routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchError {
    /// The instance has too many papers for exhaustive enumeration.
    TooLarge {
        /// Number of papers in the instance.
        papers: usize,
        /// Maximum supported paper count.
        bound: usize,
    },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::TooLarge { papers, bound } => write!(
                f,
                "exhaustive order search over {papers} papers exceeds the \
                 bound of {bound}; use greedy search (with subsampling for \
                 large instances) instead"
            ),
        }
    }
}

impl core::error::Error for SearchError {}

/// Result of checking greedy welfare against the optimal order under
/// the `f_alg · (1 + γ²) ≥ f_opt` guarantee.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproximationReport {
    /// Monotonized objective value of the greedy order.
    pub f_alg: f64,
    /// Monotonized objective value of the optimal order.
    pub f_opt: f64,
    /// Weak-submodularity ratio used in the bound.
    pub gamma: f64,
    /// Monotonization exponent.
    pub alpha: f64,
    /// `f_alg · (1 + γ²) / f_opt`, or `None` when `f_opt` is zero.
    pub ratio: Option<f64>,
    /// Whether the guarantee holds (vacuously true when `f_opt` = 0).
    pub satisfied: bool,
}

/// Greedily builds a full picking order maximizing round-robin welfare.
///
/// Starting from the empty order, each of the n steps evaluates
/// `usw_rrr(O + i)` for every remaining paper i (or for a uniform
/// random subset of `cfg.subsample_size` of them) and appends the
/// best candidate, breaking ties toward the smallest paper id. The
/// welfare trajectory after each insertion is recorded.
///
/// The same instance, seed, and configuration always produce the same
/// result, independent of worker count.
///
/// # Panics
///
/// Panics if `cfg.subsample_size` is `Some(0)` or exceeds the paper
/// count, or if `cfg.parallelism` is zero.
pub fn greedy_rrr(inst: &Instance, cfg: &GrrrConfig) -> SearchResult {
    let n = inst.paper_count();
    if let Some(size) = cfg.subsample_size {
        assert!(
            size >= 1 && size <= n,
            "subsample size must be in 1..={n}, got {size}"
        );
    }
    assert!(cfg.parallelism >= 1, "parallelism hint must be at least 1");

    let mut rng = Rng::seed_from_u64(cfg.seed);
    let mut order = Order::empty();
    let mut remaining: Vec<PaperId> = inst.papers().collect();
    let mut per_step_usw = Vec::with_capacity(n);
    let mut pool = Vec::new();

    for _ in 0..n {
        let candidates: &[PaperId] = match cfg.subsample_size {
            Some(size) if size < remaining.len() => {
                pool.clone_from(&remaining);
                partial_shuffle(&mut rng, &mut pool, size);
                &pool[..size]
            }
            _ => &remaining,
        };
        let (usw, best) = best_candidate(inst, &order, candidates, cfg.parallelism);
        order.push(best);
        per_step_usw.push(usw);
        remaining.retain(|&p| p != best);
    }

    SearchResult {
        usw: per_step_usw.last().copied().unwrap_or(0.0),
        order,
        per_step_usw,
    }
}

/// Evaluates one candidate extension of the current order.
fn score_candidate(inst: &Instance, order: &Order, candidate: PaperId) -> (f64, PaperId) {
    let mut extended = order.clone();
    extended.push(candidate);
    let usw = rrr::order_usw(inst, &extended).expect("candidate extension is a valid order");
    (usw, candidate)
}

/// Picks the (welfare, id)-maximal pair: higher welfare wins, ties go
/// to the smaller paper id. Associative and commutative, so reduction
/// order never matters.
fn better(a: (f64, PaperId), b: (f64, PaperId)) -> (f64, PaperId) {
    if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

#[cfg(feature = "parallel")]
fn best_candidate(
    inst: &Instance,
    order: &Order,
    candidates: &[PaperId],
    parallelism: usize,
) -> (f64, PaperId) {
    use rayon::prelude::*;

    assert!(!candidates.is_empty(), "a greedy step needs candidates");
    if parallelism > 1 && candidates.len() > 1 {
        let built = rayon::ThreadPoolBuilder::new()
            .num_threads(parallelism)
            .build();
        if let Ok(thread_pool) = built {
            return thread_pool.install(|| {
                candidates
                    .par_iter()
                    .map(|&p| score_candidate(inst, order, p))
                    .reduce_with(better)
                    .expect("candidate list is non-empty")
            });
        }
    }
    best_candidate_serial(inst, order, candidates)
}

#[cfg(not(feature = "parallel"))]
fn best_candidate(
    inst: &Instance,
    order: &Order,
    candidates: &[PaperId],
    _parallelism: usize,
) -> (f64, PaperId) {
    best_candidate_serial(inst, order, candidates)
}

fn best_candidate_serial(inst: &Instance, order: &Order, candidates: &[PaperId]) -> (f64, PaperId) {
    candidates
        .iter()
        .map(|&p| score_candidate(inst, order, p))
        .reduce(better)
        .expect("a greedy step needs candidates")
}

/// Finds the welfare-maximal full order by enumerating all n!
/// permutations, smallest-lexicographic first so ties resolve to the
/// lexicographically least order.
///
/// Refuses instances with more than [`EXHAUSTIVE_ORDER_BOUND`] papers.
pub fn exhaustive_best_order(inst: &Instance) -> Result<(Order, f64), SearchError> {
    let n = inst.paper_count();
    if n > EXHAUSTIVE_ORDER_BOUND {
        return Err(SearchError::TooLarge {
            papers: n,
            bound: EXHAUSTIVE_ORDER_BOUND,
        });
    }
    let mut perm: Vec<PaperId> = inst.papers().collect();
    let mut best_order = Order::from_papers(perm.clone());
    let mut best_usw = rrr::order_usw(inst, &best_order).expect("identity order is valid");
    while next_permutation(&mut perm) {
        let order = Order::from_papers(perm.clone());
        let usw = rrr::order_usw(inst, &order).expect("permutation is a valid order");
        if usw > best_usw {
            best_usw = usw;
            best_order = order;
        }
    }
    Ok((best_order, best_usw))
}

/// Advances `items` to the lexicographically next permutation.
/// Returns false once the final (descending) permutation has been
/// visited, leaving the slice untouched from then on.
fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut pivot = items.len() - 1;
    while pivot > 0 && items[pivot - 1] >= items[pivot] {
        pivot -= 1;
    }
    if pivot == 0 {
        return false;
    }
    let mut swap = items.len() - 1;
    while items[swap] <= items[pivot - 1] {
        swap -= 1;
    }
    items.swap(pivot - 1, swap);
    items[pivot..].reverse();
    true
}

/// Checks the greedy result against the optimal welfare under the
/// weak-submodularity guarantee `f_alg · (1 + γ²) ≥ f_opt`, where
/// `f = USW · n^α` for full orders.
///
/// A `ratio` below one flags a violation: either the γ estimate is too
/// small or one of the search routines is wrong. A zero `f_opt` is
/// vacuously satisfied and reports no ratio.
///
/// # Panics
///
/// Panics if `gamma < 1` or `alpha ≤ 0`.
pub fn approximation_report(
    inst: &Instance,
    alg: &SearchResult,
    opt_value: f64,
    gamma: f64,
    alpha: f64,
) -> ApproximationReport {
    assert!(gamma >= 1.0, "gamma must be at least 1, got {gamma}");
    assert!(alpha > 0.0, "alpha must be positive, got {alpha}");
    let scale = math::powf(inst.paper_count() as f64, alpha);
    let f_alg = alg.usw * scale;
    let f_opt = opt_value * scale;
    let (ratio, satisfied) = if f_opt == 0.0 {
        (None, true)
    } else {
        let r = f_alg * (1.0 + gamma * gamma) / f_opt;
        (Some(r), r >= 1.0)
    };
    ApproximationReport {
        f_alg,
        f_opt,
        gamma,
        alpha,
        ratio,
        satisfied,
    }
}
