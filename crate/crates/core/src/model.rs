//! Instances, picking orders, allocations, and the checks on them.
//!
//! An [`Instance`] is a papers-by-reviewers score matrix with per-reviewer
//! capacities and a common bundle size `k`. An [`Allocation`] maps each
//! paper to a set of reviewers. Everything downstream (mechanisms, search,
//! metrics) works through these types, and the fairness vocabulary lives
//! here: [`Instance::check_ef1`] decides envy-freeness up to one reviewer
//! and [`Instance::validate_allocation`] reports structural violations as
//! data rather than faults.
//!
//! Identifiers are 1-based everywhere they are visible: in files, logs,
//! traces, and error messages. [`PaperId`] and [`ReviewerId`] wrap the
//! external numbering and convert to row/column indexes at the edges.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// 1-based paper identifier, as written in every file format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PaperId(u32);

impl PaperId {
    /// Wraps an external 1-based id.
    pub fn new(id: u32) -> Self {
        PaperId(id)
    }

    /// Builds the id for row index `idx`.
    pub fn from_index(idx: usize) -> Self {
        PaperId(idx as u32 + 1)
    }

    /// The external 1-based id.
    pub fn get(self) -> u32 {
        self.0
    }

    /// Row index into instance storage.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for PaperId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// 1-based reviewer identifier, as written in every file format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReviewerId(u32);

impl ReviewerId {
    /// Wraps an external 1-based id.
    pub fn new(id: u32) -> Self {
        ReviewerId(id)
    }

    /// Builds the id for column index `idx`.
    pub fn from_index(idx: usize) -> Self {
        ReviewerId(idx as u32 + 1)
    }

    /// The external 1-based id.
    pub fn get(self) -> u32 {
        self.0
    }

    /// Column index into instance storage.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for ReviewerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Errors from instance construction and bundle evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum ModelError {
    /// A score is below zero; valuations must be non-negative.
    NegativeValue {
        /// Paper (row) of the offending entry.
        paper: PaperId,
        /// Reviewer (column) of the offending entry.
        reviewer: ReviewerId,
        /// The offending score.
        value: f64,
    },
    /// A score is NaN or infinite.
    NonFiniteValue {
        /// Paper (row) of the offending entry.
        paper: PaperId,
        /// Reviewer (column) of the offending entry.
        reviewer: ReviewerId,
    },
    /// Row lengths or capacity count disagree with the matrix shape.
    DimensionMismatch {
        /// What length was expected.
        expected: usize,
        /// What length was found.
        found: usize,
        /// Description of the mismatched part.
        what: &'static str,
    },
    /// The matrix has no rows or no columns.
    EmptyInstance,
    /// Bundle size `k` is zero or exceeds the reviewer count.
    InvalidK {
        /// The rejected bundle size.
        k: u32,
        /// Number of reviewers available.
        reviewers: usize,
    },
    /// A reviewer capacity is zero.
    InvalidCapacity {
        /// Reviewer with the zero capacity.
        reviewer: ReviewerId,
    },
    /// A reviewer id falls outside `1..=m`.
    UnknownReviewer {
        /// The out-of-range id.
        reviewer: ReviewerId,
    },
    /// The allocation fails structural validation.
    InvalidAllocation {
        /// Violations found by [`Instance::validate_allocation`].
        violations: Vec<AllocationViolation>,
    },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::NegativeValue {
                paper,
                reviewer,
                value,
            } => write!(
                f,
                "negative score {value} for paper {paper}, reviewer {reviewer}; \
                 scores must be non-negative (shift them up before loading)"
            ),
            ModelError::NonFiniteValue { paper, reviewer } => {
                write!(f, "non-finite score for paper {paper}, reviewer {reviewer}")
            }
            ModelError::DimensionMismatch {
                expected,
                found,
                what,
            } => write!(f, "{what}: expected length {expected}, found {found}"),
            ModelError::EmptyInstance => {
                write!(f, "instance needs at least one paper and one reviewer")
            }
            ModelError::InvalidK { k, reviewers } => write!(
                f,
                "bundle size k={k} must satisfy 1 <= k <= {reviewers} (reviewer count)"
            ),
            ModelError::InvalidCapacity { reviewer } => {
                write!(
                    f,
                    "reviewer {reviewer} has zero capacity; capacities must be positive"
                )
            }
            ModelError::UnknownReviewer { reviewer } => {
                write!(f, "reviewer id {reviewer} is out of range")
            }
            ModelError::InvalidAllocation { violations } => {
                write!(
                    f,
                    "allocation fails validation with {} violation(s)",
                    violations.len()
                )
            }
        }
    }
}

impl core::error::Error for ModelError {}

/// A reviewing instance: scores, capacities, and the bundle size.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    /// Row-major scores, `papers * reviewers` entries.
    values: Vec<f64>,
    capacities: Vec<u32>,
    k: u32,
    papers: usize,
    reviewers: usize,
    /// Per paper: reviewers by descending score, ties by ascending id.
    prefs: Vec<ReviewerId>,
}

impl Instance {
    /// Builds an instance from a score matrix (one row per paper), one
    /// capacity per reviewer, and the bundle size `k`.
    ///
    /// Scores must be finite and non-negative, capacities positive, and
    /// `1 <= k <= reviewers`.
    pub fn new(rows: Vec<Vec<f64>>, capacities: Vec<u32>, k: u32) -> Result<Self, ModelError> {
        let papers = rows.len();
        if papers == 0 {
            return Err(ModelError::EmptyInstance);
        }
        let reviewers = rows[0].len();
        if reviewers == 0 {
            return Err(ModelError::EmptyInstance);
        }
        for (p, row) in rows.iter().enumerate() {
            if row.len() != reviewers {
                return Err(ModelError::DimensionMismatch {
                    expected: reviewers,
                    found: row.len(),
                    what: "score matrix row",
                });
            }
            for (r, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(ModelError::NonFiniteValue {
                        paper: PaperId::from_index(p),
                        reviewer: ReviewerId::from_index(r),
                    });
                }
                if v < 0.0 {
                    return Err(ModelError::NegativeValue {
                        paper: PaperId::from_index(p),
                        reviewer: ReviewerId::from_index(r),
                        value: v,
                    });
                }
            }
        }
        if capacities.len() != reviewers {
            return Err(ModelError::DimensionMismatch {
                expected: reviewers,
                found: capacities.len(),
                what: "capacity list",
            });
        }
        if let Some(r) = capacities.iter().position(|&c| c == 0) {
            return Err(ModelError::InvalidCapacity {
                reviewer: ReviewerId::from_index(r),
            });
        }
        if k == 0 || k as usize > reviewers {
            return Err(ModelError::InvalidK { k, reviewers });
        }

        let mut values = Vec::with_capacity(papers * reviewers);
        for row in &rows {
            values.extend_from_slice(row);
        }

        let mut prefs = Vec::with_capacity(papers * reviewers);
        let mut scratch: Vec<ReviewerId> = (0..reviewers).map(ReviewerId::from_index).collect();
        for p in 0..papers {
            let row = &values[p * reviewers..(p + 1) * reviewers];
            scratch.sort_by(|a, b| {
                row[b.index()]
                    .partial_cmp(&row[a.index()])
                    .expect("scores are finite")
                    .then(a.cmp(b))
            });
            prefs.extend_from_slice(&scratch);
            scratch.sort_unstable();
        }

        Ok(Instance {
            values,
            capacities,
            k,
            papers,
            reviewers,
            prefs,
        })
    }

    /// Number of papers (rows).
    pub fn paper_count(&self) -> usize {
        self.papers
    }

    /// Number of reviewers (columns).
    pub fn reviewer_count(&self) -> usize {
        self.reviewers
    }

    /// Reviewers each paper should end up with.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Capacity of one reviewer.
    pub fn capacity(&self, reviewer: ReviewerId) -> u32 {
        self.capacities[reviewer.index()]
    }

    /// Score of `paper` for `reviewer`.
    pub fn value(&self, paper: PaperId, reviewer: ReviewerId) -> f64 {
        self.values[paper.index() * self.reviewers + reviewer.index()]
    }

    /// All paper ids in ascending order.
    pub fn papers(&self) -> impl Iterator<Item = PaperId> + '_ {
        (0..self.papers).map(PaperId::from_index)
    }

    /// All reviewer ids in ascending order.
    pub fn reviewers(&self) -> impl Iterator<Item = ReviewerId> + '_ {
        (0..self.reviewers).map(ReviewerId::from_index)
    }

    /// `paper`'s reviewers by descending score, ties by ascending id.
    pub(crate) fn preference(&self, paper: PaperId) -> &[ReviewerId] {
        &self.prefs[paper.index() * self.reviewers..(paper.index() + 1) * self.reviewers]
    }

    /// Total score of a reviewer bundle for `paper`.
    ///
    /// The summation order is pinned: ascending reviewer id, left to
    /// right. Every welfare figure in the workspace is built from this
    /// sum, which is what makes seeded runs byte-for-byte reproducible.
    pub fn bundle_value(&self, paper: PaperId, bundle: &[ReviewerId]) -> Result<f64, ModelError> {
        let mut sorted: Vec<ReviewerId> = bundle.to_vec();
        sorted.sort_unstable();
        let mut total = 0.0;
        for r in sorted {
            if r.get() == 0 || r.index() >= self.reviewers {
                return Err(ModelError::UnknownReviewer { reviewer: r });
            }
            total += self.value(paper, r);
        }
        Ok(total)
    }

    /// Ascending-id bundle sum for a bundle already stored sorted.
    pub(crate) fn sorted_bundle_value(&self, paper: PaperId, bundle: &[ReviewerId]) -> f64 {
        bundle.iter().map(|&r| self.value(paper, r)).sum()
    }

    /// Utilitarian social welfare of an allocation: the sum of every
    /// paper's bundle value, papers ascending, reviewers ascending.
    ///
    /// Expects bundle reviewer ids in range (as produced by the
    /// mechanisms or vetted by [`Instance::validate_allocation`]);
    /// out-of-range ids panic.
    pub fn usw(&self, alloc: &Allocation) -> f64 {
        let mut total = 0.0;
        for p in self.papers() {
            total += self.sorted_bundle_value(p, alloc.bundle(p));
        }
        total
    }

    /// Reports every ordered pair `(i, j)` where paper `i` envies paper
    /// `j`'s bundle even after dropping the best single reviewer from it:
    /// `min_r v_i(A_j \ {r}) > v_i(A_i)`. No pairs means the allocation
    /// is envy-free up to one reviewer. Empty envied bundles never
    /// violate.
    ///
    /// The allocation must pass [`Instance::validate_allocation`].
    pub fn check_ef1(&self, alloc: &Allocation) -> Result<Ef1Report, ModelError> {
        let report = self.validate_allocation(alloc);
        if !report.is_ok() {
            return Err(ModelError::InvalidAllocation {
                violations: report.violations,
            });
        }
        let mut violating = Vec::new();
        for i in self.papers() {
            let own = self.sorted_bundle_value(i, alloc.bundle(i));
            for j in self.papers() {
                if i == j || alloc.bundle(j).is_empty() {
                    continue;
                }
                // Each removal is re-summed from scratch in the fixed
                // ascending-id order; subtracting the dropped value from
                // the total would round differently and can flip pairs
                // the mechanism admitted with exact equality.
                let other = alloc.bundle(j);
                let tolerable = (0..other.len()).any(|drop| {
                    let kept: f64 = other
                        .iter()
                        .enumerate()
                        .filter(|&(l, _)| l != drop)
                        .map(|(_, &r)| self.value(i, r))
                        .sum();
                    kept <= own
                });
                if !tolerable {
                    violating.push((i, j));
                }
            }
        }
        Ok(Ef1Report {
            violating_pairs: violating,
        })
    }

    /// Structural validation: bundle sizes at most `k`, no duplicate
    /// reviewer within a bundle, ids in range, reviewer loads within
    /// capacity. Violations come back as data; an empty list means the
    /// allocation is well-formed.
    pub fn validate_allocation(&self, alloc: &Allocation) -> ValidationReport {
        let mut violations = Vec::new();
        if alloc.paper_count() != self.papers {
            violations.push(AllocationViolation::PaperCountMismatch {
                expected: self.papers,
                found: alloc.paper_count(),
            });
        }
        let mut loads = vec![0u32; self.reviewers];
        for (idx, bundle) in alloc.bundles.iter().enumerate() {
            let paper = PaperId::from_index(idx);
            if bundle.len() > self.k as usize {
                violations.push(AllocationViolation::BundleTooLarge {
                    paper,
                    size: bundle.len(),
                    k: self.k,
                });
            }
            for pair in bundle.windows(2) {
                if pair[0] == pair[1] {
                    violations.push(AllocationViolation::DuplicateInBundle {
                        paper,
                        reviewer: pair[0],
                    });
                }
            }
            for &r in bundle {
                if r.get() == 0 || r.index() >= self.reviewers {
                    violations.push(AllocationViolation::UnknownReviewer { paper, reviewer: r });
                } else {
                    loads[r.index()] += 1;
                }
            }
        }
        for (idx, &load) in loads.iter().enumerate() {
            if load > self.capacities[idx] {
                violations.push(AllocationViolation::OverCapacity {
                    reviewer: ReviewerId::from_index(idx),
                    load,
                    capacity: self.capacities[idx],
                });
            }
        }
        ValidationReport { violations }
    }

    /// True when every paper holds exactly `k` reviewers.
    pub fn is_complete(&self, alloc: &Allocation) -> bool {
        alloc.paper_count() == self.papers
            && alloc.bundles.iter().all(|b| b.len() == self.k as usize)
    }
}

/// A picking order: a sequence of distinct papers, possibly a strict
/// subset of the instance's papers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Order {
    ids: Vec<PaperId>,
}

impl Order {
    /// The empty order.
    pub fn empty() -> Self {
        Order { ids: Vec::new() }
    }

    /// Builds an order from 1-based paper ids.
    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        Order {
            ids: ids.into_iter().map(PaperId::new).collect(),
        }
    }

    /// Builds an order from typed paper ids.
    pub fn from_papers(ids: Vec<PaperId>) -> Self {
        Order { ids }
    }

    /// Appends a paper at the end.
    pub fn push(&mut self, paper: PaperId) {
        self.ids.push(paper);
    }

    /// Papers in picking sequence.
    pub fn papers(&self) -> &[PaperId] {
        &self.ids
    }

    /// Number of papers in the order.
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    /// True for the empty order.
    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// True when `paper` appears in the order.
    pub fn contains(&self, paper: PaperId) -> bool {
        self.ids.contains(&paper)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.ids.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// One reviewer bundle per paper, plus bookkeeping from the mechanism
/// that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct Allocation {
    /// Bundles stored with ascending reviewer ids.
    bundles: Vec<Vec<ReviewerId>>,
    /// First reviewer ever assigned to each paper; `None` for papers
    /// that received nothing or for allocations loaded from files.
    first: Vec<Option<ReviewerId>>,
    halted_early: bool,
}

impl Allocation {
    /// An allocation of `papers` empty bundles.
    pub fn empty(papers: usize) -> Self {
        Allocation {
            bundles: vec![Vec::new(); papers],
            first: vec![None; papers],
            halted_early: false,
        }
    }

    /// Builds an allocation from raw 1-based bundles, e.g. parsed from a
    /// file. Bundles are sorted ascending; duplicates are kept so that
    /// validation can report them. First-reviewer bookkeeping is unknown
    /// for external data and stays `None`.
    pub fn from_bundles(raw: Vec<Vec<u32>>) -> Self {
        let papers = raw.len();
        let mut bundles: Vec<Vec<ReviewerId>> = raw
            .into_iter()
            .map(|b| b.into_iter().map(ReviewerId::new).collect())
            .collect();
        for b in &mut bundles {
            b.sort_unstable();
        }
        Allocation {
            bundles,
            first: vec![None; papers],
            halted_early: false,
        }
    }

    /// Number of papers covered.
    pub fn paper_count(&self) -> usize {
        self.bundles.len()
    }

    /// The bundle of one paper, reviewer ids ascending.
    pub fn bundle(&self, paper: PaperId) -> &[ReviewerId] {
        &self.bundles[paper.index()]
    }

    /// Iterates `(paper, bundle)` with papers ascending.
    pub fn bundles(&self) -> impl Iterator<Item = (PaperId, &[ReviewerId])> {
        self.bundles
            .iter()
            .enumerate()
            .map(|(i, b)| (PaperId::from_index(i), b.as_slice()))
    }

    /// First reviewer ever assigned to `paper`, if known.
    pub fn first_reviewer(&self, paper: PaperId) -> Option<ReviewerId> {
        self.first[paper.index()]
    }

    /// True when the producing mechanism stopped before completing all
    /// rounds because some paper ran out of reviewers to try.
    pub fn halted_early(&self) -> bool {
        self.halted_early
    }

    /// True when `paper` already holds `reviewer`.
    pub fn holds(&self, paper: PaperId, reviewer: ReviewerId) -> bool {
        self.bundles[paper.index()].binary_search(&reviewer).is_ok()
    }

    /// Inserts `reviewer` into `paper`'s bundle, keeping ascending order
    /// and recording the first assignment.
    pub(crate) fn assign(&mut self, paper: PaperId, reviewer: ReviewerId) {
        let bundle = &mut self.bundles[paper.index()];
        let pos = bundle.partition_point(|&r| r < reviewer);
        bundle.insert(pos, reviewer);
        self.first[paper.index()].get_or_insert(reviewer);
    }

    pub(crate) fn set_halted(&mut self) {
        self.halted_early = true;
    }
}

/// Outcome of [`Instance::check_ef1`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ef1Report {
    /// Ordered pairs `(envier, envied)` violating the EF1 condition,
    /// in ascending `(i, j)` order.
    pub violating_pairs: Vec<(PaperId, PaperId)>,
}

impl Ef1Report {
    /// Number of violating pairs.
    pub fn count(&self) -> usize {
        self.violating_pairs.len()
    }

    /// True when no pair violates EF1.
    pub fn is_ef1(&self) -> bool {
        self.violating_pairs.is_empty()
    }

    /// Violations with both papers drawn from `papers`, for checking
    /// fairness among the participants of a partial picking order.
    pub fn count_among(&self, papers: &[PaperId]) -> usize {
        self.violating_pairs
            .iter()
            .filter(|(i, j)| papers.contains(i) && papers.contains(j))
            .count()
    }
}

/// One structural defect found by [`Instance::validate_allocation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AllocationViolation {
    /// The allocation covers a different number of papers than the
    /// instance has.
    PaperCountMismatch {
        /// Papers in the instance.
        expected: usize,
        /// Papers in the allocation.
        found: usize,
    },
    /// A bundle holds more than `k` reviewers.
    BundleTooLarge {
        /// Offending paper.
        paper: PaperId,
        /// Its bundle size.
        size: usize,
        /// The instance bundle limit.
        k: u32,
    },
    /// A reviewer appears twice in one bundle.
    DuplicateInBundle {
        /// Offending paper.
        paper: PaperId,
        /// The repeated reviewer.
        reviewer: ReviewerId,
    },
    /// A reviewer id outside `1..=m`.
    UnknownReviewer {
        /// Paper whose bundle holds the id.
        paper: PaperId,
        /// The out-of-range id.
        reviewer: ReviewerId,
    },
    /// A reviewer assigned to more papers than their capacity allows.
    OverCapacity {
        /// Overloaded reviewer.
        reviewer: ReviewerId,
        /// Papers assigned.
        load: u32,
        /// The reviewer's capacity.
        capacity: u32,
    },
}

impl fmt::Display for AllocationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AllocationViolation::PaperCountMismatch { expected, found } => {
                write!(
                    f,
                    "allocation covers {found} papers, instance has {expected}"
                )
            }
            AllocationViolation::BundleTooLarge { paper, size, k } => {
                write!(f, "paper {paper} holds {size} reviewers, limit is k={k}")
            }
            AllocationViolation::DuplicateInBundle { paper, reviewer } => {
                write!(f, "paper {paper} lists reviewer {reviewer} more than once")
            }
            AllocationViolation::UnknownReviewer { paper, reviewer } => {
                write!(f, "paper {paper} lists unknown reviewer id {reviewer}")
            }
            AllocationViolation::OverCapacity {
                reviewer,
                load,
                capacity,
            } => write!(
                f,
                "reviewer {reviewer} assigned to {load} papers, capacity is {capacity}"
            ),
        }
    }
}

/// Outcome of [`Instance::validate_allocation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Everything wrong with the allocation, possibly empty.
    pub violations: Vec<AllocationViolation>,
}

impl ValidationReport {
    /// True when no violations were found.
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}
