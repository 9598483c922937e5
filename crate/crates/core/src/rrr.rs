//! Round-robin assignment mechanisms.
//!
//! [`run`] is reviewer round robin (RRR): up to `k` rounds of picking in
//! a fixed paper order, where every attempt to take a reviewer is vetted
//! against the objections of papers that tried the same reviewer before.
//! The vet keeps an invariant strong enough to make the final allocation
//! envy-free up to one reviewer among the ordered papers: nobody who
//! attempted reviewer `r` earlier may end up preferring the taker's
//! bundle (discounted by the taker's first pick, when the objector comes
//! later in the order) to their own.
//!
//! [`naive_run`] is the unguarded variant: same preference scan, capacity
//! check only, no objections, no early halt. It exists as a baseline and
//! can produce allocations with unbounded envy.
//!
//! Everything here is deterministic: identical inputs produce identical
//! allocations and traces, bit for bit.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::model::{Allocation, Instance, Order, PaperId, ReviewerId};

/// What happened to one attempt by a paper to take a reviewer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The reviewer was assigned and the paper's turn ended.
    Assigned,
    /// The paper already holds this reviewer.
    RefusedDuplicate,
    /// The reviewer's capacity is exhausted.
    RefusedCapacity,
    /// An earlier attempter of this reviewer would envy the resulting
    /// bundle; the objecting paper is recorded.
    RefusedObjection(PaperId),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Assigned => write!(f, "assigned"),
            Outcome::RefusedDuplicate => write!(f, "refused-duplicate"),
            Outcome::RefusedCapacity => write!(f, "refused-capacity"),
            Outcome::RefusedObjection(p) => write!(f, "refused-objection({p})"),
        }
    }
}

/// One attempt in a mechanism run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceEvent {
    /// Round number, starting at 1.
    pub round: u32,
    /// The picking paper.
    pub paper: PaperId,
    /// The attempted reviewer.
    pub reviewer: ReviewerId,
    /// How the attempt ended.
    pub outcome: Outcome,
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            self.round, self.paper, self.reviewer, self.outcome
        )
    }
}

/// The full attempt log of a mechanism run, in execution order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    events: Vec<TraceEvent>,
}

impl Trace {
    /// All events in execution order.
    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    /// Renders the line format `round,paper,reviewer,outcome`, one event
    /// per line, with a trailing newline after the last event.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.events {
            writeln!(out, "{e}").expect("writing to String cannot fail");
        }
        out
    }

    /// Rebuilds the allocation from the `assigned` events alone. Used to
    /// check that traces replay to the run's result; `halted_early` is
    /// not part of the event stream and stays false.
    pub fn replay(&self, papers: usize) -> Allocation {
        let mut alloc = Allocation::empty(papers);
        for e in &self.events {
            if e.outcome == Outcome::Assigned {
                alloc.assign_for_replay(e.paper, e.reviewer);
            }
        }
        alloc
    }
}

/// Errors from running a mechanism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RrrError {
    /// A paper id in the order falls outside `1..=n`.
    UnknownPaper(PaperId),
    /// A paper appears twice in the order.
    DuplicatePaper(PaperId),
}

impl fmt::Display for RrrError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RrrError::UnknownPaper(p) => write!(f, "order names unknown paper id {p}"),
            RrrError::DuplicatePaper(p) => write!(f, "order lists paper {p} more than once"),
        }
    }
}

impl core::error::Error for RrrError {}

/// Objector bookkeeping: for every reviewer, the papers that have
/// attempted them, in first-attempt order, with O(1) membership.
struct Objectors {
    by_reviewer: Vec<Vec<PaperId>>,
    member: Vec<bool>,
    papers: usize,
}

impl Objectors {
    fn new(papers: usize, reviewers: usize) -> Self {
        Objectors {
            by_reviewer: vec![Vec::new(); reviewers],
            member: vec![false; papers * reviewers],
            papers,
        }
    }

    fn insert(&mut self, reviewer: ReviewerId, paper: PaperId) {
        let slot = reviewer.index() * self.papers + paper.index();
        if !self.member[slot] {
            self.member[slot] = true;
            self.by_reviewer[reviewer.index()].push(paper);
        }
    }

    fn of(&self, reviewer: ReviewerId) -> &[PaperId] {
        &self.by_reviewer[reviewer.index()]
    }
}

/// Value of `(bundle + extra) \ skip` for `viewer`, summed left to right
/// over ascending reviewer ids.
///
/// `bundle` must already be ascending and must not contain `extra`. The
/// merged walk makes this the same floating-point sum the EF1 checker
/// computes for the realized bundle later, so in-mechanism vetting and
/// post-hoc checking can never disagree by rounding.
fn merged_value(
    inst: &Instance,
    viewer: PaperId,
    bundle: &[ReviewerId],
    extra: ReviewerId,
    skip: Option<ReviewerId>,
) -> f64 {
    let mut total = 0.0;
    let mut extra_pending = true;
    for &r in bundle {
        if extra_pending && extra < r {
            if Some(extra) != skip {
                total += inst.value(viewer, extra);
            }
            extra_pending = false;
        }
        if Some(r) != skip {
            total += inst.value(viewer, r);
        }
    }
    if extra_pending && Some(extra) != skip {
        total += inst.value(viewer, extra);
    }
    total
}

/// Runs reviewer round robin for `inst` with the given picking order,
/// returning the allocation and the full attempt trace.
///
/// Up to `k` rounds are played. On its turn a paper scans reviewers by
/// descending score (ties by ascending id) and attempts each in turn.
/// An attempt on reviewer `r` succeeds when the paper does not already
/// hold `r`, the load of `r` is below capacity, and no previous
/// attempter of `r` objects. An objector `j` earlier in the order blocks
/// the pick if `j` would value the picker's new bundle above `j`'s own;
/// an objector later in the order gets the same test with the picker's
/// first-ever reviewer discounted from the new bundle. Every attempt
/// permanently registers the paper as an objector for that reviewer.
///
/// A paper that exhausts all reviewers without success stops the whole
/// mechanism: the partial allocation is returned with `halted_early`
/// set. Papers absent from the order receive empty bundles.
pub fn run(inst: &Instance, order: &Order) -> Result<(Allocation, Trace), RrrError> {
    let ranks = validate_order(inst, order)?;
    let n = inst.paper_count();
    let m = inst.reviewer_count();
    let mut alloc = Allocation::empty(n);
    let mut loads = vec![0u32; m];
    let mut objectors = Objectors::new(n, m);
    let mut trace = Trace::default();

    for round in 1..=inst.k() {
        for &picker in order.papers() {
            let mut assigned = false;
            for &r in inst.preference(picker) {
                if alloc.holds(picker, r) {
                    trace.events.push(TraceEvent {
                        round,
                        paper: picker,
                        reviewer: r,
                        outcome: Outcome::RefusedDuplicate,
                    });
                    continue;
                }
                objectors.insert(r, picker);
                if loads[r.index()] >= inst.capacity(r) {
                    trace.events.push(TraceEvent {
                        round,
                        paper: picker,
                        reviewer: r,
                        outcome: Outcome::RefusedCapacity,
                    });
                    continue;
                }
                if let Some(j) = first_objection(inst, &alloc, &objectors, &ranks, picker, r) {
                    trace.events.push(TraceEvent {
                        round,
                        paper: picker,
                        reviewer: r,
                        outcome: Outcome::RefusedObjection(j),
                    });
                    continue;
                }
                alloc.assign(picker, r);
                loads[r.index()] += 1;
                trace.events.push(TraceEvent {
                    round,
                    paper: picker,
                    reviewer: r,
                    outcome: Outcome::Assigned,
                });
                assigned = true;
                break;
            }
            if !assigned {
                alloc.set_halted();
                return Ok((alloc, trace));
            }
        }
    }
    Ok((alloc, trace))
}

/// First previous attempter of `r` that objects to `picker` taking it,
/// in first-attempt order; `None` when the pick is safe.
fn first_objection(
    inst: &Instance,
    alloc: &Allocation,
    objectors: &Objectors,
    ranks: &[usize],
    picker: PaperId,
    r: ReviewerId,
) -> Option<PaperId> {
    let bundle = alloc.bundle(picker);
    // The discount for later objectors is the picker's first-ever
    // reviewer; if this pick would be the first, it discounts itself.
    let first = alloc.first_reviewer(picker).unwrap_or(r);
    let picker_rank = ranks[picker.index()];
    for &j in objectors.of(r) {
        if j == picker {
            continue;
        }
        let own = inst.sorted_bundle_value(j, alloc.bundle(j));
        let objects = if ranks[j.index()] < picker_rank {
            merged_value(inst, j, bundle, r, None) > own
        } else {
            merged_value(inst, j, bundle, r, Some(first)) > own
        };
        if objects {
            return Some(j);
        }
    }
    None
}

/// Runs the unguarded round robin: up to `k` rounds, each paper takes
/// its best-scored reviewer it does not hold and whose capacity is not
/// exhausted, ties by ascending id. No objection vetting; a paper with
/// no available reviewer just skips the turn, so the mechanism never
/// halts early. Papers absent from the order receive empty bundles.
pub fn naive_run(inst: &Instance, order: &Order) -> Result<Allocation, RrrError> {
    validate_order(inst, order)?;
    let mut alloc = Allocation::empty(inst.paper_count());
    let mut loads = vec![0u32; inst.reviewer_count()];
    for _round in 1..=inst.k() {
        for &picker in order.papers() {
            for &r in inst.preference(picker) {
                if alloc.holds(picker, r) || loads[r.index()] >= inst.capacity(r) {
                    continue;
                }
                alloc.assign(picker, r);
                loads[r.index()] += 1;
                break;
            }
        }
    }
    Ok(alloc)
}

/// Utilitarian welfare of the allocation that [`run`] produces for this
/// order. The summation matches [`Instance::usw`] exactly.
pub fn order_usw(inst: &Instance, order: &Order) -> Result<f64, RrrError> {
    let (alloc, _) = run(inst, order)?;
    Ok(inst.usw(&alloc))
}

/// Checks ids and distinctness, returning each paper's rank in the
/// order (unused slots stay at `usize::MAX`).
fn validate_order(inst: &Instance, order: &Order) -> Result<Vec<usize>, RrrError> {
    let mut ranks = vec![usize::MAX; inst.paper_count()];
    for (pos, &p) in order.papers().iter().enumerate() {
        if p.get() == 0 || p.index() >= inst.paper_count() {
            return Err(RrrError::UnknownPaper(p));
        }
        if ranks[p.index()] != usize::MAX {
            return Err(RrrError::DuplicatePaper(p));
        }
        ranks[p.index()] = pos;
    }
    Ok(ranks)
}

impl Allocation {
    /// Insertion used by [`Trace::replay`]; identical to the mechanism's
    /// bookkeeping so replays reproduce bundles and first picks.
    fn assign_for_replay(&mut self, paper: PaperId, reviewer: ReviewerId) {
        self.assign(paper, reviewer);
    }
}
