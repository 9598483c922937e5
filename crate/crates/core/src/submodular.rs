//! Set-function view of order construction, with curvature estimators.
//!
//! A picking order can be encoded as a set of `(paper, position)`
//! placements. The sets that place each paper at most once and fill
//! each position at most once are exactly the independent sets of a
//! partition matroid over the `n × n` ground set; [`PlacementSet`]
//! carries the encoding, the independence test, and the set→order
//! mapping (sort by position then paper, keep each paper's first
//! placement).
//!
//! On top of that sits the monotonized objective
//! `f(S) = USW_RRR(order(S)) · |S|^α` and its marginal gains. Greedy
//! guarantees for this objective need two empirical constants:
//!
//! - `α`, an exponent large enough that `f` never decreases when a
//!   placement is added ([`estimate_alpha`] samples append steps,
//!   [`exhaustive_alpha`] checks every chain on tiny instances);
//! - `γ`, the weak-submodularity ratio bounding how much a marginal
//!   gain can grow on supersets ([`estimate_gamma`] samples nested
//!   pairs, [`exhaustive_gamma`] enumerates all of them).
//!
//! Estimates are padded by a configurable relative margin and are
//! deterministic in the seed. The `_with` variants accept an arbitrary
//! objective, which lets tests inject e.g. an additive function whose
//! true γ is exactly 1.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::math;
use crate::model::{Instance, Order, PaperId};
use crate::rng::{partial_shuffle, Rng};
use crate::rrr;

/// Largest paper count the exhaustive enumerators accept (the ground
/// set has `n²` placements, so n = 3 already means 512 subsets).
pub const EXHAUSTIVE_SET_BOUND: usize = 3;

/// Returned α never falls below this floor.
pub const ALPHA_FLOOR: f64 = 0.01;

/// Default relative slack added on top of sampled maxima.
pub const DEFAULT_MARGIN: f64 = 0.01;

/// Default threshold below which a marginal gain counts as zero, so
/// ratio denominators are never floating-point dust.
pub const DEFAULT_GAIN_TOLERANCE: f64 = 1e-12;

/// One element of the ground set: a paper placed at a position.
///
/// Both coordinates are 1-based and range over the paper count. The
/// canonical ordering sorts by position first, then paper, the same
/// key the set→order mapping uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Placement {
    /// The paper being placed.
    pub paper: PaperId,
    /// The 1-based slot in the picking order.
    pub position: usize,
}

impl Placement {
    /// Creates a placement from a 1-based paper id and position.
    ///
    /// # Panics
    ///
    /// Panics if `position` is zero (paper ids are validated by
    /// [`PaperId::new`]).
    pub fn new(paper: u32, position: usize) -> Self {
        assert!(position >= 1, "positions are 1-based");
        Placement {
            paper: PaperId::new(paper),
            position,
        }
    }
}

impl PartialOrd for Placement {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Placement {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.position, self.paper).cmp(&(other.position, other.paper))
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.paper, self.position)
    }
}

/// A set of placements, kept sorted by (position, paper) with exact
/// duplicates removed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PlacementSet {
    elements: Vec<Placement>,
}

impl PlacementSet {
    /// The empty set.
    pub fn empty() -> Self {
        PlacementSet::default()
    }

    /// Builds a set from arbitrary placements, sorting and removing
    /// exact duplicates.
    pub fn new(mut elements: Vec<Placement>) -> Self {
        elements.sort();
        elements.dedup();
        PlacementSet { elements }
    }

    /// Encodes an order as the placement set `{(oₗ, l)}`.
    pub fn from_order(order: &Order) -> Self {
        let elements = order
            .papers()
            .iter()
            .enumerate()
            .map(|(idx, &paper)| Placement {
                paper,
                position: idx + 1,
            })
            .collect();
        // Positions are distinct by construction, so already canonical.
        PlacementSet { elements }
    }

    /// Number of placements in the set.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Whether the set is empty.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The placements in canonical (position, paper) order.
    pub fn elements(&self) -> &[Placement] {
        &self.elements
    }

    /// Whether `element` is in the set.
    pub fn contains(&self, element: Placement) -> bool {
        self.elements.binary_search(&element).is_ok()
    }

    /// The set with `element` added (no-op when already present).
    pub fn with(&self, element: Placement) -> Self {
        let mut elements = self.elements.clone();
        if let Err(idx) = elements.binary_search(&element) {
            elements.insert(idx, element);
        }
        PlacementSet { elements }
    }

    /// Whether the set is independent in the partition matroid: no two
    /// placements share a paper, and no two share a position.
    pub fn is_independent(&self) -> bool {
        // Elements are sorted by (position, paper), so equal positions
        // are adjacent; papers need their own pass.
        if self
            .elements
            .windows(2)
            .any(|w| w[0].position == w[1].position)
        {
            return false;
        }
        let mut papers: Vec<PaperId> = self.elements.iter().map(|e| e.paper).collect();
        papers.sort();
        papers.windows(2).all(|w| w[0] != w[1])
    }

    /// Maps the set to a picking order: placements are scanned in
    /// (position, paper) order and each paper enters at its first
    /// placement; later placements of the same paper are dropped.
    ///
    /// On independent sets this is a bijection onto orders of the
    /// placed papers; on arbitrary sets it is the canonical extension.
    pub fn to_order(&self) -> Order {
        let mut order = Order::empty();
        for e in &self.elements {
            if !order.contains(e.paper) {
                order.push(e.paper);
            }
        }
        order
    }
}

impl fmt::Display for PlacementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.elements.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Sampling parameters for the α and γ estimators.
#[derive(Clone, Debug, PartialEq)]
pub struct EstimationConfig {
    /// Number of samples to draw (≥ 1).
    pub num_samples: usize,
    /// Seed for the sampling generator.
    pub seed: u64,
    /// Optional cap on sampled order lengths (α) or set sizes (γ).
    pub max_prefix: Option<usize>,
    /// Relative slack added to the sampled maximum, e.g. 0.01 for 1%.
    pub margin: f64,
    /// Marginal gains at or below this are treated as zero.
    pub gain_tolerance: f64,
    /// When true (the default), the γ estimator samples arbitrary
    /// subsets of the ground set; when false it samples only
    /// prefix-shaped independent sets, mirroring what greedy
    /// construction actually evaluates.
    pub arbitrary_positions: bool,
}

impl Default for EstimationConfig {
    fn default() -> Self {
        EstimationConfig {
            num_samples: 200,
            seed: 0,
            max_prefix: None,
            margin: DEFAULT_MARGIN,
            gain_tolerance: DEFAULT_GAIN_TOLERANCE,
            arbitrary_positions: true,
        }
    }
}

impl EstimationConfig {
    fn validate(&self) {
        assert!(self.num_samples >= 1, "at least one sample is required");
        assert!(self.margin >= 0.0, "margin must be non-negative");
        assert!(
            self.gain_tolerance >= 0.0,
            "gain tolerance must be non-negative"
        );
    }
}

/// A γ estimate together with sampling diagnostics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaEstimate {
    /// The padded estimate, always ≥ 1.
    pub gamma: f64,
    /// Samples whose subset gain was positive (ratio computed).
    pub valid_samples: usize,
    /// Samples skipped because the subset gain was at or below the
    /// tolerance.
    pub skipped_zero_gain: usize,
}

/// A triple witnessing an unbounded γ: the element gains nothing at
/// the subset but something at the superset.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaWitness {
    /// The subset X.
    pub subset: PlacementSet,
    /// The superset Y ⊇ X.
    pub superset: PlacementSet,
    /// The element e ∉ Y.
    pub element: Placement,
    /// Marginal gain of `element` at the subset (≤ tolerance).
    pub subset_gain: f64,
    /// Marginal gain of `element` at the superset (> tolerance).
    pub superset_gain: f64,
}

/// Errors from the set-function analysis routines.
#[derive(Clone, Debug, PartialEq)]
pub enum SubmodularError {
    /// Marginal gain of an element already in the set.
    ElementPresent {
        /// The offending element.
        element: Placement,
    },
    /// No finite exponent makes the objective monotone: appending
    /// `paper` to `order` drops the welfare from `usw_before` to zero.
    UnboundedAlpha {
        /// The order before the append.
        order: Order,
        /// The appended paper.
        paper: PaperId,
        /// Welfare before the append (positive).
        usw_before: f64,
    },
    /// Every γ sample had a zero subset gain; no ratio could be formed.
    NoValidSamples,
    /// The instance is too large for exhaustive set enumeration.
    TooLarge {
        /// Number of papers in the instance.
        papers: usize,
        /// Maximum supported paper count.
        bound: usize,
    },
    /// γ is unbounded on this instance and exponent; the witness shows
    /// a zero subset gain turning positive on a superset.
    UnboundedGamma(Box<GammaWitness>),
}

impl fmt::Display for SubmodularError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubmodularError::ElementPresent { element } => {
                write!(f, "element {element} is already in the set")
            }
            SubmodularError::UnboundedAlpha {
                order,
                paper,
                usw_before,
            } => write!(
                f,
                "no finite exponent keeps the objective monotone: appending \
                 paper {paper} to {order} drops welfare from {usw_before} to zero"
            ),
            SubmodularError::NoValidSamples => write!(
                f,
                "every sample had zero marginal gain at the subset; cannot \
                 form a gamma ratio"
            ),
            SubmodularError::TooLarge { papers, bound } => write!(
                f,
                "exhaustive enumeration over {papers} papers means 2^{} \
                 placement sets, beyond the bound of {bound} papers",
                papers * papers
            ),
            SubmodularError::UnboundedGamma(w) => write!(
                f,
                "gamma is unbounded: element {} gains {} at superset {} but \
                 only {} at subset {}",
                w.element, w.superset_gain, w.superset, w.subset_gain, w.subset
            ),
        }
    }
}

impl core::error::Error for SubmodularError {}

/// The monotonized objective `USW_RRR(order(S)) · |S|^α`, with
/// `0^α := 0` so the empty set scores zero.
///
/// # Panics
///
/// Panics if `alpha ≤ 0` or if a placement names a paper the instance
/// does not have.
pub fn objective(inst: &Instance, set: &PlacementSet, alpha: f64) -> f64 {
    assert!(alpha > 0.0, "alpha must be positive, got {alpha}");
    if set.is_empty() {
        return 0.0;
    }
    let usw =
        rrr::order_usw(inst, &set.to_order()).expect("placements reference papers in the instance");
    usw * math::powf(set.len() as f64, alpha)
}

/// Marginal gain `f(S + e) − f(S)` of adding `element` to `set`.
///
/// Errors when `element` is already present. The gain can be negative
/// when `alpha` is too small to make the objective monotone.
///
/// # Panics
///
/// As [`objective`].
pub fn marginal_gain(
    inst: &Instance,
    set: &PlacementSet,
    element: Placement,
    alpha: f64,
) -> Result<f64, SubmodularError> {
    if set.contains(element) {
        return Err(SubmodularError::ElementPresent { element });
    }
    Ok(objective(inst, &set.with(element), alpha) - objective(inst, set, alpha))
}

/// What a sampled append step demands of the exponent.
#[derive(Clone, Copy, Debug, PartialEq)]
enum AlphaConstraint {
    /// Welfare did not decrease; any positive exponent works.
    None,
    /// Welfare decreased but stayed positive; α must be at least this.
    AtLeast(f64),
    /// Welfare dropped to zero; no finite exponent works.
    Unbounded,
}

/// Classifies one append step: welfare `usw_before` over `len`
/// placements became `usw_after` over `len + 1`.
fn alpha_requirement(usw_before: f64, usw_after: f64, len: usize) -> AlphaConstraint {
    if usw_after >= usw_before {
        return AlphaConstraint::None;
    }
    if usw_after == 0.0 {
        return AlphaConstraint::Unbounded;
    }
    // usw_before > usw_after > 0 forces usw_before > 0, which rules
    // out the empty set, so len ≥ 1 here.
    let len = len as f64;
    AlphaConstraint::AtLeast(math::ln(usw_before / usw_after) / math::ln((len + 1.0) / len))
}

/// Estimates the monotonizing exponent α by sampling append steps.
///
/// Each sample draws a uniform partial order O (length capped by
/// `max_prefix`) and a paper i ∉ O, then compares `USW_RRR(O)` with
/// `USW_RRR(O + i)`. A welfare drop demands a minimum exponent; the
/// estimate is the sampled maximum padded by `cfg.margin`, and never
/// below [`ALPHA_FLOOR`] (which is also the result when no sample
/// constrains).
///
/// Deterministic in `(instance, config)`. Errors if a sampled append
/// zeroes out a positive welfare, since no finite exponent recovers
/// monotonicity there.
pub fn estimate_alpha(inst: &Instance, cfg: &EstimationConfig) -> Result<f64, SubmodularError> {
    cfg.validate();
    let n = inst.paper_count();
    let max_len = cfg.max_prefix.unwrap_or(n - 1).min(n - 1);
    let mut rng = Rng::seed_from_u64(cfg.seed);
    let papers: Vec<PaperId> = inst.papers().collect();
    let mut pool = Vec::new();
    let mut requirement: Option<f64> = None;

    for _ in 0..cfg.num_samples {
        let len = rng.next_below(max_len as u64 + 1) as usize;
        pool.clone_from(&papers);
        partial_shuffle(&mut rng, &mut pool, len + 1);
        let order = Order::from_papers(pool[..len].to_vec());
        let appended = pool[len];
        let mut extended = order.clone();
        extended.push(appended);

        let before = rrr::order_usw(inst, &order).expect("sampled orders are valid");
        let after = rrr::order_usw(inst, &extended).expect("sampled orders are valid");
        match alpha_requirement(before, after, len) {
            AlphaConstraint::None => {}
            AlphaConstraint::AtLeast(a) => {
                requirement = Some(requirement.map_or(a, |r| if a > r { a } else { r }));
            }
            AlphaConstraint::Unbounded => {
                return Err(SubmodularError::UnboundedAlpha {
                    order,
                    paper: appended,
                    usw_before: before,
                });
            }
        }
    }

    Ok(match requirement {
        Some(r) => {
            let padded = r * (1.0 + cfg.margin);
            if padded > ALPHA_FLOOR {
                padded
            } else {
                ALPHA_FLOOR
            }
        }
        None => ALPHA_FLOOR,
    })
}

/// Every placement of the `n × n` ground set, paper-major.
fn ground_set(n: usize) -> Vec<Placement> {
    let mut elements = Vec::with_capacity(n * n);
    for paper in 1..=n as u32 {
        for position in 1..=n {
            elements.push(Placement::new(paper, position));
        }
    }
    elements
}

/// Estimates the weak-submodularity ratio γ of the instance objective
/// at exponent `alpha` by sampling nested subset pairs.
///
/// See [`estimate_gamma_with`]; the objective is
/// `f(S) = USW_RRR(order(S)) · |S|^alpha`.
pub fn estimate_gamma(
    inst: &Instance,
    alpha: f64,
    cfg: &EstimationConfig,
) -> Result<GammaEstimate, SubmodularError> {
    assert!(alpha > 0.0, "alpha must be positive, got {alpha}");
    estimate_gamma_with(inst.paper_count(), |s| objective(inst, s, alpha), cfg)
}

/// Estimates γ for an arbitrary set function over the `n × n` ground
/// set.
///
/// Each sample draws a superset Y (an arbitrary subset of the ground
/// set by default, or a prefix-shaped independent set when
/// `cfg.arbitrary_positions` is false), keeps each element of Y with
/// probability ½ to form X ⊆ Y, and picks an element e ∉ Y. Whenever
/// the gain of e at X exceeds `cfg.gain_tolerance`, the sample
/// contributes the ratio `gain_at_Y / gain_at_X`; other samples are
/// counted in `skipped_zero_gain`. The estimate is the maximum ratio
/// padded by `cfg.margin` and clamped below at 1.
///
/// Deterministic in `(f, n, config)`. Errors when no sample yields a
/// usable denominator.
pub fn estimate_gamma_with<F>(
    n: usize,
    f: F,
    cfg: &EstimationConfig,
) -> Result<GammaEstimate, SubmodularError>
where
    F: Fn(&PlacementSet) -> f64,
{
    cfg.validate();
    let mut rng = Rng::seed_from_u64(cfg.seed);
    let everything = ground_set(n);
    let papers: Vec<PaperId> = (1..=n as u32).map(PaperId::new).collect();
    let mut element_pool = Vec::new();
    let mut paper_pool = Vec::new();
    let mut max_ratio: Option<f64> = None;
    let mut valid = 0usize;
    let mut skipped = 0usize;

    for _ in 0..cfg.num_samples {
        // Draw Y, leaving at least one element outside it.
        let superset = if cfg.arbitrary_positions {
            let cap = cfg
                .max_prefix
                .unwrap_or(everything.len() - 1)
                .min(everything.len() - 1);
            let size = rng.next_below(cap as u64 + 1) as usize;
            element_pool.clone_from(&everything);
            partial_shuffle(&mut rng, &mut element_pool, size);
            PlacementSet::new(element_pool[..size].to_vec())
        } else {
            let cap = cfg.max_prefix.unwrap_or(n).min(n).min(n * n - 1);
            let len = rng.next_below(cap as u64 + 1) as usize;
            paper_pool.clone_from(&papers);
            partial_shuffle(&mut rng, &mut paper_pool, len);
            PlacementSet::from_order(&Order::from_papers(paper_pool[..len].to_vec()))
        };

        // Thin Y down to X ⊆ Y, one coin per element.
        let kept: Vec<Placement> = superset
            .elements()
            .iter()
            .copied()
            .filter(|_| rng.next_u64() & 1 == 1)
            .collect();
        let subset = PlacementSet::new(kept);

        // Pick e uniformly outside Y.
        let outside: Vec<Placement> = everything
            .iter()
            .copied()
            .filter(|&e| !superset.contains(e))
            .collect();
        let element = outside[rng.next_below(outside.len() as u64) as usize];

        let gain_superset = f(&superset.with(element)) - f(&superset);
        let gain_subset = f(&subset.with(element)) - f(&subset);
        if gain_subset > cfg.gain_tolerance {
            let ratio = gain_superset / gain_subset;
            max_ratio = Some(max_ratio.map_or(ratio, |m| if ratio > m { ratio } else { m }));
            valid += 1;
        } else {
            skipped += 1;
        }
    }

    match max_ratio {
        None => Err(SubmodularError::NoValidSamples),
        Some(m) => {
            let padded = m * (1.0 + cfg.margin);
            Ok(GammaEstimate {
                gamma: if padded > 1.0 { padded } else { 1.0 },
                valid_samples: valid,
                skipped_zero_gain: skipped,
            })
        }
    }
}

/// Exact weak-submodularity ratio of the instance objective at
/// exponent `alpha`, by enumerating every `(X ⊆ Y, e ∉ Y)` triple.
///
/// See [`exhaustive_gamma_with`]. Only instances with at most
/// [`EXHAUSTIVE_SET_BOUND`] papers are accepted.
pub fn exhaustive_gamma(inst: &Instance, alpha: f64) -> Result<f64, SubmodularError> {
    assert!(alpha > 0.0, "alpha must be positive, got {alpha}");
    exhaustive_gamma_with(inst.paper_count(), |s| objective(inst, s, alpha))
}

/// Exact γ for an arbitrary set function over the `n × n` ground set:
/// the maximum of `gain_e(Y) / gain_e(X)` over all nested pairs
/// `X ⊆ Y` and elements `e ∉ Y` whose subset gain is positive.
///
/// Errors with a witness when some element gains nothing at a subset
/// (gain ≤ [`DEFAULT_GAIN_TOLERANCE`]) yet something at a superset,
/// which no finite γ covers, and with `TooLarge` past
/// [`EXHAUSTIVE_SET_BOUND`] papers. The result is exact: no margin is
/// applied. Clamped below at 1.
pub fn exhaustive_gamma_with<F>(n: usize, f: F) -> Result<f64, SubmodularError>
where
    F: Fn(&PlacementSet) -> f64,
{
    if n > EXHAUSTIVE_SET_BOUND {
        return Err(SubmodularError::TooLarge {
            papers: n,
            bound: EXHAUSTIVE_SET_BOUND,
        });
    }
    let everything = ground_set(n);
    let size = everything.len();
    let full: u32 = (1u32 << size) - 1;

    // Objective value for every subset, indexed by bitmask over the
    // paper-major ground set.
    let set_of = |mask: u32| -> PlacementSet {
        PlacementSet::new(
            everything
                .iter()
                .enumerate()
                .filter(|&(idx, _)| mask & (1 << idx) != 0)
                .map(|(_, &e)| e)
                .collect(),
        )
    };
    let table: Vec<f64> = (0..=full).map(|mask| f(&set_of(mask))).collect();

    let mut max_ratio = 1.0f64;
    for superset in 0..=full {
        for (idx, &element) in everything.iter().enumerate() {
            let bit = 1u32 << idx;
            if superset & bit != 0 {
                continue;
            }
            let gain_superset = table[(superset | bit) as usize] - table[superset as usize];
            // Walk every subset of `superset` (descending submask trick).
            let mut subset = superset;
            loop {
                let gain_subset = table[(subset | bit) as usize] - table[subset as usize];
                if gain_subset > DEFAULT_GAIN_TOLERANCE {
                    let ratio = gain_superset / gain_subset;
                    if ratio > max_ratio {
                        max_ratio = ratio;
                    }
                } else if gain_superset > DEFAULT_GAIN_TOLERANCE {
                    return Err(SubmodularError::UnboundedGamma(Box::new(GammaWitness {
                        subset: set_of(subset),
                        superset: set_of(superset),
                        element,
                        subset_gain: gain_subset,
                        superset_gain: gain_superset,
                    })));
                }
                if subset == 0 {
                    break;
                }
                subset = (subset - 1) & superset;
            }
        }
    }
    Ok(max_ratio)
}

/// Smallest exponent that makes the objective monotone along every
/// single-element chain of the instance, found by full enumeration;
/// zero when welfare never decreases (any positive exponent works).
///
/// Errors with `TooLarge` past [`EXHAUSTIVE_SET_BOUND`] papers, and
/// with `UnboundedAlpha` when adding some placement zeroes out a
/// positive welfare.
pub fn exhaustive_alpha(inst: &Instance) -> Result<f64, SubmodularError> {
    let n = inst.paper_count();
    if n > EXHAUSTIVE_SET_BOUND {
        return Err(SubmodularError::TooLarge {
            papers: n,
            bound: EXHAUSTIVE_SET_BOUND,
        });
    }
    let everything = ground_set(n);
    let size = everything.len();
    let full: u32 = (1u32 << size) - 1;

    let set_of = |mask: u32| -> PlacementSet {
        PlacementSet::new(
            everything
                .iter()
                .enumerate()
                .filter(|&(idx, _)| mask & (1 << idx) != 0)
                .map(|(_, &e)| e)
                .collect(),
        )
    };
    let usw_of = |mask: u32| -> f64 {
        rrr::order_usw(inst, &set_of(mask).to_order()).expect("ground set papers are valid")
    };
    let table: Vec<f64> = (0..=full).map(usw_of).collect();

    let mut requirement = 0.0f64;
    for mask in 0..=full {
        let len = mask.count_ones() as usize;
        for (idx, element) in everything.iter().enumerate() {
            let bit = 1u32 << idx;
            if mask & bit != 0 {
                continue;
            }
            match alpha_requirement(table[mask as usize], table[(mask | bit) as usize], len) {
                AlphaConstraint::None => {}
                AlphaConstraint::AtLeast(a) => {
                    if a > requirement {
                        requirement = a;
                    }
                }
                AlphaConstraint::Unbounded => {
                    let set = set_of(mask);
                    return Err(SubmodularError::UnboundedAlpha {
                        order: set.to_order(),
                        paper: element.paper,
                        usw_before: table[mask as usize],
                    });
                }
            }
        }
    }
    Ok(requirement)
}
