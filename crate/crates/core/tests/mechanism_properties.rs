//! Randomized guarantees of the guarded mechanism: fairness among the
//! ordered papers, structural validity, completeness when supply is
//! ample, and bit-level determinism.

mod common;

use common::ef1_violations_oracle;
use proptest::collection::vec;
use proptest::prelude::*;
use revkit_core::rrr;
use revkit_core::{Instance, Order};

#[derive(Clone, Debug)]
struct Case {
    inst: Instance,
    order: Vec<u32>,
}

/// Instance with n ≤ 10 papers, m ≤ 30 reviewers, capacities in 1..=4,
/// k ≤ 4, values in [0, 10], plus a shuffled full picking order.
fn arb_case() -> impl Strategy<Value = Case> {
    (1usize..=10, 1usize..=30, 1u32..=4)
        .prop_flat_map(|(n, m, k)| {
            let k = k.min(m as u32);
            let rows = vec(vec(0.0f64..10.0, m), n);
            let caps = vec(1u32..=4, m);
            let order = Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle();
            (rows, caps, Just(k), order)
        })
        .prop_map(|(rows, caps, k, order)| Case {
            inst: Instance::new(rows, caps, k).expect("generated instance is valid"),
            order,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn output_is_fair_and_structurally_valid(case in arb_case()) {
        let order = Order::from_ids(case.order.iter().copied());
        let (alloc, _) = rrr::run(&case.inst, &order).unwrap();

        let validation = case.inst.validate_allocation(&alloc);
        prop_assert!(validation.is_ok(), "{validation:?}");

        let report = case.inst.check_ef1(&alloc).unwrap();
        prop_assert_eq!(report.count_among(order.papers()), 0);
        prop_assert!(ef1_violations_oracle(&case.inst, &alloc).is_empty());
    }
}

proptest! {
    #[test]
    fn partial_orders_keep_fairness_among_participants(case in arb_case()) {
        let cut = case.order.len() / 2;
        let order = Order::from_ids(case.order[..cut].iter().copied());
        let (alloc, _) = rrr::run(&case.inst, &order).unwrap();

        prop_assert!(case.inst.validate_allocation(&alloc).is_ok());
        let report = case.inst.check_ef1(&alloc).unwrap();
        prop_assert_eq!(report.count_among(order.papers()), 0);
        for p in case.inst.papers() {
            if !order.contains(p) {
                prop_assert!(alloc.bundle(p).is_empty());
            }
        }
    }

    #[test]
    fn runs_are_bit_identical(case in arb_case()) {
        let order = Order::from_ids(case.order.iter().copied());
        let (a1, t1) = rrr::run(&case.inst, &order).unwrap();
        let (a2, t2) = rrr::run(&case.inst, &order).unwrap();
        prop_assert_eq!(t1, t2);
        for p in case.inst.papers() {
            prop_assert_eq!(a1.bundle(p), a2.bundle(p));
        }
        prop_assert_eq!(a1.halted_early(), a2.halted_early());
    }

    #[test]
    fn traces_replay_to_the_allocation(case in arb_case()) {
        let order = Order::from_ids(case.order.iter().copied());
        let (alloc, trace) = rrr::run(&case.inst, &order).unwrap();
        let replayed = trace.replay(case.inst.paper_count());
        for p in case.inst.papers() {
            prop_assert_eq!(replayed.bundle(p), alloc.bundle(p));
        }
    }
}

/// Ample supply: when total capacity within every paper's reach covers
/// k picks per paper (m ≥ k·n with unit capacities), nobody runs dry.
fn arb_ample_case() -> impl Strategy<Value = Case> {
    (1usize..=6, 1u32..=4)
        .prop_flat_map(|(n, k)| {
            let m = n * k as usize + (n % 3);
            let rows = vec(vec(0.0f64..10.0, m), n);
            let caps = vec(1u32..=3, m);
            let order = Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle();
            (rows, caps, Just(k), order)
        })
        .prop_map(|(rows, caps, k, order)| Case {
            inst: Instance::new(rows, caps, k).expect("generated instance is valid"),
            order,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ample_supply_yields_complete_allocations(case in arb_ample_case()) {
        let order = Order::from_ids(case.order.iter().copied());
        let (alloc, _) = rrr::run(&case.inst, &order).unwrap();
        prop_assert!(!alloc.halted_early());
        prop_assert!(case.inst.is_complete(&alloc));
        for p in case.inst.papers() {
            prop_assert_eq!(alloc.bundle(p).len(), case.inst.k() as usize);
        }
    }
}

#[test]
fn checker_and_oracle_agree_on_arbitrary_allocations() {
    // Beyond mechanism outputs: random valid allocations with empty and
    // unbalanced bundles, where envy is common.
    use revkit_core::synth::{self, SynthConfig, ValueDistribution};

    let mut total_violations = 0;
    for seed in 0..300u64 {
        let cfg = SynthConfig {
            papers: 2 + (seed % 5) as usize,
            reviewers: 4 + (seed % 5) as usize,
            k: 3,
            capacity_range: (1, 3),
            distribution: ValueDistribution::Uniform,
            seed,
        };
        let inst = synth::generate(&cfg).unwrap();
        let alloc = random_allocation(&inst, seed ^ 0xA5A5);
        let report = inst.check_ef1(&alloc).unwrap();
        let oracle = ef1_violations_oracle(&inst, &alloc);
        let from_checker: Vec<(u32, u32)> = report
            .violating_pairs
            .iter()
            .map(|&(i, j)| (i.get(), j.get()))
            .collect();
        assert_eq!(from_checker, oracle, "seed {seed}");
        total_violations += oracle.len();
    }
    assert!(total_violations > 0, "the sample should exercise real envy");
}

/// Valid-by-construction allocation with bundle sizes drawn from 0..=k.
fn random_allocation(inst: &Instance, seed: u64) -> revkit_core::Allocation {
    use revkit_core::rng::{partial_shuffle, Rng};

    let mut rng = Rng::seed_from_u64(seed);
    let mut load = vec![0u32; inst.reviewer_count()];
    let mut bundles = Vec::new();
    for _ in inst.papers() {
        let want = rng.next_below(inst.k() as u64 + 1) as usize;
        let mut open: Vec<u32> = inst
            .reviewers()
            .filter(|&r| load[r.index()] < inst.capacity(r))
            .map(|r| r.get())
            .collect();
        let take = want.min(open.len());
        partial_shuffle(&mut rng, &mut open, take);
        let bundle: Vec<u32> = open[..take].to_vec();
        for &r in &bundle {
            load[(r - 1) as usize] += 1;
        }
        bundles.push(bundle);
    }
    revkit_core::Allocation::from_bundles(bundles)
}
