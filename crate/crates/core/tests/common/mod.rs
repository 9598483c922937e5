//! Shared fixtures and independent reference implementations.
//!
//! The oracles here deliberately avoid the library's own helpers: bundle
//! values are re-summed from raw affinities, EF1 is checked by explicit
//! removal enumeration, and the welfare aggregates use the textbook
//! formulas. Any disagreement with the crate is a bug in one of the two.

#![allow(dead_code)]

use revkit_core::{Allocation, Instance, PaperId, ReviewerId};

/// Three papers, six unit-capacity reviewers, two reviewers per paper.
pub fn three_papers() -> Instance {
    Instance::new(
        vec![
            vec![9.0, 3.0, 5.0, 9.0, 4.0, 4.0],
            vec![10.0, 4.0, 0.0, 10.0, 6.0, 5.0],
            vec![1.0, 1.0, 2.0, 2.0, 4.0, 4.0],
        ],
        vec![1; 6],
        2,
    )
    .expect("fixture is well-formed")
}

/// Four papers, six reviewers with capacity two, three reviewers per
/// paper. `eps` is the tiny positive affinity that makes the naive
/// round-robin outcome fail EF1; any value in (0, 0.5) preserves the
/// qualitative story.
pub fn four_papers(eps: f64) -> Instance {
    assert!(eps > 0.0 && eps < 0.5);
    Instance::new(
        vec![
            vec![2.0, 0.0, 0.0, 1.0, 0.5, eps],
            vec![3.0, 1.0, 2.0, 10.0, 0.0, 0.0],
            vec![0.0, eps, 0.0, 10.0, 1.0, 0.0],
            vec![2.0, 1.0, 3.0, 10.0, 0.0, eps],
        ],
        vec![2; 6],
        3,
    )
    .expect("fixture is well-formed")
}

/// Sums a bundle's affinities straight off the value matrix.
fn raw_bundle_value(inst: &Instance, paper: PaperId, bundle: &[ReviewerId]) -> f64 {
    bundle.iter().map(|&r| inst.value(paper, r)).sum()
}

/// Every ordered pair (i, j) where i envies j beyond one reviewer,
/// checked by enumerating every single-reviewer removal from j's bundle.
pub fn ef1_violations_oracle(inst: &Instance, alloc: &Allocation) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in inst.papers() {
        let own = raw_bundle_value(inst, i, alloc.bundle(i));
        for j in inst.papers() {
            if i == j {
                continue;
            }
            let envied = alloc.bundle(j);
            if envied.is_empty() {
                continue;
            }
            let tolerable = (0..envied.len()).any(|drop| {
                let kept: f64 = envied
                    .iter()
                    .enumerate()
                    .filter(|&(l, _)| l != drop)
                    .map(|(_, &r)| inst.value(i, r))
                    .sum();
                kept <= own
            });
            if !tolerable {
                out.push((i.get(), j.get()));
            }
        }
    }
    out
}

/// Gini by the normalized mean absolute difference over all pairs.
pub fn gini_oracle(scores: &[f64]) -> f64 {
    let n = scores.len() as f64;
    let total: f64 = scores.iter().sum();
    assert!(total > 0.0, "oracle needs a positive score mass");
    let mut diff = 0.0;
    for &a in scores {
        for &b in scores {
            diff += (a - b).abs();
        }
    }
    diff / (2.0 * n * total)
}

/// Nash welfare by the direct product, safe for small score lists.
pub fn nsw_oracle(scores: &[f64]) -> f64 {
    let product: f64 = scores.iter().product();
    product.powf(1.0 / scores.len() as f64)
}

/// Geometric mean of the strictly positive scores only.
pub fn nsw_positive_oracle(scores: &[f64]) -> f64 {
    let positive: Vec<f64> = scores.iter().copied().filter(|&s| s > 0.0).collect();
    if positive.is_empty() {
        return 0.0;
    }
    let product: f64 = positive.iter().product();
    product.powf(1.0 / positive.len() as f64)
}
