//! JSON file schemas. Every writer uses sorted keys and a trailing
//! newline so identical data produces identical bytes.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use revkit_core::metrics::MetricsReport;
use revkit_core::search::SearchResult;
use revkit_core::submodular::GammaEstimate;
use revkit_core::{Allocation, Instance, Order};
use serde::{Deserialize, Serialize};

/// An allocation on disk: 1-based ids, bundles ascending, keyed by paper.
#[derive(Debug, Serialize, Deserialize)]
pub struct AllocationFile {
    pub k: u32,
    pub bundles: BTreeMap<u32, Vec<u32>>,
    pub halted_early: bool,
    pub usw: f64,
}

impl AllocationFile {
    pub fn new(inst: &Instance, alloc: &Allocation) -> Self {
        let bundles = alloc
            .bundles()
            .map(|(p, b)| (p.get(), b.iter().map(|r| r.get()).collect()))
            .collect();
        AllocationFile {
            k: inst.k(),
            bundles,
            halted_early: alloc.halted_early(),
            usw: inst.usw(alloc),
        }
    }

    /// Rebuilds the allocation; papers absent from the map get empty
    /// bundles. Ids outside `1..=papers` are rejected here, everything
    /// else is left to `validate_allocation`.
    pub fn to_allocation(&self, papers: usize) -> Result<Allocation> {
        let mut raw = vec![Vec::new(); papers];
        for (&paper, bundle) in &self.bundles {
            if paper == 0 || paper as usize > papers {
                bail!("allocation file names paper {paper}, but the instance has {papers}");
            }
            raw[paper as usize - 1] = bundle.clone();
        }
        Ok(Allocation::from_bundles(raw))
    }
}

/// A picking order on disk: either a bare array `[2,1,3]` or an object
/// with an `order` field (as written by `assign` and `oracle`).
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum OrderFile {
    Bare(Vec<u32>),
    Tagged { order: Vec<u32> },
}

impl OrderFile {
    pub fn into_order(self) -> Order {
        let ids = match self {
            OrderFile::Bare(ids) => ids,
            OrderFile::Tagged { order } => order,
        };
        Order::from_ids(ids)
    }
}

/// Search settings echoed into result files. Only inputs that shape
/// the result belong here; worker count does not (the reduction is
/// schedule-independent) and is logged to stderr instead.
#[derive(Debug, Serialize, Deserialize)]
pub struct SearchConfigFile {
    pub seed: u64,
    pub subsample: Option<usize>,
}

/// A search outcome: the order, its welfare, and the welfare after each
/// prefix step.
#[derive(Debug, Serialize, Deserialize)]
pub struct SearchFile {
    pub order: Vec<u32>,
    pub usw: f64,
    pub per_step_usw: Vec<f64>,
    pub config: SearchConfigFile,
}

impl SearchFile {
    pub fn new(result: &SearchResult, config: SearchConfigFile) -> Self {
        SearchFile {
            order: result.order.papers().iter().map(|p| p.get()).collect(),
            usw: result.usw,
            per_step_usw: result.per_step_usw.clone(),
            config,
        }
    }
}

/// Envy check outcome.
#[derive(Debug, Serialize, Deserialize)]
pub struct Ef1File {
    pub ef1: bool,
    pub count: usize,
    pub violating_pairs: Vec<(u32, u32)>,
}

/// Curvature estimates with the sampling parameters that produced them.
#[derive(Debug, Serialize, Deserialize)]
pub struct EstimateFile {
    pub alpha: f64,
    pub gamma: f64,
    pub samples: usize,
    pub skipped_zero_gain: usize,
    pub margin: f64,
    pub seed: u64,
}

impl EstimateFile {
    pub fn new(alpha: f64, est: &GammaEstimate, samples: usize, margin: f64, seed: u64) -> Self {
        EstimateFile {
            alpha,
            gamma: est.gamma,
            samples,
            skipped_zero_gain: est.skipped_zero_gain,
            margin,
            seed,
        }
    }
}

/// Lowest-scoring cohort summary.
#[derive(Debug, Serialize, Deserialize)]
pub struct PercentileFile {
    pub fraction: f64,
    pub mean: f64,
    pub std_dev: f64,
}

/// The full metrics report as written by `assign` and `metrics`.
#[derive(Debug, Serialize, Deserialize)]
pub struct MetricsFile {
    pub usw_mean: f64,
    pub nsw: f64,
    pub nsw_positive: f64,
    pub zero_score_count: usize,
    pub min_score: f64,
    pub ef1_violations: usize,
    pub gini: f64,
    pub total_envy: f64,
    pub literal_envy_sum: f64,
    pub percentile_blocks: Vec<PercentileFile>,
}

impl MetricsFile {
    pub fn new(report: &MetricsReport) -> Self {
        MetricsFile {
            usw_mean: report.usw_mean,
            nsw: report.nsw,
            nsw_positive: report.nsw_positive,
            zero_score_count: report.zero_score_count,
            min_score: report.min_score,
            ef1_violations: report.ef1_violations,
            gini: report.gini,
            total_envy: report.total_envy,
            literal_envy_sum: report.literal_envy_sum,
            percentile_blocks: report
                .percentile_blocks
                .iter()
                .map(|b| PercentileFile {
                    fraction: b.fraction,
                    mean: b.mean,
                    std_dev: b.std_dev,
                })
                .collect(),
        }
    }
}

/// Serializes with a trailing newline, to a file or stdout.
pub fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Reads and deserializes one JSON file.
pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{}: malformed JSON", path.display()))
}
