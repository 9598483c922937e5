//! CSV ingestion and file helpers.
//!
//! Scores come as a dense n×m CSV of reals, capacities as either a CSV
//! of m integers or a single integer repeated for every reviewer.
//! Negative scores are rejected unless the caller opts into shifting
//! the whole matrix up by the global minimum.

use std::fmt;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use revkit_core::Instance;

/// What to do when the score matrix contains negative values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NegativeHandling {
    /// Fail loudly; the caller must decide how to preprocess.
    Reject,
    /// Subtract the global minimum so the smallest score becomes 0.
    ShiftToZero,
}

/// A cell that did not parse, with 1-based coordinates.
#[derive(Debug)]
pub struct ParseError {
    pub row: usize,
    pub col: usize,
    pub token: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {}, column {}: cannot parse {:?} as a number",
            self.row, self.col, self.token
        )
    }
}

impl std::error::Error for ParseError {}

/// Reads a dense numeric CSV. `skip_header` drops the first record.
pub fn read_matrix(path: &Path, skip_header: bool) -> Result<Vec<Vec<f64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(skip_header)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .with_context(|| format!("cannot open {}", path.display()))?;

    let mut rows = Vec::new();
    for (idx, record) in reader.records().enumerate() {
        let record = record.with_context(|| format!("cannot read {}", path.display()))?;
        let mut row = Vec::with_capacity(record.len());
        for (col, field) in record.iter().enumerate() {
            let value: f64 = field.parse().map_err(|_| ParseError {
                row: idx + 1,
                col: col + 1,
                token: field.to_string(),
            })?;
            row.push(value);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        bail!("{}: no data rows", path.display());
    }
    let width = rows[0].len();
    for (idx, row) in rows.iter().enumerate() {
        if row.len() != width {
            bail!(
                "{}: row {} has {} columns, expected {}",
                path.display(),
                idx + 1,
                row.len(),
                width
            );
        }
    }
    Ok(rows)
}

/// Reviewer capacities: a bare integer means a uniform capacity, any
/// other string is a CSV path holding `reviewers` integers (one row or
/// one column).
pub fn read_loads(spec: &str, reviewers: usize, skip_header: bool) -> Result<Vec<u32>> {
    if let Ok(uniform) = spec.parse::<u32>() {
        return Ok(vec![uniform; reviewers]);
    }
    let rows = read_matrix(Path::new(spec), skip_header)?;
    let flat: Vec<f64> = rows.into_iter().flatten().collect();
    if flat.len() != reviewers {
        bail!(
            "{spec}: found {} capacities, expected one per reviewer ({reviewers})",
            flat.len()
        );
    }
    flat.into_iter()
        .enumerate()
        .map(|(idx, v)| {
            if v.fract() != 0.0 || !(0.0..=u32::MAX as f64).contains(&v) {
                bail!(
                    "{spec}: capacity {} (entry {}) is not a non-negative integer",
                    v,
                    idx + 1
                )
            } else {
                Ok(v as u32)
            }
        })
        .collect()
}

/// Result of [`load_instance`]: the instance plus how far the scores
/// were shifted (0 when nothing was negative).
pub struct LoadedInstance {
    pub instance: Instance,
    pub shift: f64,
}

/// Builds an instance from a scores CSV and a loads spec.
pub fn load_instance(
    scores_path: &Path,
    loads_spec: &str,
    k: u32,
    negative: NegativeHandling,
    skip_header: bool,
) -> Result<LoadedInstance> {
    let mut rows = read_matrix(scores_path, skip_header)?;
    let min = rows.iter().flatten().copied().fold(f64::INFINITY, f64::min);
    let mut shift = 0.0;
    if min < 0.0 {
        match negative {
            NegativeHandling::Reject => bail!(
                "{}: negative score {min}; rerun with --shift-negative to translate all \
                 scores up by that amount",
                scores_path.display()
            ),
            NegativeHandling::ShiftToZero => {
                shift = -min;
                for row in &mut rows {
                    for v in row.iter_mut() {
                        *v += shift;
                    }
                }
            }
        }
    }
    let reviewers = rows[0].len();
    let capacities = read_loads(loads_spec, reviewers, skip_header)?;
    let instance = Instance::new(rows, capacities, k).map_err(|e| anyhow::anyhow!("{e}"))?;
    Ok(LoadedInstance { instance, shift })
}

/// Writes a score matrix as a dense CSV without a header.
pub fn write_matrix(path: &Path, rows: &[Vec<f64>]) -> Result<()> {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    fs::write(path, out).with_context(|| format!("cannot write {}", path.display()))
}

/// Writes capacities as a single CSV row.
pub fn write_loads(path: &Path, capacities: &[u32]) -> Result<()> {
    let line: Vec<String> = capacities.iter().map(|c| c.to_string()).collect();
    fs::write(path, format!("{}\n", line.join(",")))
        .with_context(|| format!("cannot write {}", path.display()))
}
