//! Command-line front end for the reviewer-assignment toolkit.
//!
//! Exit codes: 0 on success, 1 when inputs fail validation or a
//! computation refuses its input (oversized oracle, unbounded
//! estimates), 2 on command-line usage errors.

mod formats;
mod io;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use revkit_core::rrr;
use revkit_core::search::{self, GrrrConfig};
use revkit_core::submodular::{self, EstimationConfig};
use revkit_core::synth::{self, SynthConfig, ValueDistribution};
use revkit_core::{metrics, Allocation, Instance};

use formats::{
    emit, read_json, AllocationFile, Ef1File, EstimateFile, MetricsFile, OrderFile,
    SearchConfigFile, SearchFile,
};
use io::NegativeHandling;

#[derive(Parser)]
#[command(name = "revkit", version, about = "Fair reviewer assignment toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search for a picking order, run the mechanism, report metrics
    Assign(AssignArgs),
    /// Run the mechanism on a given picking order
    Rrr(RrrArgs),
    /// Check an allocation for envy beyond one reviewer
    CheckEf1(AllocArgs),
    /// Compute the full metrics report for an allocation
    Metrics(MetricsArgs),
    /// Exhaustively find the best picking order (small instances only)
    Oracle(OracleArgs),
    /// Estimate the curvature parameters of the search objective
    Estimate(EstimateArgs),
    /// Generate a synthetic instance as scores + loads CSVs
    Gen(GenArgs),
}

/// Flags shared by every command that reads an instance.
#[derive(Args)]
struct InstanceArgs {
    /// Dense n×m CSV of affinity scores
    #[arg(long, value_name = "FILE")]
    scores: PathBuf,

    /// Reviewer capacities: a CSV with m integers, or one integer for all
    #[arg(long, value_name = "FILE|INT")]
    loads: String,

    /// Reviewers per paper
    #[arg(long, value_name = "INT")]
    k: u32,

    /// Skip one header row in input CSVs
    #[arg(long)]
    header: bool,

    /// Shift all scores up so the minimum becomes zero instead of
    /// rejecting negatives
    #[arg(long)]
    shift_negative: bool,
}

impl InstanceArgs {
    fn load(&self) -> Result<Instance> {
        let handling = if self.shift_negative {
            NegativeHandling::ShiftToZero
        } else {
            NegativeHandling::Reject
        };
        let loaded = io::load_instance(&self.scores, &self.loads, self.k, handling, self.header)?;
        if loaded.shift > 0.0 {
            eprintln!("shifted all scores up by {}", loaded.shift);
        }
        Ok(loaded.instance)
    }
}

#[derive(Args)]
struct AssignArgs {
    #[command(flatten)]
    instance: InstanceArgs,

    /// Seed for candidate subsampling
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Evaluate only this many candidate papers per step
    #[arg(long, value_name = "INT")]
    subsample: Option<usize>,

    /// Worker threads for candidate evaluation
    #[arg(long, env = "REVKIT_JOBS", default_value_t = 1)]
    jobs: usize,

    /// Write the allocation JSON here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Also write the search result (order and per-step welfare) here
    #[arg(long, value_name = "FILE")]
    search_out: Option<PathBuf>,

    /// Also write the metrics report here
    #[arg(long, value_name = "FILE")]
    metrics_out: Option<PathBuf>,
}

#[derive(Args)]
struct RrrArgs {
    #[command(flatten)]
    instance: InstanceArgs,

    /// Picking order: JSON array of 1-based paper ids, or a file with
    /// an "order" field
    #[arg(long, value_name = "FILE")]
    order: PathBuf,

    /// Run the unguarded baseline instead of the guarded mechanism
    #[arg(long)]
    naive: bool,

    /// Write the allocation JSON here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AllocArgs {
    #[command(flatten)]
    instance: InstanceArgs,

    /// Allocation JSON as written by `assign` or `rrr`
    #[arg(long, value_name = "FILE")]
    alloc: PathBuf,

    /// Write the report here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MetricsArgs {
    #[command(flatten)]
    common: AllocArgs,

    /// Print an aligned text table instead of JSON
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    instance: InstanceArgs,

    /// Write the search result here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EstimateArgs {
    #[command(flatten)]
    instance: InstanceArgs,

    /// Sample count for each estimator
    #[arg(long, default_value_t = 200)]
    samples: usize,

    /// Seed for the samplers
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Relative slack added on top of each sampled maximum
    #[arg(long, default_value_t = submodular::DEFAULT_MARGIN)]
    margin: f64,

    /// Write the estimates here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum DistArg {
    Uniform,
    Exponential,
}

#[derive(Args)]
struct GenArgs {
    /// Number of papers
    #[arg(long)]
    papers: usize,

    /// Number of reviewers
    #[arg(long)]
    reviewers: usize,

    /// Reviewers per paper
    #[arg(long)]
    k: u32,

    /// Smallest reviewer capacity
    #[arg(long, default_value_t = 1)]
    cap_lo: u32,

    /// Largest reviewer capacity
    #[arg(long, default_value_t = 2)]
    cap_hi: u32,

    /// Score distribution
    #[arg(long, value_enum, default_value_t = DistArg::Uniform)]
    dist: DistArg,

    /// Seed
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Where to write the scores CSV
    #[arg(long, value_name = "FILE")]
    scores_out: PathBuf,

    /// Where to write the capacities CSV
    #[arg(long, value_name = "FILE")]
    loads_out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Assign(args) => assign(args),
        Command::Rrr(args) => run_rrr(args),
        Command::CheckEf1(args) => check_ef1(args),
        Command::Metrics(args) => metrics_cmd(args),
        Command::Oracle(args) => oracle(args),
        Command::Estimate(args) => estimate(args),
        Command::Gen(args) => gen(args),
    }
}

fn assign(args: AssignArgs) -> Result<()> {
    let started = Instant::now();
    let inst = args.instance.load()?;
    if let Some(size) = args.subsample {
        if size == 0 || size > inst.paper_count() {
            bail!(
                "--subsample must be between 1 and the paper count ({})",
                inst.paper_count()
            );
        }
    }
    if args.jobs == 0 {
        bail!("--jobs must be at least 1");
    }

    let cfg = GrrrConfig {
        subsample_size: args.subsample,
        seed: args.seed,
        parallelism: args.jobs,
    };
    let result = search::greedy_rrr(&inst, &cfg);
    let (alloc, _) = rrr::run(&inst, &result.order).expect("search orders are valid");
    let report = metrics::full_report(&inst, &alloc).expect("mechanism output is valid");

    emit(&AllocationFile::new(&inst, &alloc), args.out.as_deref())?;
    if let Some(path) = &args.search_out {
        let config = SearchConfigFile {
            seed: args.seed,
            subsample: args.subsample,
        };
        emit(&SearchFile::new(&result, config), Some(path))?;
    }
    if let Some(path) = &args.metrics_out {
        emit(&MetricsFile::new(&report), Some(path))?;
    }
    if args.out.is_some() {
        print!("{}", table::render(&[("grrr", &report)]));
    } else {
        eprint!("{}", table::render(&[("grrr", &report)]));
    }
    eprintln!(
        "seed={} subsample={} jobs={} wall={:?}",
        args.seed,
        args.subsample.map_or("none".to_string(), |s| s.to_string()),
        args.jobs,
        started.elapsed()
    );
    Ok(())
}

fn run_rrr(args: RrrArgs) -> Result<()> {
    let inst = args.instance.load()?;
    let order = read_json::<OrderFile>(&args.order)?.into_order();
    let alloc = if args.naive {
        rrr::naive_run(&inst, &order)
    } else {
        rrr::run(&inst, &order).map(|(alloc, _)| alloc)
    }
    .map_err(|e| anyhow::anyhow!("{e}"))?;
    emit(&AllocationFile::new(&inst, &alloc), args.out.as_deref())
}

fn load_allocation(args: &AllocArgs) -> Result<(Instance, Allocation)> {
    let inst = args.instance.load()?;
    let file: AllocationFile = read_json(&args.alloc)?;
    let alloc = file.to_allocation(inst.paper_count())?;
    let validation = inst.validate_allocation(&alloc);
    if !validation.is_ok() {
        bail!(
            "{}: allocation does not fit the instance: {}",
            args.alloc.display(),
            validation
                .violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        );
    }
    Ok((inst, alloc))
}

fn check_ef1(args: AllocArgs) -> Result<()> {
    let (inst, alloc) = load_allocation(&args)?;
    let report = inst.check_ef1(&alloc).expect("allocation was validated");
    let file = Ef1File {
        ef1: report.is_ef1(),
        count: report.count(),
        violating_pairs: report
            .violating_pairs
            .iter()
            .map(|&(i, j)| (i.get(), j.get()))
            .collect(),
    };
    emit(&file, args.out.as_deref())
}

fn metrics_cmd(args: MetricsArgs) -> Result<()> {
    let (inst, alloc) = load_allocation(&args.common)?;
    let report = metrics::full_report(&inst, &alloc).expect("allocation was validated");
    if args.table {
        print!("{}", table::render(&[("alloc", &report)]));
        Ok(())
    } else {
        emit(&MetricsFile::new(&report), args.common.out.as_deref())
    }
}

fn oracle(args: OracleArgs) -> Result<()> {
    let inst = args.instance.load()?;
    let (order, usw) = search::exhaustive_best_order(&inst).map_err(|e| anyhow::anyhow!("{e}"))?;
    let per_step_usw: Vec<f64> = (1..=order.len())
        .map(|len| {
            let prefix = revkit_core::Order::from_papers(order.papers()[..len].to_vec());
            rrr::order_usw(&inst, &prefix).expect("prefixes of a valid order are valid")
        })
        .collect();
    let file = SearchFile {
        order: order.papers().iter().map(|p| p.get()).collect(),
        usw,
        per_step_usw,
        config: SearchConfigFile {
            seed: 0,
            subsample: None,
        },
    };
    emit(&file, args.out.as_deref())
}

fn estimate(args: EstimateArgs) -> Result<()> {
    let inst = args.instance.load()?;
    if args.samples == 0 {
        bail!("--samples must be at least 1");
    }
    if args.margin.is_nan() || args.margin < 0.0 {
        bail!("--margin must be non-negative");
    }
    let cfg = EstimationConfig {
        num_samples: args.samples,
        seed: args.seed,
        margin: args.margin,
        ..EstimationConfig::default()
    };
    let alpha = submodular::estimate_alpha(&inst, &cfg).map_err(|e| anyhow::anyhow!("{e}"))?;
    let gamma =
        submodular::estimate_gamma(&inst, alpha, &cfg).map_err(|e| anyhow::anyhow!("{e}"))?;
    let file = EstimateFile::new(alpha, &gamma, args.samples, args.margin, args.seed);
    emit(&file, args.out.as_deref())
}

fn gen(args: GenArgs) -> Result<()> {
    let cfg = SynthConfig {
        papers: args.papers,
        reviewers: args.reviewers,
        k: args.k,
        capacity_range: (args.cap_lo, args.cap_hi),
        distribution: match args.dist {
            DistArg::Uniform => ValueDistribution::Uniform,
            DistArg::Exponential => ValueDistribution::Exponential,
        },
        seed: args.seed,
    };
    let inst = synth::generate(&cfg).map_err(|e| anyhow::anyhow!("{e}"))?;
    let rows: Vec<Vec<f64>> = inst
        .papers()
        .map(|p| inst.reviewers().map(|r| inst.value(p, r)).collect())
        .collect();
    let caps: Vec<u32> = inst.reviewers().map(|r| inst.capacity(r)).collect();
    io::write_matrix(&args.scores_out, &rows)?;
    io::write_loads(&args.loads_out, &caps)?;
    eprintln!(
        "wrote {} papers × {} reviewers (seed {})",
        args.papers, args.reviewers, args.seed
    );
    Ok(())
}
