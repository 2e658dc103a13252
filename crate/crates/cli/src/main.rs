//! Command-line frontend. Every subcommand prints a single JSON document to
//! standard output; verdicts live in the JSON, not in the exit code. Exit 0
//! means the command ran, exit 2 means the input was rejected, and exit 1 is
//! reserved for internal invariant violations plus crosscheck disagreements.

mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use trailrank::linalg::Rational;
use trailrank::trees::{all_pairs, four_point_check, FourPointOutcome};
use trailrank::{
    complete, decide_rect, decide_skew, decide_tree_metric, enumerate_binary_trees, matroid_rank,
    matroid_rank_rect, oracle_decide_skew, oracle_ranks_rect, oracle_ranks_skew, to_newick,
    to_newick_topology, tree_enum_oracle, verify_certificate, Ambient, CompleteOptions,
    CompleteOutcome, DecideOptions, Decision, DissimilarityMap, Model, VertexOrder,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Internal(String),
}

impl From<trailrank::Error> for CliError {
    fn from(e: trailrank::Error) -> Self {
        match e {
            trailrank::Error::Internal(msg) => CliError::Internal(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(format!("JSON serialization failed: {e}"))
    }
}

#[derive(Parser)]
#[command(
    name = "trailrank",
    version,
    about = "Independence of observation patterns in rank-2 matrix and tree-metric matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a pattern is independent, with a certificate
    #[command(subcommand)]
    Decide(DecideCommand),
    /// Check an independence certificate
    #[command(subcommand)]
    Certificate(CertificateCommand),
    /// Randomized Jacobian-rank oracle at seeded generic points
    Oracle(OracleArgs),
    /// Extend prescribed values on an independent pattern to a tree metric
    Complete(CompleteArgs),
    /// Matroid rank of a pattern by exhaustive tree enumeration
    Rank(RankArgs),
    /// Binary tree utilities
    #[command(subcommand)]
    Trees(TreesCommand),
    /// Test a full dissimilarity map for the four-point condition
    Fourpoint(FourpointArgs),
    /// Run all three deciders against each other and report disagreements
    Crosscheck(CrosscheckArgs),
}

#[derive(Args)]
struct CommonDecideFlags {
    /// Skip the Laman sparsity prefilter
    #[arg(long)]
    no_prefilter: bool,
    /// Include wall-clock timings in the JSON (output is then not
    /// byte-reproducible)
    #[arg(long)]
    timings: bool,
}

impl CommonDecideFlags {
    fn options(&self) -> DecideOptions {
        DecideOptions {
            prefilter: !self.no_prefilter,
        }
    }

    fn scrub(&self, d: &mut Decision) {
        if !self.timings {
            d.stats.time_ms = None;
        }
    }
}

#[derive(Subcommand)]
enum DecideCommand {
    /// Pattern in a skew-symmetric rank-2 matrix of size n
    Skew {
        #[arg(long)]
        n: usize,
        /// Edge list file, one `i j` per line
        #[arg(long)]
        edges: PathBuf,
        #[command(flatten)]
        flags: CommonDecideFlags,
    },
    /// Pattern in a rectangular rank-2 matrix of size m x n
    Rect {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Cell list file, one `i j` (row, column) per line
        #[arg(long)]
        cells: PathBuf,
        #[command(flatten)]
        flags: CommonDecideFlags,
    },
    /// Pattern of prescribed pairs of a tree metric on n leaves
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges: PathBuf,
        #[command(flatten)]
        flags: CommonDecideFlags,
    },
}

#[derive(Subcommand)]
enum CertificateCommand {
    /// Check that a vertex order induces a trail-free acyclic orientation
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges: PathBuf,
        /// Comma-separated vertex order, earliest first, e.g. `2,1,3`
        #[arg(long)]
        order: String,
    },
}

#[derive(Copy, Clone, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum OracleModel {
    Skew,
    Rect,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    model: OracleModel,
    /// Rows for the rectangular model
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: usize,
    /// Edge list (skew model)
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Cell list (rectangular model)
    #[arg(long)]
    cells: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct CompleteArgs {
    #[arg(long)]
    n: usize,
    /// Prescribed values file, one `i j p/q` per line
    #[arg(long)]
    values: PathBuf,
    /// Largest n for which topology enumeration is allowed
    #[arg(long, default_value_t = 8)]
    cap: usize,
    /// Scan candidate topologies with worker threads (first hit by
    /// enumeration index still wins)
    #[arg(long)]
    parallel: bool,
    #[command(flatten)]
    flags: CommonDecideFlags,
}

#[derive(Copy, Clone, ValueEnum)]
enum RankModel {
    Skew,
    Rect,
    TreeMetric,
}

#[derive(Args)]
struct RankArgs {
    #[arg(long, value_enum, default_value = "skew")]
    model: RankModel,
    /// Rows for the rectangular model
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    edges: Option<PathBuf>,
    #[arg(long)]
    cells: Option<PathBuf>,
    /// Largest leaf count for which tree enumeration is allowed
    #[arg(long, default_value_t = 8)]
    cap: usize,
}

#[derive(Subcommand)]
enum TreesCommand {
    /// List all binary trees on n leaves as Newick topologies
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Largest n for which enumeration is allowed
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
}

#[derive(Args)]
struct FourpointArgs {
    /// Metric file: header `n`, then `i j p/q` for every pair
    #[arg(long)]
    metric: PathBuf,
}

#[derive(Copy, Clone, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CrosscheckMode {
    Exhaustive,
    Random,
}

#[derive(Args)]
struct CrosscheckArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    mode: CrosscheckMode,
    /// Number of random patterns (random mode only)
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Oracle trials per pattern
    #[arg(long, default_value_t = 3)]
    trials: u64,
    /// Largest leaf count for the tree-enumeration decider
    #[arg(long, default_value_t = 8)]
    cap: usize,
    /// Check patterns with worker threads
    #[arg(long)]
    parallel: bool,
}

fn rational_str(r: &Rational) -> String {
    r.to_string()
}

#[derive(Serialize)]
struct ValueEntry {
    i: usize,
    j: usize,
    value: String,
}

fn value_entries<'a, I>(entries: I) -> Vec<ValueEntry>
where
    I: IntoIterator<Item = (&'a (usize, usize), &'a Rational)>,
{
    entries
        .into_iter()
        .map(|(&(i, j), v)| ValueEntry {
            i,
            j,
            value: rational_str(v),
        })
        .collect()
}

#[derive(Serialize)]
struct CertificateReport {
    n: usize,
    edges: Vec<(usize, usize)>,
    order: Vec<usize>,
    valid: bool,
}

#[derive(Serialize)]
struct OracleReport {
    model: OracleModel,
    ambient: Ambient,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cells: Option<Vec<(usize, usize)>>,
    trials: u64,
    seed: u64,
    support_size: usize,
    ranks: Vec<usize>,
    independent: bool,
}

#[derive(Serialize)]
struct TreeReport {
    edges: Vec<(usize, usize)>,
    weights: Vec<String>,
    newick: String,
}

#[derive(Serialize)]
struct CompleteReport {
    n: usize,
    pairs: Vec<(usize, usize)>,
    values: Vec<ValueEntry>,
    independent: bool,
    decision: Decision,
    #[serde(skip_serializing_if = "Option::is_none")]
    tree: Option<TreeReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    metric: Option<Vec<ValueEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    topologies_tried: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    used_certificate_caterpillar: Option<bool>,
}

#[derive(Serialize)]
struct RankReport {
    model: Model,
    ambient: Ambient,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cells: Option<Vec<(usize, usize)>>,
    size: usize,
    rank: usize,
    independent: bool,
}

#[derive(Serialize)]
struct TreesReport {
    n: usize,
    count: usize,
    trees: Vec<String>,
}

#[derive(Serialize)]
struct FourpointReport {
    n: usize,
    tree_metric: bool,
    violating_quadruple: Option<[usize; 4]>,
}

#[derive(Serialize)]
struct CrosscheckDetail {
    index: usize,
    edges: Vec<(usize, usize)>,
    search: bool,
    trees: bool,
    jacobian: bool,
    certificate_ok: Option<bool>,
}

#[derive(Serialize)]
struct CrosscheckReport {
    n: usize,
    mode: CrosscheckMode,
    seed: u64,
    trials: u64,
    checked: usize,
    disagreements: usize,
    certificate_failures: usize,
    details: Vec<CrosscheckDetail>,
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run_decide(cmd: DecideCommand) -> Result<ExitCode, CliError> {
    let (mut decision, flags) = match cmd {
        DecideCommand::Skew { n, edges, flags } => {
            let pairs = io::parse_edge_file(&edges, n)?;
            (decide_skew(n, &pairs, flags.options())?, flags)
        }
        DecideCommand::Rect { m, n, cells, flags } => {
            let cell_list = io::parse_cell_file(&cells, m, n)?;
            (decide_rect(m, n, &cell_list, flags.options())?, flags)
        }
        DecideCommand::Tree { n, edges, flags } => {
            let pairs = io::parse_edge_file(&edges, n)?;
            (decide_tree_metric(n, &pairs, flags.options())?, flags)
        }
    };
    flags.scrub(&mut decision);
    print_json(&decision)?;
    Ok(ExitCode::SUCCESS)
}

fn run_certificate(cmd: CertificateCommand) -> Result<ExitCode, CliError> {
    let CertificateCommand::Verify { n, edges, order } = cmd;
    let pairs = io::parse_edge_file(&edges, n)?;
    let sequence = io::parse_order(&order, n)?;
    let order = VertexOrder::from_sequence(&sequence)?;
    let valid = verify_certificate(n, &pairs, &order)?;
    print_json(&CertificateReport {
        n,
        edges: pairs,
        order: sequence,
        valid,
    })?;
    Ok(ExitCode::SUCCESS)
}

fn run_oracle(args: OracleArgs) -> Result<ExitCode, CliError> {
    let report = match args.model {
        OracleModel::Skew => {
            let edges_path = args.edges.ok_or_else(|| {
                CliError::Input("--model skew requires --edges".to_string())
            })?;
            let pairs = io::parse_edge_file(&edges_path, args.n)?;
            let ranks = oracle_ranks_skew(args.n, &pairs, args.trials, args.seed)?;
            let independent = ranks.contains(&pairs.len());
            OracleReport {
                model: args.model,
                ambient: Ambient::square(args.n),
                support_size: pairs.len(),
                edges: Some(pairs),
                cells: None,
                trials: args.trials,
                seed: args.seed,
                ranks,
                independent,
            }
        }
        OracleModel::Rect => {
            let m = args
                .m
                .ok_or_else(|| CliError::Input("--model rect requires --m".to_string()))?;
            let cells_path = args.cells.ok_or_else(|| {
                CliError::Input("--model rect requires --cells".to_string())
            })?;
            let cells = io::parse_cell_file(&cells_path, m, args.n)?;
            let ranks = oracle_ranks_rect(m, args.n, &cells, args.trials, args.seed)?;
            let independent = ranks.contains(&cells.len());
            OracleReport {
                model: args.model,
                ambient: Ambient::rect(m, args.n),
                support_size: cells.len(),
                edges: None,
                cells: Some(cells),
                trials: args.trials,
                seed: args.seed,
                ranks,
                independent,
            }
        }
    };
    print_json(&report)?;
    Ok(ExitCode::SUCCESS)
}

fn run_complete(args: CompleteArgs) -> Result<ExitCode, CliError> {
    let entries = io::parse_values_file(&args.values, args.n)?;
    let pairs: Vec<(usize, usize)> = entries.iter().map(|&(p, _)| p).collect();
    let values = DissimilarityMap::from_entries(args.n, entries.iter().cloned())?;
    let opts = CompleteOptions {
        cap: args.cap,
        parallel: args.parallel,
        decide: args.flags.options(),
    };
    let outcome = complete(args.n, &pairs, &values, opts)?;
    let mut report = match outcome {
        CompleteOutcome::Completed(c) => {
            let mut decision = decide_tree_metric(args.n, &pairs, args.flags.options())?;
            args.flags.scrub(&mut decision);
            let tree = TreeReport {
                edges: c.tree.tree().edges().to_vec(),
                weights: c.tree.weights().iter().map(rational_str).collect(),
                newick: to_newick(&c.tree)?,
            };
            CompleteReport {
                n: args.n,
                pairs: decision.edges.clone(),
                values: value_entries(values.entries()),
                independent: true,
                decision,
                tree: Some(tree),
                metric: Some(value_entries(c.metric.entries())),
                topologies_tried: Some(c.topologies_tried),
                used_certificate_caterpillar: Some(c.used_certificate_caterpillar),
            }
        }
        CompleteOutcome::NotIndependent(decision) => CompleteReport {
            n: args.n,
            pairs: decision.edges.clone(),
            values: value_entries(values.entries()),
            independent: false,
            decision: *decision,
            tree: None,
            metric: None,
            topologies_tried: None,
            used_certificate_caterpillar: None,
        },
    };
    args.flags.scrub(&mut report.decision);
    print_json(&report)?;
    Ok(ExitCode::SUCCESS)
}

fn run_rank(args: RankArgs) -> Result<ExitCode, CliError> {
    let report = match args.model {
        RankModel::Skew | RankModel::TreeMetric => {
            let edges_path = args.edges.ok_or_else(|| {
                CliError::Input("rank on a square model requires --edges".to_string())
            })?;
            let pairs = io::parse_edge_file(&edges_path, args.n)?;
            let rank = matroid_rank(args.n, &pairs, args.cap)?;
            RankReport {
                model: match args.model {
                    RankModel::TreeMetric => Model::TreeMetric,
                    _ => Model::Skew,
                },
                ambient: Ambient::square(args.n),
                size: pairs.len(),
                rank,
                independent: rank == pairs.len(),
                edges: Some(pairs),
                cells: None,
            }
        }
        RankModel::Rect => {
            let m = args
                .m
                .ok_or_else(|| CliError::Input("--model rect requires --m".to_string()))?;
            let cells_path = args.cells.ok_or_else(|| {
                CliError::Input("--model rect requires --cells".to_string())
            })?;
            let cells = io::parse_cell_file(&cells_path, m, args.n)?;
            let rank = matroid_rank_rect(m, args.n, &cells, args.cap)?;
            RankReport {
                model: Model::Rect,
                ambient: Ambient::rect(m, args.n),
                size: cells.len(),
                rank,
                independent: rank == cells.len(),
                edges: None,
                cells: Some(cells),
            }
        }
    };
    print_json(&report)?;
    Ok(ExitCode::SUCCESS)
}

fn run_trees(cmd: TreesCommand) -> Result<ExitCode, CliError> {
    let TreesCommand::Enumerate { n, cap } = cmd;
    if n > cap {
        return Err(CliError::Input(format!(
            "n = {n} exceeds the enumeration cap {cap}; raise --cap if you mean it"
        )));
    }
    let mut trees = Vec::new();
    for t in enumerate_binary_trees(n)? {
        trees.push(to_newick_topology(&t)?);
    }
    print_json(&TreesReport {
        n,
        count: trees.len(),
        trees,
    })?;
    Ok(ExitCode::SUCCESS)
}

fn run_fourpoint(args: FourpointArgs) -> Result<ExitCode, CliError> {
    let (n, entries) = io::parse_metric_file(&args.metric)?;
    let d = DissimilarityMap::from_entries(n, entries)?;
    let outcome = four_point_check(&d)?;
    let report = match outcome {
        FourPointOutcome::Holds => FourpointReport {
            n,
            tree_metric: true,
            violating_quadruple: None,
        },
        FourPointOutcome::Violated { quadruple } => FourpointReport {
            n,
            tree_metric: false,
            violating_quadruple: Some(quadruple),
        },
    };
    print_json(&report)?;
    Ok(ExitCode::SUCCESS)
}

struct CrosscheckSample {
    index: usize,
    edges: Vec<(usize, usize)>,
    search: bool,
    trees: bool,
    jacobian: bool,
    certificate_ok: Option<bool>,
}

fn crosscheck_one(
    n: usize,
    pairs: &[(usize, usize)],
    mask: u64,
    index: usize,
    args: &CrosscheckArgs,
) -> Result<CrosscheckSample, CliError> {
    let s: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    let decision = decide_skew(n, &s, DecideOptions::default())?;
    let trees = tree_enum_oracle(n, &s, args.cap)?;
    let jacobian = oracle_decide_skew(n, &s, args.trials, args.seed.wrapping_add(index as u64))?;
    let certificate_ok = match decision.certificate_order() {
        Some(order) => Some(verify_certificate(n, &s, &order)?),
        None => None,
    };
    Ok(CrosscheckSample {
        index,
        edges: s,
        search: decision.independent,
        trees,
        jacobian,
        certificate_ok,
    })
}

fn run_crosscheck(args: CrosscheckArgs) -> Result<ExitCode, CliError> {
    let pairs = all_pairs(args.n);
    let masks: Vec<u64> = match args.mode {
        CrosscheckMode::Exhaustive => {
            if pairs.len() > 25 {
                return Err(CliError::Input(format!(
                    "exhaustive crosscheck over {} pairs is infeasible; use --mode random",
                    pairs.len()
                )));
            }
            (0..1u64 << pairs.len()).collect()
        }
        CrosscheckMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let full = if pairs.len() == 64 {
                u64::MAX
            } else {
                (1u64 << pairs.len()) - 1
            };
            (0..args.samples).map(|_| rng.gen::<u64>() & full).collect()
        }
    };

    let samples: Vec<CrosscheckSample> = if args.parallel {
        masks
            .par_iter()
            .enumerate()
            .map(|(idx, &mask)| crosscheck_one(args.n, &pairs, mask, idx, &args))
            .collect::<Result<_, _>>()?
    } else {
        masks
            .iter()
            .enumerate()
            .map(|(idx, &mask)| crosscheck_one(args.n, &pairs, mask, idx, &args))
            .collect::<Result<_, _>>()?
    };

    let mut disagreements = 0;
    let mut certificate_failures = 0;
    let mut details = Vec::new();
    for s in &samples {
        let disagrees = s.search != s.trees || s.search != s.jacobian;
        if disagrees {
            disagreements += 1;
        }
        if s.certificate_ok == Some(false) {
            certificate_failures += 1;
        }
        if (disagrees || s.certificate_ok == Some(false)) && details.len() < 10 {
            details.push(CrosscheckDetail {
                index: s.index,
                edges: s.edges.clone(),
                search: s.search,
                trees: s.trees,
                jacobian: s.jacobian,
                certificate_ok: s.certificate_ok,
            });
        }
    }

    let report = CrosscheckReport {
        n: args.n,
        mode: args.mode,
        seed: args.seed,
        trials: args.trials,
        checked: samples.len(),
        disagreements,
        certificate_failures,
        details,
    };
    print_json(&report)?;
    if disagreements > 0 || certificate_failures > 0 {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Decide(cmd) => run_decide(cmd),
        Command::Certificate(cmd) => run_certificate(cmd),
        Command::Oracle(args) => run_oracle(args),
        Command::Complete(args) => run_complete(args),
        Command::Rank(args) => run_rank(args),
        Command::Trees(cmd) => run_trees(cmd),
        Command::Fourpoint(args) => run_fourpoint(args),
        Command::Crosscheck(args) => run_crosscheck(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
