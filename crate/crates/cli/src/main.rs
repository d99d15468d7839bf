//! `locsparse`: command-line front end.
//!
//! Exit codes: 0 on success, 2 when an input violates a precondition (bad file,
//! size guard, out-of-domain parameter), 3 when the command ran but its verdict
//! is negative (sparsity or certificate failure, uncolorable cover, failed
//! hypotheses, failed acceptance criterion). Verdicts are not errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser)]
#[command(name = "locsparse", version, about = "Local sparsity, hard-core occupancy and cover coloring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GraphArg {
    /// Graph file (edge list, DIMACS `.col` or JSON).
    graph: PathBuf,
    /// Input format; guessed from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dimacs,
    Json,
}

impl From<FormatArg> for locsparse::io::Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => Self::EdgeList,
            FormatArg::Dimacs => Self::Dimacs,
            FormatArg::Json => Self::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConditionMode {
    Dkps,
    Bknp,
}

#[derive(Clone, Copy, ValueEnum)]
enum IsetMethod {
    /// Recursive construction for (k, r)-sparse graphs.
    Sparse,
    /// Min-degree greedy.
    Turan,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TwistArg {
    /// Lists {0, ..., q-1} matched color to color.
    Identity,
    /// A uniform random perfect matching on every edge.
    Full,
    /// Random matchings with each pair kept with probability --keep.
    Partial,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Acceptance,
}

#[derive(Subcommand)]
enum Command {
    /// Certify (k, r)-local sparsity: clique counts in every neighborhood.
    Analyze {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        k: f64,
        #[arg(long)]
        r: usize,
    },
    /// Exact independence polynomial.
    Polynomial {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Exact occupancy fraction, optionally compared with a Glauber run.
    Occupancy {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        lambda: f64,
        /// Also run Glauber dynamics for this many steps.
        #[arg(long, requires = "seed")]
        glauber_steps: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a local occupancy certificate and report the bound it gives.
    Certify {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        lambda: f64,
        /// Quantify over all neighborhood subgraphs, not only induced ones.
        #[arg(long)]
        strong: bool,
        /// Derive (β, γ) from the closed-form parameter choice.
        #[arg(long, requires = "sigma", conflicts_with_all = ["cert", "beta"])]
        auto: bool,
        #[arg(long)]
        sigma: Option<f64>,
        /// Sparsity parameters for --auto.
        #[arg(long, default_value_t = 1.0)]
        k: f64,
        #[arg(long, default_value_t = 3)]
        r: usize,
        /// Certificate JSON file.
        #[arg(long, conflicts_with = "beta")]
        cert: Option<PathBuf>,
        /// Uniform β; with --gamma.
        #[arg(long, requires = "gamma")]
        beta: Option<f64>,
        /// Uniform γ. Alone, β is set to the smallest passing value.
        #[arg(long)]
        gamma: Option<f64>,
    },
    /// Constructive independent set with its trace.
    Iset {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long, default_value_t = 1.0)]
        k: f64,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, value_enum, default_value = "sparse")]
        method: IsetMethod,
    },
    /// Color a graph from a correspondence cover.
    Color {
        #[command(flatten)]
        input: GraphArg,
        /// Cover JSON file.
        #[arg(long, required_unless_present = "uniform", conflicts_with = "uniform")]
        cover: Option<PathBuf>,
        /// Use the identity cover with lists {0, ..., q-1}.
        #[arg(long)]
        uniform: Option<u32>,
        #[arg(long, conflicts_with = "heuristic")]
        exact: bool,
        #[arg(long, requires = "seed")]
        heuristic: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100_000)]
        max_iters: u64,
    },
    /// Check the hypotheses of a cover-coloring theorem.
    Conditions {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        cover: PathBuf,
        #[arg(long, value_enum)]
        mode: ConditionMode,
        /// JSON object, inline or as a file path.
        #[arg(long)]
        params: String,
    },
    /// Raise the minimum degree by doubling.
    Embed {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 1.0)]
        k: f64,
        #[arg(long, default_value_t = 3)]
        r: usize,
        /// Output prefix: writes `<out>.<ext>` and `<out>.homs.json`. Without it the
        /// graph goes to stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edgelist")]
        out_format: FormatArg,
    },
    /// Generate a graph. Parameters are `key=value` pairs separated by commas.
    Gen {
        /// gnp, gnm, triangle-free, locally-sparse, path, cycle, complete, star,
        /// petersen, kneser, multipartite
        family: String,
        #[arg(long, default_value = "")]
        params: String,
        /// Required by the random families.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edgelist")]
        out_format: FormatArg,
    },
    /// Write a q-fold correspondence cover of a graph as JSON.
    Cover {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        fold: usize,
        #[arg(long, value_enum, default_value = "identity")]
        twist: TwistArg,
        #[arg(long, default_value_t = 0.5)]
        keep: f64,
        /// Required unless --twist identity.
        #[arg(long, required_if_eq_any = [("twist", "full"), ("twist", "partial")])]
        seed: Option<u64>,
    },
    /// Run a benchmark suite.
    Bench {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Run only this criterion.
        #[arg(long)]
        criterion: Option<u8>,
        /// Emit JSON instead of the table.
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(commands::Verdict::Pass) => ExitCode::SUCCESS,
        Ok(commands::Verdict::Fail) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
