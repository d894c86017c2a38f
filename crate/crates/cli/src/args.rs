use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nullcover::error::{DEFAULT_ENUMERATION_CAP, DEFAULT_VERIFICATION_CAP};

/// Compact nullsets in abelian groups and the translates that cover slaloms.
#[derive(Debug, Parser)]
#[command(name = "nullcover", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest finite group enumerated element by element.
    #[arg(
        long,
        global = true,
        default_value_t = DEFAULT_ENUMERATION_CAP,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    pub cap_enum: u64,
    /// Largest number of points an exhaustive check may visit.
    #[arg(
        long,
        global = true,
        env = "NULLCOVER_CAP_VERIFY",
        default_value_t = DEFAULT_VERIFICATION_CAP,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    pub cap_verify: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// JSON input: inline text, `@path`, or `@-` for standard input.
    #[arg(long = "in", global = true, value_name = "JSON")]
    pub input: Option<String>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Width {
    /// f(n) = n + 2
    #[value(name = "n+2")]
    Linear,
    /// f(n) = floor((n + 2)/2)
    #[value(name = "(n+2)/2")]
    Half,
}

/// A block plan described on the command line.
#[derive(Debug, Args)]
pub struct PlanArgs {
    /// Prime of a p-adic plan.
    #[arg(long, conflicts_with = "orders")]
    pub p: Option<u64>,
    /// Cyclic factor orders of a product plan, repeated cyclically.
    #[arg(long, value_delimiter = ',')]
    pub orders: Option<Vec<u64>>,
    /// Number of blocks.
    #[arg(long)]
    pub depth: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Split coordinates into blocks of order above 2(n+3).
    Plan(PlanArgs),
    /// Build the nullset of a plan given by flags or `--in`.
    BuildNullset(PlanArgs),
    /// Cover a slalom (from `--in`, or random from `--seed`) by one translate.
    #[command(subcommand)]
    Cover(CoverCommand),
    /// Re-check a cover bundle read from `--in`.
    Verify,
    /// Measure bound of a nullset, or the first depth below a threshold.
    Measure(MeasureArgs),
    /// The Erdős–Kakutani set.
    #[command(subcommand)]
    Ek(EkCommand),
    /// Least translator of S into A in a finite abelian group.
    FindTranslator(TranslatorArgs),
    /// Trichotomy case of the discrete group read from `--in`.
    Classify,
    /// Pontryagin dual of the group read from `--in`.
    Dual,
    /// Primary decomposition of the finite group read from `--in`.
    Decompose,
    /// Reduction trace and verdict for the group read from `--in`.
    Pipeline(PipelineArgs),
    /// Least p-divisibility chain in a finite abelian group.
    Chain(ChainArgs),
    /// Random slalom over the blocks of a plan.
    SlalomGen(SlalomArgs),
    /// Check whether a family of slaloms covers the truncated cube.
    CubeCheck,
}

#[derive(Debug, Subcommand)]
pub enum CoverCommand {
    /// Product of cyclic groups, width n + 2.
    Product {
        /// Cyclic factor orders, repeated cyclically.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        orders: Vec<u64>,
        #[arg(long)]
        depth: usize,
    },
    /// p-adic integers, width floor((n + 2)/2).
    Padic {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[command(flatten)]
    pub plan: PlanArgs,
    /// Number of leading blocks measured; defaults to all of them.
    #[arg(long)]
    pub blocks: Option<usize>,
    /// Report the first block count whose bound drops below this rational.
    #[arg(long, value_name = "NUM/DEN", conflicts_with = "blocks")]
    pub threshold: Option<String>,
    /// Largest block count searched with `--threshold`.
    #[arg(long, default_value_t = 100_000)]
    pub limit: usize,
}

#[derive(Debug, Subcommand)]
pub enum EkCommand {
    /// Tri-state membership of num/den.
    Member(RationalArgs),
    /// Factorial-base expansions of num/den.
    Expand(RationalArgs),
    /// Total length of the level-N cylinders.
    Measure {
        #[arg(long)]
        depth: usize,
    },
    /// Largest value with admissible digits up to N.
    Sup {
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Debug, Args)]
pub struct RationalArgs {
    #[arg(long)]
    pub num: String,
    #[arg(long)]
    pub den: String,
    #[arg(long)]
    pub depth: usize,
}

#[derive(Debug, Args)]
pub struct TranslatorArgs {
    /// Cyclic factor orders of G.
    #[arg(long, value_delimiter = ',')]
    pub orders: Vec<u64>,
    /// Indices of A in canonical order.
    #[arg(long, value_delimiter = ',')]
    pub a: Vec<u64>,
    /// Indices of S in canonical order.
    #[arg(long, value_delimiter = ',')]
    pub s: Vec<u64>,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct PipelineArgs {
    /// Print the rule registry instead.
    #[arg(long)]
    pub rules: bool,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    /// Cyclic factor orders of G.
    #[arg(long, value_delimiter = ',')]
    pub orders: Vec<u64>,
    #[arg(long)]
    pub p: u64,
    /// Chain depth d; the chain has d + 1 elements.
    #[arg(long, required_unless_present = "max")]
    pub depth: Option<u64>,
    /// Report the largest depth instead.
    #[arg(long)]
    pub max: bool,
}

#[derive(Debug, Args)]
pub struct SlalomArgs {
    #[command(flatten)]
    pub plan: PlanArgs,
    #[arg(long, value_enum)]
    pub width: Width,
}
