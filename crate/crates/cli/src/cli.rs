use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use lexext_core::verify::DEFAULT_BUDGET;

use crate::format::GraphFormat;

#[derive(Debug, Parser)]
#[command(
    name = "lexext",
    version,
    about = "Sharp bounds on independent sets via lex graphs, with exhaustive verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bounds on alpha and i_r for graphs with n vertices and m edges
    Bound(BoundArgs),
    /// Emit the lex graph L(n, m)
    Lex(LexArgs),
    /// Count independent sets of a graph read from a file or stdin
    Count(CountArgs),
    /// Exhaustively certify the bounds for all small (n, m)
    Verify(VerifyArgs),
    /// Bound table over every m for a fixed n and r
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LexFormat {
    Edgelist,
    Graph6,
    Dot,
}

impl From<LexFormat> for GraphFormat {
    fn from(f: LexFormat) -> Self {
        match f {
            LexFormat::Edgelist => GraphFormat::Edgelist,
            LexFormat::Graph6 => GraphFormat::Graph6,
            LexFormat::Dot => GraphFormat::Dot,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Graph6,
}

impl From<InputFormat> for GraphFormat {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::Edgelist => GraphFormat::Edgelist,
            InputFormat::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub m: u64,
    /// Set sizes r >= 2; repeat or separate with commas
    #[arg(long, value_delimiter = ',', conflicts_with = "all_r")]
    pub r: Vec<u64>,
    /// Every r in 2..=n
    #[arg(long)]
    pub all_r: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct LexArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: u64,
    #[arg(long, value_enum, default_value_t = LexFormat::Edgelist)]
    pub format: LexFormat,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("what").required(true).args(["r", "profile"])))]
pub struct CountArgs {
    /// Input file; stdin when absent or `-`
    #[arg(long)]
    pub input: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
    pub format: InputFormat,
    /// Report only i_r
    #[arg(long)]
    pub r: Option<usize>,
    /// Report the full profile i_0..i_n
    #[arg(long)]
    pub profile: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n_max: u64,
    /// Largest r to certify; defaults to n-max
    #[arg(long)]
    pub r_max: Option<u64>,
    /// Maximum graphs enumerated per (n, m) cell
    #[arg(long, env = "LEXEXT_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Exit with status 3 when any cell was refused
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub r: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}
