use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact verification of tridiagonal-pair modules, parameter arrays and
/// zigzag-word combinatorics.
///
/// Every command prints a JSON report on stdout and a short summary on
/// stderr. Exit status: 0 when every check passes, 1 when a check fails,
/// 2 on a usage or input error.
#[derive(Debug, Parser)]
#[command(name = "tdpair", version)]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a parameter array read from a JSON file.
    CheckParams {
        /// JSON object with `d`, `theta`, `theta_star`, `zeta` (scalars as strings).
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Check every defining relation on the realized modules at random contexts.
    VerifyAppendix(TrialArgs),
    /// Check the injectivity certificate chains and the triple-product formula.
    MuCertificate(TrialArgs),
    /// Check eigenspace dimensions of the realized modules.
    Shape(TrialArgs),
    /// Zigzag words.
    #[command(subcommand)]
    Zz(ZzCommand),
    /// List convex spanning sequences `(r, k_1, ..., k_m, 0)` for `1 <= r <= d`.
    Convex {
        #[arg(long)]
        d: usize,
    },
    /// Tridiagonal systems built from parameter arrays.
    #[command(subcommand)]
    Tds(TdsCommand),
}

#[derive(Debug, Subcommand)]
pub enum ZzCommand {
    /// List zigzag words in shortlex order.
    Enumerate(ZzEnumerateArgs),
    /// Rank of the feasible-word images of φ in the realized modules.
    Rank(TrialArgs),
}

#[derive(Debug, Subcommand)]
pub enum TdsCommand {
    /// Construct, extract and compare against the input parameter array.
    Roundtrip(RoundtripArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldChoice {
    /// The rationals.
    Qq,
    /// Integers modulo `--prime`.
    Fp,
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    #[arg(long, value_enum, default_value_t = FieldChoice::Fp)]
    pub field: FieldChoice,
    /// Prime for `--field fp` [default: 2^62 - 57].
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct TrialArgs {
    /// Single degree to check [default: every bundled degree].
    #[arg(long)]
    pub d: Option<usize>,
    /// Random contexts per degree.
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[command(flatten)]
    pub field: FieldArgs,
    /// Directory of `d<N>.table` files replacing the bundled tables.
    #[arg(long, value_name = "PATH")]
    pub assets: Option<PathBuf>,
    /// Worker threads; the report does not depend on this.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ZzEnumerateArgs {
    #[arg(long)]
    pub d: usize,
    /// List feasible words instead of all zigzag words.
    #[arg(long, conflicts_with_all = ["exclude_r", "exclude_s", "max_len", "no_trivial"])]
    pub feasible: bool,
    /// Omit the generator e_r.
    #[arg(long)]
    pub exclude_r: Option<usize>,
    /// Omit the generator e*_s.
    #[arg(long)]
    pub exclude_s: Option<usize>,
    /// Longest word listed [default: 2d + 2].
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Leave out the trivial word.
    #[arg(long)]
    pub no_trivial: bool,
}

#[derive(Debug, Clone, Args)]
pub struct RoundtripArgs {
    /// Parameter array to round-trip; random arrays are drawn when absent.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["d", "trials"])]
    pub input: Option<PathBuf>,
    /// Single degree for random arrays [default: every bundled degree].
    #[arg(long)]
    pub d: Option<usize>,
    /// Random arrays per degree.
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, value_name = "PATH")]
    pub assets: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}
