//! Command-line surface. One subcommand per run.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(
    name = "mexpart",
    version,
    about = "Compute and verify mex-related partition functions p_{mt,t}(n)"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write to this file instead of stdout. Relative paths are resolved
    /// against $MEXPART_OUTPUT_DIR when it is set.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Oracle,
    Series,
    Identity,
}

impl From<RouteArg> for mexpart_core::Route {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Oracle => mexpart_core::Route::Oracle,
            RouteArg::Series => mexpart_core::Route::Series,
            RouteArg::Identity => mexpart_core::Route::Identity,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportKind {
    /// p(n) for n = 0..=X.
    PartitionTable,
    /// Running count of odd b(n), the theta coefficients mod 2.
    ThetaDensity,
    /// |N_n| and the B_k interval index for n = 0..=X.
    NeighborParity,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Params {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub t: u64,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print p_{mt,t}(n); by default every route is cross-checked.
    Compute {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = RouteArg::Series)]
        route: RouteArg,
        /// Skip the cross-route check.
        #[arg(long)]
        no_check: bool,
    },
    /// p(j) and p_{mt,t}(j) for j = 0..=n.
    Table {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        no_check: bool,
    },
    /// Brute-force p_{A,a}(j) for j = 0..=n, compared against the series
    /// route when a divides A.
    OracleCheck {
        #[arg(long = "A")]
        modulus: u64,
        #[arg(long = "a")]
        residue: u64,
        #[arg(long)]
        n: u64,
    },
    /// Even/odd tally of p_{mt,t}(n) for n = 1..=X against sqrt(X/3).
    ParityScan {
        #[command(flatten)]
        params: Params,
        #[arg(long = "X", default_value_t = 10_000)]
        x: u64,
    },
    /// The parity recurrence for n = 1..=n.
    Lemma3 {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 1000)]
        n: u64,
    },
    /// Least odd p_{mt,t}(n) with n in [2r-1, r(3r-1)/2].
    Witness {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        r: u64,
    },
    /// Odd witnesses of p_{mp,p} along a_k = a_{k-1}(3a_{k-1}-1)/2.
    Theorem5 {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        p: u64,
        #[arg(long = "X", default_value_t = 10_000)]
        x: u64,
        #[arg(long, default_value_t = 2)]
        s: u64,
    },
    /// p_{mat,at}(an+b) = 0 (mod k), either for a Ramanujan family
    /// (--family P --k EXPONENT) or an explicit progression (--a --b --k MODULUS).
    Congruence {
        #[arg(long, conflicts_with_all = ["a", "b"])]
        family: Option<u64>,
        #[arg(long, requires = "b")]
        a: Option<u64>,
        #[arg(long, requires = "a")]
        b: Option<u64>,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = 200)]
        nmax: u64,
        /// Points re-verified through the generating function.
        #[arg(long, default_value_t = 5)]
        spot_checks: u64,
    },
    /// Raw tables for plotting.
    Export {
        #[arg(long, value_enum)]
        kind: ExportKind,
        #[arg(long = "X", default_value_t = 10_000)]
        x: u64,
        /// Parameters for theta-density.
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Compute { .. } => "compute",
            Command::Table { .. } => "table",
            Command::OracleCheck { .. } => "oracle-check",
            Command::ParityScan { .. } => "parity-scan",
            Command::Lemma3 { .. } => "lemma3",
            Command::Witness { .. } => "witness",
            Command::Theorem5 { .. } => "theorem5",
            Command::Congruence { .. } => "congruence",
            Command::Export { .. } => "export",
        }
    }
}
