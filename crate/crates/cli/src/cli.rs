use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tropevol_core::ehrhart::DEFAULT_GUARD;
use tropevol_core::Method;

#[derive(Debug, Parser)]
#[command(
    name = "tropevol",
    version,
    about = "Tropical volumes and tropical Ehrhart polynomials, computed exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Commands,
}

#[derive(Debug, Subcommand)]
pub enum Commands {
    /// Every tropical volume functional of tconv(M), with witnesses.
    Volume {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Subsets)]
        method: MethodArg,
        /// Also report tlvol_i^+ and tlvol_i^- for this i on their own.
        #[arg(long)]
        i: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Lattice-point counts and the tropical Ehrhart polynomial for base b.
    Ehrhart {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
        b: u32,
        /// Report counts for k = 0..=kmax (default: the dimension).
        #[arg(long)]
        kmax: Option<u32>,
        /// Add the table of Log c_i^b (degree in b of each coefficient).
        #[arg(long)]
        log: bool,
        /// Restrict the Log table to the coefficient c_i.
        #[arg(long)]
        i: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the seeded property suites.
    Check {
        #[arg(long, default_value_t = tropevol_core::check::DEFAULT_SEED)]
        seed: u64,
        /// Run only this suite (default: all).
        #[arg(long)]
        suite: Option<String>,
        /// Number of random instances (default: the suite's own size).
        #[arg(long)]
        cases: Option<usize>,
        /// List the suites and exit.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Draw the cells and the tropical b-lattice points of a polygon (d = 2) as SVG.
    Plot {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
        b: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Matrix JSON: {"rows": d, "cols": m, "entries": [[...], ...]}.
    #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
    pub input: Option<PathBuf>,
    /// Built-in example: L, tri, 4D, cube, alcove, delta2, prod.
    #[arg(long)]
    pub fixture: Option<String>,
    #[arg(long, default_value_t = 4)]
    pub l: i64,
    #[arg(long, default_value_t = 0)]
    pub k: i64,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Base point of the alcove fixture, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Vec<i64>,
    /// Accept generators whose entries are all -inf.
    #[arg(long)]
    pub allow_empty_columns: bool,
    /// Maximal number of candidate points per enumeration.
    #[arg(long, env = "TROPEVOL_GUARD", default_value_t = DEFAULT_GUARD, value_parser = clap::value_parser!(u64).range(1..))]
    pub guard: u64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Subsets,
    Triangulation,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Subsets => Method::Subsets,
            MethodArg::Triangulation => Method::Triangulation,
            MethodArg::Both => Method::Both,
        }
    }
}
