//! `macqt`: compute, expand, verify and benchmark modified Macdonald data.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "macqt",
    version,
    about = "Exact modified Macdonald polynomial computations"
)]
pub struct Cli {
    /// Directory for persisted M tables.
    #[arg(long, global = true, env = "MACQT_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand H~_mu in a classical basis.
    Hmu {
        /// Partition as comma-separated parts, e.g. 3,2,1; `0` or `[]` is empty.
        partition: String,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        basis: BasisArg,
        #[command(flatten)]
        output: Output,
    },
    /// List Pieri coefficients around a partition.
    Pieri {
        #[arg(long, value_enum)]
        op: PieriOp,
        partition: String,
        /// Number of cells for `ck` and `dk`.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate Q_(m,n)(-1)^n or apply Q_(m,n) to a serialized function.
    Qop {
        #[arg(allow_hyphen_values = true)]
        m: i64,
        #[arg(allow_hyphen_values = true)]
        n: i64,
        /// Evaluate Q_(m,n)(-1)^n by the tableau formula.
        #[arg(long = "const", conflicts_with = "input")]
        constant: bool,
        /// SymFun or HExp file, JSON or text.
        #[arg(long, required_unless_present = "constant")]
        input: Option<PathBuf>,
        /// Print the result in this basis instead of the H~ basis.
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
        #[command(flatten)]
        output: Output,
    },
    /// Expand a serialized symmetric function in the H~ basis.
    Expand {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Run identity suites.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(macqt_core::verify::Suite::NAMES))]
        suite: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Time the computation of full M tables; prints CSV.
    Bench {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Algo::Bh)]
        algo: Algo,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisArg {
    M,
    S,
    E,
    H,
    P,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieriOp {
    /// Multiplication by e_1 (d coefficients, one cell up).
    E1,
    /// e_1^perp (c coefficients, one cell down).
    Skew,
    /// h_k^perp (k cells down).
    Ck,
    /// Multiplication by e_k[X/M] (k cells up).
    Dk,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Bh,
    Oracle,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => code,
        Err(e) if e.is_broken_pipe() => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
