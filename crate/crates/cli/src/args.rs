use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fqt_core::Field;

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "fqt",
    version,
    about = "Fermat quotients, Wieferich and Wilson primes in F_q[t]"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Seed for the randomized equal-degree splitting.
    #[arg(long, global = true, env = "CARLITZ_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the output here instead of stdout (survey: the JSON-lines store).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArg {
    /// Field descriptor: `q`, `p^k`, or `q:modulus[@base]`.
    #[arg(long, value_parser = parse_field)]
    pub field: Field,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Monic irreducibles.
    Primes {
        #[command(subcommand)]
        action: PrimesCmd,
    },
    /// Wieferich and Wilson conditions at one prime.
    Check {
        #[command(subcommand)]
        action: CheckCmd,
    },
    /// Whether a base has all, no, or some Wieferich primes.
    ClassifyBase {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        base: String,
    },
    /// Carlitz quantities.
    Carlitz {
        #[command(subcommand)]
        action: CarlitzCmd,
    },
    /// The three derivatives.
    Deriv {
        #[command(subcommand)]
        action: DerivCmd,
    },
    /// Factor a polynomial.
    Factor {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        poly: String,
        /// Only extract factors up to this degree.
        #[arg(long)]
        max_trial_degree: Option<usize>,
    },
    /// Sweep degrees, resuming from `--out` if it exists.
    Survey {
        #[command(flatten)]
        field: FieldArg,
        /// Degrees: `6`, `1..8` or `2,4,6`.
        #[arg(long)]
        degrees: String,
        /// Also write the count table as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Wilson verdict from the definition only.
        #[arg(long)]
        no_suites: bool,
    },
    /// Degree-d factors of -L'_{d-1} against the Wilson primes.
    Theorem5 {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        degree: usize,
    },
    /// Degree-d factors of L_{d-1} - c and D_{d-1} + (-1)^d c.
    Theorem7 {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        degree: usize,
        /// Code of the nonzero constant c.
        #[arg(long)]
        c: u64,
        #[arg(long, value_enum, default_value_t = Mode::Divisors)]
        mode: Mode,
        /// Bound for `--mode partial`.
        #[arg(long, default_value_t = 22)]
        max_trial_degree: usize,
    },
    /// gcd scans.
    Scan {
        #[command(subcommand)]
        action: ScanCmd,
    },
    /// Histogram of Q_℘(a)(θ) over small monic bases.
    Distribution {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        prime: String,
        #[arg(long)]
        degree_bound: usize,
        /// Largest (number of bases) x Norm ℘ to accept.
        #[arg(long, default_value_t = 1 << 24)]
        budget: u128,
    },
    /// Reproduce published numbers.
    Verify {
        #[command(subcommand)]
        action: VerifyCmd,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Divisors,
    Full,
    Partial,
}

#[derive(Subcommand, Debug)]
pub enum PrimesCmd {
    List {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        degree: usize,
        /// Candidate index to start from.
        #[arg(long, default_value_t = 0)]
        start: u64,
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    Wieferich {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        prime: String,
        #[arg(long)]
        base: String,
    },
    Wilson {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        prime: String,
        /// Evaluate all fifteen equivalent conditions.
        #[arg(long)]
        all_conditions: bool,
        /// Evaluate F_d as the literal product (bounded).
        #[arg(long)]
        literal: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Bracket,
    L,
    D,
    F,
    WilsonSum,
}

#[derive(Subcommand, Debug)]
pub enum CarlitzCmd {
    Compute {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum)]
        what: Quantity,
        #[arg(long)]
        n: usize,
        /// Reduce modulo this polynomial.
        #[arg(long)]
        modulo: Option<String>,
        /// Largest degree computed exactly.
        #[arg(long, default_value_t = fqt_core::carlitz::EXACT_DEGREE_GUARD)]
        degree_guard: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum DerivCmd {
    Eval {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        prime: String,
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ScanCmd {
    Borisov {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        d_max: usize,
    },
    AltConjecture {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        d_max: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    Paper {
        #[arg(long, value_parser = ["q3d6", "q2d14", "artin-schreier", "q3d9", "all"])]
        case: String,
        /// Also factor L_13 + 1 over F_2, partially and completely.
        #[arg(long)]
        extended: bool,
    },
}
