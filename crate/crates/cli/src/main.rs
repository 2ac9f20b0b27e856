//! `brachyon`: load, check and construct skew braces and Yang-Baxter solutions
//! from the command line.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Failure;

/// Environment variable overriding every order cap.
pub const CAP_ORDER_ENV: &str = "BRACHYON_CAP_ORDER";

#[derive(Parser, Debug)]
#[command(
    name = "brachyon",
    version,
    about = "Skew braces and set-theoretic Yang-Baxter solutions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Input file.
    #[arg(short, long, global = true)]
    pub input: Option<PathBuf>,
    /// Output file, or directory for verbs that write several files.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Largest solution size considered.
    #[arg(long, global = true)]
    pub max_size: Option<usize>,
    /// Order cap for exhaustive searches; overrides BRACHYON_CAP_ORDER.
    #[arg(long, global = true)]
    pub max_order: Option<usize>,
    /// Maximum number of subgroups per orbit when enumerating specs.
    #[arg(long, global = true)]
    pub cap_families: Option<usize>,
    /// Worker threads for internal parallel searches.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Text => "txt",
        }
    }
}

/// A built-in brace.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Named {
    /// Trivial brace on Z/n (default n = 2).
    Trivial,
    /// Opposite brace on S_n (default n = 3).
    Opposite,
    /// Cyclic flip brace of order 2n (default n = 2).
    CyclicFlip,
    /// Non-two-sided skew brace of order 21.
    Order21,
    /// Left brace of order 64 with trivial socle.
    Vendramin,
}

#[derive(Args, Debug, Clone)]
pub struct BraceSource {
    /// Brace file.
    #[arg(long, conflicts_with = "name")]
    pub brace: Option<PathBuf>,
    /// Built-in brace.
    #[arg(long, value_enum)]
    pub name: Option<Named>,
    /// Parameter of the built-in brace.
    #[arg(long)]
    pub param: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Load and validate a file, then report its properties.
    Verify,
    /// Build the coset solution of a construction spec.
    Construct,
    /// Build the involutive solution of an involutive spec.
    ConstructInvolutive,
    /// Build the irretractable solution of a left brace with trivial socle.
    ConstructIrretractable {
        #[command(flatten)]
        source: BraceSource,
        /// Orbit representatives; defaults to every non-zero λ-orbit.
        #[arg(long, value_delimiter = ',')]
        reps: Vec<usize>,
    },
    /// Classify the solutions built over a brace up to isomorphism.
    Classify {
        #[command(flatten)]
        source: BraceSource,
    },
    /// Build a rack from a group, or the derived rack of a solution.
    Racks {
        /// Conjugacy class representatives (group input).
        #[arg(long, value_delimiter = ',')]
        reps: Vec<usize>,
        /// Subgroup attached to each representative.
        #[arg(long, value_enum, default_value_t = RackSubgroup::Centralizer)]
        subgroup: RackSubgroup,
    },
    /// Enumerate the skew braces with a given additive group.
    EnumerateBraces {
        /// Named group: cyclic:n, symmetric:n, dihedral:n, elementary:k or quaternion.
        #[arg(long)]
        group: Option<String>,
    },
    /// Compute the permutation brace of a solution.
    PermutationBrace,
    /// Emit a built-in brace and a solution built from it.
    Examples {
        #[arg(long, value_enum)]
        name: Named,
        #[arg(long)]
        param: Option<usize>,
        /// Objects to write: brace, solution, spec.
        #[arg(long, value_delimiter = ',', default_value = "brace,solution")]
        emit: Vec<Emit>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RackSubgroup {
    Centralizer,
    Cyclic,
    Trivial,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Brace,
    Solution,
    Spec,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.opts.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli.command, &cli.opts) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
