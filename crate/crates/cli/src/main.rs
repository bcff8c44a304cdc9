//! `affweyl`: command-line access to the engine.
//!
//! Exit status is 0 on success, 1 when a verification fails or a cap refuses
//! the computation, and 2 for malformed input.

mod commands;
mod input;

use std::process::ExitCode;

use affweyl::weyl::{DEFAULT_CLASS_CAP, DEFAULT_GROUP_CAP};
use affweyl::{Caps, Strategy, TypeLetter};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "affweyl", version, about = "Affine Weyl group computations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Args, Clone, Debug)]
pub struct TypeArgs {
    /// Cartan type letter (A-G).
    #[arg(long = "type")]
    pub letter: TypeLetter,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Args, Clone, Debug)]
pub struct DatumArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Minuscule node `i` of `tau_i`; omit for the quasi-split form.
    #[arg(long)]
    pub tau: Option<usize>,
    /// Finite diagram automorphism: id, flip or triality.
    #[arg(long, default_value = "id")]
    pub sigma0: String,
}

#[derive(Args, Clone, Debug)]
pub struct CapArgs {
    /// Largest Weyl group enumerated.
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    pub max_group: usize,
    /// Largest twisted conjugacy class closed.
    #[arg(long, default_value_t = DEFAULT_CLASS_CAP)]
    pub max_class: usize,
    /// Allow class computations in E7 and E8.
    #[arg(long)]
    pub allow_large: bool,
}

impl CapArgs {
    pub fn caps(&self) -> Caps {
        Caps {
            group: self.max_group,
            class: self.max_class,
            allow_large: self.allow_large,
        }
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Root system data: Cartan matrix, positive roots, coweights.
    Roots(TypeArgs),
    /// Length and normal forms of a finite or affine element.
    Element {
        #[command(flatten)]
        ty: TypeArgs,
        /// Finite Weyl part as a word, e.g. `121` or `1,2,1`.
        #[arg(long, default_value = "")]
        word: String,
        /// Translation part in simple-coroot coordinates, e.g. `1/2,0,1`.
        #[arg(long)]
        lambda: Option<String>,
        /// Affine word in the labels 0..=n, replacing --word and --lambda.
        #[arg(long)]
        affine_word: Option<String>,
    },
    /// Quantum Bruhat graph queries.
    Qbg {
        #[command(subcommand)]
        query: QbgQuery,
    },
    /// Demazure product of two affine elements `t^lambda w`.
    Demazure {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value = "")]
        a_word: String,
        #[arg(long)]
        a_lambda: Option<String>,
        #[arg(long, default_value = "")]
        b_word: String,
        #[arg(long)]
        b_lambda: Option<String>,
    },
    /// Generic Newton point of `t^lambda w`, or of `t^{x mu}` against the
    /// average formula.
    Newton {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long)]
        lambda: Option<String>,
        /// Element `x` for the translation `t^{x mu}`; requires --mu.
        #[arg(long)]
        x: Option<String>,
        /// Dominant `mu` as pairings with the simple roots, e.g. `2,2`.
        #[arg(long)]
        mu: Option<String>,
    },
    /// The defect `Xi_sigma = mu^diamond - nu(b_max)`.
    Xi {
        #[arg(long = "type")]
        letter: Option<TypeLetter>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        tau: Option<usize>,
        #[arg(long, default_value = "id")]
        sigma0: String,
        /// Emit every tabulated case.
        #[arg(long)]
        table: bool,
    },
    /// Dimension of `X(mu, b_max)` for depth at least 2.
    Dim {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long, default_value = "all")]
        strategy: Strategy,
        /// Dominant `mu` as pairings; adds `nu(b_max)` to the report.
        #[arg(long)]
        mu: Option<String>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Run a named verification suite.
    Verify {
        /// One of qbg-lemmas, demazure, two-expressions, bounds, key-lemma,
        /// xi-tables, main-theorem, newton-consistency.
        suite: String,
        /// Single type letter.
        #[arg(long = "type", conflicts_with = "types")]
        letter: Option<TypeLetter>,
        /// Comma-separated type letters.
        #[arg(long)]
        types: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        max_rank: Option<usize>,
        /// Random samples per type for sampled checks.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Subcommand)]
pub enum QbgQuery {
    /// Shortest-path distance `d(x, y)`.
    Dist(PairArgs),
    /// Shortest-path weight `wt(x, y)`.
    Weight(PairArgs),
    /// One shortest path with its edges.
    Path(PairArgs),
    /// Graphviz export of the whole graph (rank at most 3).
    Dot(TypeArgs),
}

#[derive(Args, Clone, Debug)]
pub struct PairArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long)]
    pub from: String,
    #[arg(long)]
    pub to: String,
}

fn configure_workers() {
    if let Some(n) = std::env::var("AFFWEYL_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // a second initialisation only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_workers();
    match commands::run(cli.command, cli.format) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
