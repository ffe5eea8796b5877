//! Argument definitions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use pgroup_core::theorems::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "pgroup",
    version,
    about = "Exact computation in finite p-groups given by power-commutator presentations"
)]
pub struct Cli {
    /// Largest subgroup that may be enumerated element by element.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    pub max_elements: u64,

    /// Collection steps allowed for a single product.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub max_steps: u64,

    #[command(subcommand)]
    pub command: Command,
}

/// FILE arguments accept a path or `corpus:NAME`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a presentation file and print a summary.
    Parse { file: String },

    /// Check the overlap conditions of a presentation.
    Consistency {
        file: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },

    /// Print the order of the group.
    Order { file: String },

    /// Collect a word into normal form.
    Nf {
        file: String,
        #[arg(long)]
        word: String,
    },

    /// Print the order of an element.
    Ord {
        file: String,
        #[arg(long)]
        word: String,
    },

    /// Subgroup generated by a list of words, optionally transformed.
    Sub {
        file: String,
        /// Comma-separated generating words.
        #[arg(long)]
        gens: String,
        #[command(flatten)]
        op: OpArgs,
    },

    /// Powerful nilpotency class of a subgroup (the whole group by default).
    Pnclass {
        file: String,
        #[arg(long)]
        gens: Option<String>,
        #[command(flatten)]
        op: OpArgs,
    },

    /// Build and verify the powerfully central chain of Omega_i(G^p).
    Chain {
        file: String,
        #[arg(long)]
        i: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },

    /// Run the verification suite.
    Verify(VerifyArgs),

    /// Built-in example groups.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Args)]
pub struct OpArgs {
    /// Operation applied to the generated subgroup.
    #[arg(long, value_enum)]
    pub op: Option<Op>,

    /// Index for `--op omega`.
    #[arg(long, allow_negative_numbers = true)]
    pub i: Option<i64>,

    /// Index for `--op agemo`.
    #[arg(long)]
    pub j: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Omega,
    Agemo,
    Derived,
    Exponent,
    Order,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: String,

    #[arg(long, default_value = "all", value_parser = parse_suite)]
    pub suite: Suite,

    #[arg(long, default_value_t = 4)]
    pub i_max: u32,

    #[arg(long, default_value_t = 4)]
    pub j_max: u32,

    #[arg(long, default_value_t = 3)]
    pub k_max: u32,

    /// `auto`, `exhaustive` or `sample:N`.
    #[arg(long, default_value = "auto")]
    pub mode: String,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,

    /// Record wall-clock milliseconds per check.
    #[arg(long)]
    pub timing: bool,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| format!("expected one of {}", Suite::NAMES.join(", ")))
}

#[derive(Debug, Subcommand)]
pub enum CorpusCommand {
    /// List the registry groups.
    List,

    /// Write a corpus group in the presentation file format.
    ///
    /// NAME is a registry name such as `example2_odd_p3`, or one of
    /// `example1`, `example2`, `example2_odd`, `abelian`, `family` with the
    /// parameters given as flags.
    Emit {
        name: String,
        #[arg(long)]
        p: Option<u64>,
        /// Exponents of the cyclic factors, for `abelian`.
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<u32>>,
        #[arg(long)]
        alpha: Option<u32>,
        #[arg(long)]
        beta: Option<u32>,
        #[arg(long)]
        gamma: Option<u32>,
        #[arg(long)]
        delta: Option<u32>,
        /// Write to this file instead of standard output.
        #[arg(long, short)]
        output: Option<std::path::PathBuf>,
    },
}
