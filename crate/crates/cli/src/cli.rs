use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Completions, parameter words and big Ramsey degree bounds for classes
/// whose completion obstructions are induced cycles.
#[derive(Debug, Parser)]
#[command(name = "ramsey-forge", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Resource cap for enumerations, replacing RAMSEY_FORGE_CAP.
    #[arg(long, global = true)]
    pub cap: Option<u64>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct SpecArg {
    /// Class spec JSON file, or a built-in: rado, triangle-free,
    /// marked-rado, metric:1,2,3, ultrametric:chain:K, ultrametric:diamond.
    #[arg(long)]
    pub spec: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Complete a partial structure, or report why it cannot be completed.
    Complete {
        #[command(flatten)]
        spec: SpecArg,
        /// Structure JSON.
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// List the induced cycles of a structure.
    Cycles {
        /// Also check each cycle for a completion.
        #[arg(long)]
        spec: Option<String>,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 6)]
        lmax: usize,
    },
    /// Minimal envelope and type of a set of words.
    Envelope {
        /// A word, letters separated by spaces or one letter per character.
        #[arg(long = "word", required = true)]
        words: Vec<String>,
        /// Comma-separated alphabet; inferred from the words when absent.
        #[arg(long)]
        letters: Option<String>,
    },
    /// Catalogue of embedding types of k-sets of words.
    Types {
        #[arg(long)]
        alphabet: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        bound: usize,
        /// Merge types that differ by a permutation of the alphabet.
        #[arg(long)]
        rename: bool,
    },
    /// Build the word structure up to length n.
    Gbuild {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        n: usize,
    },
    /// Check that induced cycles of the word structure complete.
    Gaudit {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        lmax: usize,
    },
    /// Embed a finite irreducible structure into the word structure.
    Phi {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check that substitution preserves pair structures.
    Transport {
        #[command(flatten)]
        spec: SpecArg,
        /// Vertex length bound.
        #[arg(long)]
        n: usize,
        /// One all-parameter word such as "_0 _0 _1"; sweeps all words up
        /// to length --bound when absent.
        #[arg(long)]
        w: Option<String>,
        #[arg(long, default_value_t = 4)]
        bound: usize,
        #[arg(long, default_value_t = 0)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Upper bound on the big Ramsey degree of a structure.
    DegreeBound {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Exhaustive search for monochromatic substitution images.
    HjSearch {
        #[arg(long)]
        alphabet: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Parameters of the witness; defaults to k + 1.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 2)]
        colours: usize,
        #[arg(long)]
        n: usize,
    },
    /// Random audit of the completion hypothesis for a class spec.
    AuditSpec {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest random structure.
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
    /// Add a symmetric default symbol to every non-adjacent pair.
    Irreducibilize {
        #[arg(long = "in")]
        input: PathBuf,
        /// Binary symbol to add; declared if the language lacks it.
        #[arg(long)]
        symbol: String,
    },
}
