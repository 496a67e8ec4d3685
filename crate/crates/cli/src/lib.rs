//! The `seifert` command line: argument definitions, file formats and the
//! command implementations. `main.rs` only parses arguments and prints.

pub mod commands;
pub mod document;
pub mod ingest;
pub mod selftest;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use commands::{run, Outcome};
pub use document::{exit, CliError, MatrixDocument};
pub use ingest::{IngestRecord, IngestReport};

#[derive(Debug, Parser)]
#[command(name = "seifert", version, about = "Seifert matrices, S-equivalence and the Blanchfield pairing")]
pub struct Cli {
    /// Print the structured (JSON) report instead of the human one.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a matrix document is of Seifert type.
    Validate { path: PathBuf },
    /// Alexander polynomial, |Δ(−1)| and signature.
    Invariants { path: PathBuf },
    /// The Blanchfield pairing on the generators, or on two vectors.
    Blanchfield {
        path: PathBuf,
        /// Comma-separated Laurent polynomials, e.g. `1,t^-1`.
        #[arg(long, requires = "w")]
        v: Option<String>,
        #[arg(long, requires = "v")]
        w: Option<String>,
    },
    /// Replay a chain document and verify the induced isometry.
    Moves {
        path: PathBuf,
        chain: PathBuf,
        /// Write the resulting matrix document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariant filter, chain search, then isometry search.
    Compare {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// A random Seifert-type matrix document.
    Random {
        #[arg(long, default_value_t = 1)]
        genus: usize,
        /// Bound on the entries of the symmetric part.
        #[arg(long, default_value_t = 3)]
        bound: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random chains from the unknot, trefoil and figure-eight, written as
    /// matrix and chain documents plus a hashed manifest.
    Corpus {
        #[arg(long, default_value_t = 10)]
        per_seed: usize,
        #[arg(long, default_value_t = 6)]
        chain_length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Matrix documents from a `name,size,entries` CSV table.
    Ingest {
        path: PathBuf,
        /// Write one document per accepted row into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariance and isometry checks over a corpus (the built-in one by
    /// default).
    Selftest {
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    /// Longest move chain returned by the chain search.
    #[arg(long)]
    pub budget_depth: Option<usize>,
    /// Matrices visited by the congruence search.
    #[arg(long)]
    pub budget_nodes: Option<usize>,
    /// Coefficient bound of generator-map entries.
    #[arg(long)]
    pub coeff_bound: Option<u32>,
    /// Degree bound of generator-map entries.
    #[arg(long)]
    pub deg_bound: Option<u32>,
}
