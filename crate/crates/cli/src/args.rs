use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "tritab",
    version,
    about = "Spectra, characteristic polynomials, character tables and PLU factors of tridiagonal matrices"
)]
pub struct Cli {
    /// Output format; CSV applies to tabular payloads.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Seed for every randomized corpus.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Pass threshold for checks.
    #[arg(long, global = true, env = "TRITAB_TOLERANCE", default_value_t = 1e-8)]
    pub tolerance: f64,

    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues of a structured family, descending.
    #[command(allow_negative_numbers = true)]
    Spectrum {
        #[command(flatten)]
        family: FamilyArgs,
        /// Report the characteristic polynomial residual at every eigenvalue.
        #[arg(long)]
        verify: bool,
    },
    /// Characteristic polynomial values or coefficients.
    #[command(allow_negative_numbers = true)]
    Charpoly {
        #[command(flatten)]
        family: FamilyArgs,
        /// Band file `{"n", "sub", "diag", "sup"}` instead of a family.
        #[arg(long, value_name = "PATH", conflicts_with = "kind")]
        matrix: Option<PathBuf>,
        /// Evaluation points, comma separated or repeated.
        #[arg(long, value_delimiter = ',')]
        x: Vec<f64>,
        /// Emit coefficients in ascending powers.
        #[arg(long)]
        coeffs: bool,
        /// Compare the closed form with the recurrence at every point.
        #[arg(long)]
        verify: bool,
    },
    /// Character table of a class I or class II table algebra.
    #[command(allow_negative_numbers = true)]
    Characters {
        #[arg(long = "class", value_enum)]
        class: ClassKind,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Cyclic-pivot PLU factors of a tridiagonal matrix.
    #[command(allow_negative_numbers = true)]
    Plu {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_name = "PATH", conflicts_with_all = ["kind", "random"])]
        matrix: Option<PathBuf>,
        /// Seeded random matrix of order `--n`.
        #[arg(long, conflicts_with = "kind")]
        random: bool,
        /// Exit with status 1 if a check fails.
        #[arg(long)]
        verify: bool,
    },
    /// Run the invariant suites against the brute-force oracles.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 12)]
        max_d: usize,
        #[arg(long, default_value_t = 64)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "A")]
    A,
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "classI")]
    ClassI,
    #[value(name = "classII")]
    ClassII,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassKind {
    #[value(name = "I")]
    One,
    #[value(name = "II")]
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Generic,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Spectra,
    Characters,
    Plu,
}

/// Parameters of a structured family. Which ones are required depends on
/// `kind`: `A` takes `n`; `P` takes `n, a`; `Q` takes `n, a, b, c`;
/// `classI` takes `d, alpha`; `classII` takes `d, alpha, gamma`.
#[derive(Debug, Clone, Default, PartialEq, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
}
