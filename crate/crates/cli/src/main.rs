//! `coxcover`: load JSON fixtures, run constructions and checks, print one
//! JSON report. Exit status 0 on success, 1 when a check fails, 2 on bad input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Parser, Debug)]
#[command(name = "coxcover", version, about = "Coxeter groups, buildings and their covers")]
struct Cli {
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// Word problem, spherical subsets and nerves.
    #[command(subcommand)]
    Coxeter(CoxeterCmd),
    /// Finite buildings given by chambers and panels.
    #[command(subcommand)]
    Building(BuildingCmd),
    /// Balls in the building covering `C'` after surgery.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Partial and square products of Coxeter systems.
    #[command(subcommand)]
    Product(ProductCmd),
    /// Reduced integer homology of simplicial complexes.
    #[command(subcommand)]
    Homology(HomologyCmd),
}

#[derive(Subcommand, Debug)]
pub enum CoxeterCmd {
    /// Canonical reduced form of a word.
    Reduce {
        #[command(flatten)]
        common: Common,
        /// Comma-separated generator labels; empty for the identity.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// All spherical subsets.
    Spherical {
        #[command(flatten)]
        common: Common,
    },
    /// The nerve `L(W, S)`.
    Nerve {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
pub enum BuildingCmd {
    /// Check the building axioms; the first counterexample is reported.
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Chambers within a gallery distance of a base chamber.
    Ball {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        radius: usize,
    },
    /// Homology of the realization over the nerve, a simplex, or a given complex.
    Realize {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with_all = ["simplex", "complex"])]
        nerve: bool,
        #[arg(long, conflicts_with = "complex")]
        simplex: bool,
        /// Complex JSON whose vertices are generator labels.
        #[arg(long)]
        complex: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CoverCmd {
    /// Build a ball from folding data bundled with a building.
    Build {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        base: Option<String>,
        /// Write the ball to this path.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Verify a ball, read either from an export or built from folding data.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        interior: usize,
        /// Radius for folding-data input; defaults to one more than the interior.
        #[arg(long)]
        radius: Option<usize>,
        #[arg(long)]
        base: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ProductCmd {
    /// The assembled Coxeter matrix.
    Assemble {
        #[command(flatten)]
        common: Common,
    },
    /// The nerve of the product; square products are also drawn in `O(p, V)`.
    Nerve {
        #[command(flatten)]
        common: Common,
    },
    /// Ball in the cover of the product of the factor buildings.
    Cover {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        base: Option<String>,
        /// Also verify the ball on this interior radius.
        #[arg(long)]
        interior: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum HomologyCmd {
    /// Reduced homology with torsion.
    Compute {
        #[command(flatten)]
        common: Common,
    },
    /// Whether every `L - σ` has free reduced homology concentrated in the degree.
    Punctured {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        degree: isize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// JSON input document.
    #[arg(long)]
    input: PathBuf,
    /// Rewriting step budget for the word problem, or class cap for balls.
    #[arg(long)]
    budget: Option<u64>,
    /// Add wall-clock time to the report.
    #[arg(long)]
    timing: bool,
}

/// Errors reach standard error with a stable code.
#[derive(Debug)]
pub enum CliError {
    Core(coxcover::Error),
    Io(String),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io(_) => "io",
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<coxcover::Error> for CliError {
    fn from(e: coxcover::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Core(e.into())
    }
}

/// A loaded input document and the hex SHA-256 of its bytes.
pub struct Input {
    pub value: Value,
    pub digest: String,
}

pub fn read_input(path: &PathBuf) -> Result<Input, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let value = serde_json::from_slice(&bytes)?;
    Ok(Input {
        value,
        digest: hex::encode(Sha256::digest(&bytes)),
    })
}

/// What a command produced: report fields and whether its check passed.
pub struct Outcome {
    pub fields: Value,
    pub pass: bool,
}

fn command_echo(group: &Group) -> (String, &Common) {
    use BuildingCmd as B;
    use CoverCmd as C;
    use CoxeterCmd as X;
    use HomologyCmd as H;
    use ProductCmd as P;
    match group {
        Group::Coxeter(X::Reduce { common, .. }) => ("coxeter reduce".into(), common),
        Group::Coxeter(X::Spherical { common }) => ("coxeter spherical".into(), common),
        Group::Coxeter(X::Nerve { common }) => ("coxeter nerve".into(), common),
        Group::Building(B::Verify { common }) => ("building verify".into(), common),
        Group::Building(B::Ball { common, .. }) => ("building ball".into(), common),
        Group::Building(B::Realize { common, .. }) => ("building realize".into(), common),
        Group::Cover(C::Build { common, .. }) => ("cover build".into(), common),
        Group::Cover(C::Verify { common, .. }) => ("cover verify".into(), common),
        Group::Product(P::Assemble { common }) => ("product assemble".into(), common),
        Group::Product(P::Nerve { common }) => ("product nerve".into(), common),
        Group::Product(P::Cover { common, .. }) => ("product cover".into(), common),
        Group::Homology(H::Compute { common }) => ("homology compute".into(), common),
        Group::Homology(H::Punctured { common, .. }) => ("homology punctured".into(), common),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (command, common) = command_echo(&cli.group);
    let timing = common.timing;
    let result = read_input(&common.input).and_then(|input| {
        let outcome = match &cli.group {
            Group::Coxeter(c) => commands::coxeter(c, &input),
            Group::Building(c) => commands::building(c, &input),
            Group::Cover(c) => commands::cover(c, &input),
            Group::Product(c) => commands::product(c, &input),
            Group::Homology(c) => commands::homology(c, &input),
        }?;
        Ok((input.digest, outcome))
    });
    match result {
        Ok((digest, outcome)) => {
            let mut report = json!({"command": command, "input_sha256": digest});
            if let (Value::Object(r), Value::Object(f)) = (&mut report, outcome.fields) {
                r.extend(f);
            }
            if timing {
                report["timing_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
            }
            println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", json!({"command": command, "error": e.code(), "message": e.to_string()}));
            ExitCode::from(2)
        }
    }
}
