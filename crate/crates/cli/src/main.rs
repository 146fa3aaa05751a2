//! `sumset`: group construction, atoms, classification, sweeps and the
//! constructed examples from the command line.

mod commands;
mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sumset_atoms::group::DEFAULT_MAX_ORDER;
use sumset_atoms::oracle::DEFAULT_ORACLE_CAP;
use sumset_atoms::report::Format;
use sumset_atoms::sumset::DEFAULT_ATOM_CAP;

/// Exit statuses.
pub mod code {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 1;
    pub const ORACLE_MISMATCH: u8 = 2;
    pub const PRECONDITION: u8 = 3;
    pub const VIOLATION: u8 = 4;
}

#[derive(Parser, Debug)]
#[command(name = "sumset", version, about = "Atoms, small sumsets and the two-coset examples in finite groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    pub format: OutputFormat,
    /// Worker threads for parallel loops (defaults to the available cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// Seed for sampled instances; recorded in every report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest group order accepted from any source.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER, value_parser = positive)]
    pub max_group_order: usize,
    /// Largest group order handed to the exhaustive oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_CAP, value_parser = positive)]
    pub oracle_cap: usize,
    /// Most atoms listed in a report.
    #[arg(long, global = true, default_value_t = DEFAULT_ATOM_CAP, value_parser = positive)]
    pub atom_cap: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Human,
    Machine,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Human => Format::Human,
            OutputFormat::Machine => Format::Machine,
        }
    }
}

/// Exactly one way of naming a group.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GroupSource {
    /// Cyclic group of order N.
    #[arg(long, value_name = "N")]
    pub cyclic: Option<usize>,
    /// Dihedral group of order 2M.
    #[arg(long, value_name = "M")]
    pub dihedral: Option<usize>,
    /// Z/p ⋊ Z/q with q | p - 1.
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    pub semidirect: Option<Vec<usize>>,
    /// Direct product by name, e.g. C2xD4, C4xC4 or C7:C3xC2.
    #[arg(long, value_name = "NAME")]
    pub product: Option<String>,
    /// Group table file.
    #[arg(long, value_name = "PATH")]
    pub file: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build or load a group and print its subgroup census.
    Group {
        #[command(flatten)]
        source: GroupSource,
        /// Write the table in group table format to PATH.
        #[arg(long, value_name = "PATH")]
        dump: Option<std::path::PathBuf>,
    },
    /// Isoperimetric number and k-atoms of a set.
    Atoms {
        #[command(flatten)]
        source: GroupSource,
        /// Element indices, e.g. "0 1 2".
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Cross-check against exhaustive enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide which case of the structure theorem a set falls in.
    Classify {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, required_unless_present = "example", conflicts_with = "example")]
        set: Option<String>,
        /// Use the constructed set of the semidirect group.
        #[arg(long, requires = "semidirect")]
        example: bool,
    },
    /// Exhaustive sweep of one suite over the builtin catalog.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: sumset_atoms::verify::Suite,
        #[arg(long, value_parser = positive)]
        max_order: Option<usize>,
        /// Constructed family for the two-coset suite.
        #[arg(long, value_parser = parse_family)]
        family: Option<sumset_atoms::verify::Family>,
        /// Bound on p for the constructed families.
        #[arg(long, value_parser = positive)]
        limit: Option<usize>,
        /// Random instances for the oracle and intersection suites.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_parser = positive)]
        sample_order: Option<usize>,
        /// Constructed examples above this order get the linkage check only.
        #[arg(long, value_parser = positive)]
        theorem_order: Option<usize>,
    },
    /// Build, verify and classify the constructed example for (p, q).
    Example {
        p: usize,
        q: usize,
        /// Write the group table to PATH.
        #[arg(long, value_name = "PATH")]
        dump_table: Option<std::path::PathBuf>,
    },
    /// Table of p = 2q + 1 with p and q prime.
    Scan {
        #[arg(long, default_value_t = 100, value_parser = positive)]
        limit: usize,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_suite(s: &str) -> Result<sumset_atoms::verify::Suite, String> {
    s.parse().map_err(|e: sumset_atoms::VerifyError| e.to_string())
}

fn parse_family(s: &str) -> Result<sumset_atoms::verify::Family, String> {
    s.parse().map_err(|e: sumset_atoms::VerifyError| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors are input errors; help and version are not.
            return ExitCode::from(if e.use_stderr() { code::INPUT } else { code::OK });
        }
    };
    let format = Format::from(cli.global.format);
    match commands::run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.report.render(format));
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
