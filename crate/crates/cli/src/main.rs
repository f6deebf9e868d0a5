//! `rootlat`: command-line front end for root lattice computations.

mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rootlat_core::vector::parse_rational;
use rootlat_core::{parse_lattice_spec, Error};

#[derive(Parser, Debug)]
#[command(name = "rootlat", version)]
#[command(about = "Exact computations on negative-definite ADE root lattices")]
#[command(after_help = "EXAMPLES:
    rootlat disc D6
    rootlat shortvec A8 --k 3
    rootlat reduce A3 --vector \"-1/2,0,-1/2\"
    rootlat certify 3*A2 --target -2 --format json
    rootlat verify-paper")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Gram matrix and vertex labels
    Gram { lattice: String },
    /// Discriminant group, generators and their squares per component
    Disc { lattice: String },
    /// k-th smallest nonzero dual vectors and their Weyl orbits
    Shortvec {
        lattice: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Weyl orbit of a dual vector
    Orbit {
        lattice: String,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[arg(long, default_value_t = rootlat_core::weyl::DEFAULT_ORBIT_CAP)]
        cap: usize,
    },
    /// Reflection reduction of a small dual vector
    Reduce {
        lattice: String,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Certify every vector of square -1 or -2 outside the root lattice
    Certify {
        lattice: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-2")]
        target: String,
    },
    /// Reproduce the discriminant and small-vector tables
    VerifyPaper,
}

fn run(cli: Cli) -> Result<(String, u8), Error> {
    let format = cli.format;
    match cli.command {
        Command::Gram { lattice } => {
            let l = parse_lattice_spec(&lattice)?;
            Ok((render::gram(&l, format), 0))
        }
        Command::Disc { lattice } => {
            let l = parse_lattice_spec(&lattice)?;
            Ok((render::disc(&l, format), 0))
        }
        Command::Shortvec { lattice, k } => {
            let l = parse_lattice_spec(&lattice)?;
            let irr = l
                .as_irreducible()
                .ok_or_else(|| Error::NotIrreducible(lattice.clone()))?;
            let report = rootlat_core::small_vectors::kth_smallest(irr, k)?;
            Ok((render::shortvec(&report, format), 0))
        }
        Command::Orbit { lattice, vector, cap } => {
            let l = parse_lattice_spec(&lattice)?;
            let v = rootlat_core::parse::parse_vector_literal(&vector, &l)?;
            let o = rootlat_core::weyl::orbit(&l, &v, cap)?;
            Ok((render::orbit(&l, &o, format), 0))
        }
        Command::Reduce { lattice, vector } => {
            let l = parse_lattice_spec(&lattice)?;
            let irr = l
                .as_irreducible()
                .ok_or_else(|| Error::NotIrreducible(lattice.clone()))?;
            let v = rootlat_core::parse::parse_vector_literal(&vector, &l)?;
            let trace = rootlat_core::reduction::reduce_component(irr, &v)?;
            let verdict = rootlat_core::reduction::verify_trace(irr, &trace);
            Ok((render::trace(irr, &trace, &verdict, format), 0))
        }
        Command::Certify { lattice, target } => {
            let l = parse_lattice_spec(&lattice)?;
            let target = parse_rational(&target)?;
            match rootlat_core::certifier::certify_all(&l, &target) {
                Ok(report) => Ok((render::certify(&report, format), 0)),
                Err(Error::CertificationFailure(report)) => {
                    // the dump goes to stdout in JSON regardless of format
                    Ok((render::certify(&report, Format::Json), 3))
                }
                Err(e) => Err(e),
            }
        }
        Command::VerifyPaper => {
            let report = rootlat_core::tables::verify_all()?;
            let status = if report.all_pass { 0 } else { 1 };
            Ok((render::verification(&report, format), status))
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("ROOTLAT_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // fails only if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    configure_threads();
    match run(cli) {
        Ok((output, status)) => {
            print!("{output}");
            ExitCode::from(status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
