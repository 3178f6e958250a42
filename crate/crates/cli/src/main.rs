//! Command-line front end: reads a monomial ideal, dispatches one exact
//! computation, and prints the answer as text, JSON, or SVG.

mod plot;

use clap::{Args, Parser, Subcommand};
use newtide::{
    integral_closure, lct, multiplier_ideal, parse_ideal, parse_rat, rat_to_json,
    threshold_search, verify_ideal, Error, MonomialIdeal, NewtonPolyhedron,
};
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_PARSE: u8 = 2;
const EXIT_ZERO_IDEAL: u8 = 3;
const EXIT_VERIFY_DIFF: u8 = 4;

#[derive(Parser)]
#[command(
    name = "newtide",
    version,
    about = "Exact Newton-polyhedron computations for monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct IdealArgs {
    /// Ideal, e.g. "x^8, y^6" or "x1^2*x4, x3" (omit to read from stdin)
    ideal: Option<String>,
    /// Read the ideal from this file instead
    #[arg(long, conflicts_with = "ideal")]
    file: Option<PathBuf>,
    /// Number of variables (default: highest index used)
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Irredundant facets and vertices of the Newton polyhedron, as JSON
    Facets {
        #[command(flatten)]
        ideal: IdealArgs,
    },
    /// Minimal generators of the multiplier ideal at coefficient r
    Mult {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Coefficient r > 0, an exact rational like 1, 2/3, 7/24
        #[arg(short = 'r', long = "coeff")]
        coeff: String,
        /// Emit the ideal as JSON instead of a generator list
        #[arg(long)]
        json: bool,
        /// Cross-check against the LP oracle first; any diff aborts
        #[arg(long)]
        verify: bool,
    },
    /// Log canonical threshold, remoteness, and witness facet, as JSON
    Lct {
        #[command(flatten)]
        ideal: IdealArgs,
    },
    /// Minimal generators of the integral closure
    Closure {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Emit the ideal as JSON instead of a generator list
        #[arg(long)]
        json: bool,
    },
    /// SVG picture of a two-variable Newton polygon
    Plot2d {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Write the SVG here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a per-lattice-point classification table
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Enumerate small ideals by log canonical threshold, as JSON lines
    Search {
        /// Number of variables
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Largest exponent allowed in a generator
        #[arg(long = "max-exp", default_value_t = 4)]
        max_exp: u64,
        /// Largest number of minimal generators
        #[arg(long = "max-gens", default_value_t = 3)]
        max_gens: usize,
        /// Worker threads (0 = one per CPU)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Compare the facet path against the LP oracle on a box of points
    Verify {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Coefficient r > 0 to verify at
        #[arg(short = 'r', long = "coeff", default_value = "1")]
        coeff: String,
    },
}

/// A failed run: message for stderr plus the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: String) -> Self {
        Failure {
            code: EXIT_PARSE,
            message,
        }
    }

    fn io(message: String) -> Self {
        Failure { code: 1, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ZeroIdeal | Error::EmptyGenerators => EXIT_ZERO_IDEAL,
            _ => EXIT_PARSE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load_ideal(src: &IdealArgs) -> Result<MonomialIdeal, Failure> {
    let text = if let Some(inline) = &src.ideal {
        inline.clone()
    } else if let Some(path) = &src.file {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))?
    } else {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::parse(format!("cannot read standard input: {e}")))?;
        buf
    };
    let text = text.trim();
    if text.starts_with('{') {
        let ideal: MonomialIdeal = serde_json::from_str(text)
            .map_err(|e| Failure::parse(format!("invalid ideal JSON: {e}")))?;
        if let Some(v) = src.vars {
            if v != ideal.dim() {
                return Err(Failure::parse(format!(
                    "--vars {v} conflicts with nvars {} in the JSON input",
                    ideal.dim()
                )));
            }
        }
        Ok(ideal)
    } else {
        Ok(parse_ideal(text, src.vars)?)
    }
}

fn emit_ideal(ideal: &MonomialIdeal, json: bool) -> Result<(), Failure> {
    if json {
        let doc = serde_json::to_string(ideal)
            .map_err(|e| Failure::io(format!("cannot serialize: {e}")))?;
        println!("{doc}");
    } else {
        println!("{ideal}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.cmd {
        Cmd::Facets { ideal } => {
            let ideal = load_ideal(&ideal)?;
            let poly = NewtonPolyhedron::from_ideal(&ideal)?;
            let vertices: Vec<Vec<serde_json::Value>> = poly
                .vertices()
                .iter()
                .map(|v| v.coords().iter().map(rat_to_json).collect())
                .collect();
            let doc = serde_json::json!({
                "facets": poly.facets(),
                "vertices": vertices,
            });
            println!("{doc}");
        }
        Cmd::Mult {
            ideal,
            coeff,
            json,
            verify,
        } => {
            let ideal = load_ideal(&ideal)?;
            let r = parse_rat(&coeff)?;
            if verify {
                let report = verify_ideal(&ideal, &r)?;
                if !report.is_clean() {
                    eprint!("{report}");
                    return Ok(ExitCode::from(EXIT_VERIFY_DIFF));
                }
            }
            emit_ideal(&multiplier_ideal(&ideal, &r)?, json)?;
        }
        Cmd::Lct { ideal } => {
            let ideal = load_ideal(&ideal)?;
            let result = lct(&ideal)?;
            let doc = serde_json::to_string(&result)
                .map_err(|e| Failure::io(format!("cannot serialize: {e}")))?;
            println!("{doc}");
        }
        Cmd::Closure { ideal, json } => {
            let ideal = load_ideal(&ideal)?;
            emit_ideal(&integral_closure(&ideal)?, json)?;
        }
        Cmd::Plot2d { ideal, out, csv } => {
            let ideal = load_ideal(&ideal)?;
            if ideal.dim() != 2 {
                return Err(Failure::parse(format!(
                    "plot2d draws two-variable ideals only, got {} variables",
                    ideal.dim()
                )));
            }
            if ideal.coordinate_maxima().iter().any(|&m| m > plot::MAX_EXTENT) {
                return Err(Failure::parse(format!(
                    "exponents above {} do not fit a legible plot",
                    plot::MAX_EXTENT
                )));
            }
            let poly = NewtonPolyhedron::from_ideal(&ideal)?;
            let svg = plot::render_svg(&ideal, &poly)?;
            match out {
                Some(path) => std::fs::write(&path, svg)
                    .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{svg}"),
            }
            if let Some(path) = csv {
                let table = plot::render_csv(&ideal, &poly)?;
                std::fs::write(&path, table)
                    .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display())))?;
            }
        }
        Cmd::Search {
            dim,
            max_exp,
            max_gens,
            jobs,
        } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Failure::io(format!("cannot start worker pool: {e}")))?;
            let records = pool.install(|| threshold_search(dim, max_exp, max_gens))?;
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for rec in &records {
                let line = serde_json::to_string(rec)
                    .map_err(|e| Failure::io(format!("cannot serialize: {e}")))?;
                writeln!(out, "{line}").map_err(|e| Failure::io(e.to_string()))?;
            }
        }
        Cmd::Verify { ideal, coeff } => {
            let ideal = load_ideal(&ideal)?;
            let r = parse_rat(&coeff)?;
            let report = verify_ideal(&ideal, &r)?;
            if !report.is_clean() {
                print!("{report}");
                return Ok(ExitCode::from(EXIT_VERIFY_DIFF));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_errors_map_to_documented_exit_codes() {
        assert_eq!(Failure::from(Error::ZeroIdeal).code, EXIT_ZERO_IDEAL);
        assert_eq!(Failure::from(Error::EmptyGenerators).code, EXIT_ZERO_IDEAL);
        assert_eq!(
            Failure::from(Error::Parse("bad".into())).code,
            EXIT_PARSE
        );
        assert_eq!(
            Failure::from(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
            .code,
            EXIT_PARSE
        );
    }
}
