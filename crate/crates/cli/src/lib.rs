//! Command line front end for `chabauty-core`.
//!
//! [`run_cli`] takes the argument vector and two writers and returns the exit
//! code: 0 on success, 1 on a domain error, 2 on a parse or usage error.

pub mod literal;
pub mod plot;

use std::io::Write;
use std::path::PathBuf;

use chabauty_core::rational::parse_rational;
use chabauty_core::{
    chabauty_distance, run_suite, subgroup_to_model, verify_limit, winding_count,
    winding_count_sampled, ClosedSubgroup, Error, Rational,
};
use clap::{Parser, Subcommand};

pub use literal::{format_literal, parse_literal, parse_sequence, LiteralError, ParseError};
pub use plot::render_svg;

#[derive(Parser, Debug)]
#[command(
    name = "chabauty",
    version,
    about = "Closed subgroups of R x Z and their Chabauty space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical literal of the closure.
    Classify { literal: String },
    /// Bracket on the Chabauty distance.
    Dist {
        a: String,
        b: String,
        #[arg(long, value_parser = rational_arg)]
        tol: Rational,
    },
    /// Check that the tail of a sequence file approaches a limit.
    Limit {
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        limit: String,
        #[arg(long, value_parser = rational_arg)]
        tol: Rational,
        #[arg(long)]
        tail: usize,
    },
    /// Model-space coordinate of a subgroup.
    Model { literal: String },
    /// Times the boundary of the cone of index k wraps the earring circle m.
    Wind {
        #[arg(long)]
        cone: u64,
        #[arg(long)]
        circle: u64,
        #[arg(long)]
        sampled: bool,
        #[arg(long, default_value_t = 4096)]
        grid: u64,
        #[arg(long, default_value_t = 64)]
        prec: u64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 100)]
        budget: usize,
    },
    /// Write an SVG schematic of the model space.
    Plot {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 8)]
        circles: u64,
        #[arg(long, default_value_t = 4)]
        cones: u64,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(format!("{}: {e}", e.name()))
    }
}

impl From<LiteralError> for Failure {
    fn from(e: LiteralError) -> Self {
        match e {
            LiteralError::Syntax(p) => Failure::Usage(p.to_string()),
            LiteralError::Domain(e) => e.into(),
        }
    }
}

fn literal_arg(src: &str) -> Result<ClosedSubgroup, Failure> {
    Ok(parse_literal(src)?)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Domain(format!("IoError: {e}"));
    match command {
        Command::Classify { literal } => {
            writeln!(out, "{}", format_literal(&literal_arg(&literal)?)).map_err(io)?;
        }
        Command::Dist { a, b, tol } => {
            let (a, b) = (literal_arg(&a)?, literal_arg(&b)?);
            writeln!(out, "{}", chabauty_distance(&a, &b, &tol)?).map_err(io)?;
        }
        Command::Limit {
            seq,
            limit,
            tol,
            tail,
        } => {
            let text = std::fs::read_to_string(&seq).map_err(io)?;
            let terms = parse_sequence(&text)?;
            let limit = literal_arg(&limit)?;
            let report = verify_limit(&terms, &limit, &tol, tail)?;
            for (i, d) in report.distances.iter().enumerate() {
                writeln!(out, "{} {d}", i + 1).map_err(io)?;
            }
            writeln!(out, "{}", if report.pass { "PASS" } else { "FAIL" }).map_err(io)?;
        }
        Command::Model { literal } => {
            writeln!(out, "{}", subgroup_to_model(&literal_arg(&literal)?)).map_err(io)?;
        }
        Command::Wind {
            cone,
            circle,
            sampled,
            grid,
            prec,
        } => {
            let count = if sampled {
                winding_count_sampled(cone, circle, grid, prec)?
            } else {
                winding_count(cone, circle)
            };
            writeln!(out, "{count}").map_err(io)?;
        }
        Command::Verify {
            suite,
            seed,
            json,
            budget,
        } => {
            let report = run_suite(&suite, seed, budget)?;
            if json {
                writeln!(out, "{}", report.to_json()).map_err(io)?;
            } else {
                writeln!(out, "{report}").map_err(io)?;
            }
        }
        Command::Plot {
            out: path,
            circles,
            cones,
        } => {
            std::fs::write(&path, render_svg(circles, cones)).map_err(io)?;
            writeln!(out, "{}", path.display()).map_err(io)?;
        }
    }
    Ok(())
}

/// Runs one command. `argv[0]` is the program name.
pub fn run_cli<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let _ = write!(err, "{e}");
            return 2;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "{msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "{msg}");
            1
        }
    }
}
