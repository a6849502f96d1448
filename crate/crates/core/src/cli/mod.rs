//! Command-line front end: argument parsing, report types and rendering.
//! The `lefschetz` binary is a thin wrapper around [`run`].

mod report;

pub use report::{
    analyze, infer_vars, jordan_for_element, loci_rows, parse_element, AnalysisReport, ClassSection, ConeSection,
    LociRow, SlpSection,
};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify::CubicLabel;
use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_HOMOGENEOUS: i32 = 3;
pub const EXIT_UNRECOGNIZED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "lefschetz", version, about = "Apolar algebras, Lefschetz properties and degrees of loci of cubics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Locus {
    Cones,
    VanishingHessian,
    Intersection,
    ConeFormula,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert vector, cone test, Hessian, SLP, Jordan type and class of a form.
    Analyze {
        /// A single form, e.g. "x0*x3^2 + x1*x3*x4 + x2*x4^2".
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        expr: Option<String>,
        /// File with one form per line (`-` for stdin); blank lines and `#` comments are skipped.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Number of variables (default: one more than the largest index used).
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print per-stage timings to stderr.
        #[arg(long)]
        timings: bool,
    },
    /// Dimensions and degrees of loci in the space of cubics.
    Loci {
        #[arg(long, value_enum)]
        which: Locus,
        /// Number of variables minus one, for the cone loci.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Degree of the forms, for the cone loci.
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Jordan type of multiplication by one specific linear form.
    Jordan {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        vars: Option<usize>,
        /// Coefficients of the linear form, e.g. "1,0,-2,1/2,0".
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotHomogeneous | Error::ZeroForm => EXIT_NOT_HOMOGENEOUS,
        Error::RetryCapExhausted { .. } | Error::Inconsistent(_) => EXIT_UNRECOGNIZED,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
fn read_input(path: &std::path::Path) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
}

pub fn run(args: impl IntoIterator<Item = impl Into<OsString> + Clone>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Analyze { expr, input, vars, seed, format, timings } => {
            let from_file = input.is_some();
            let lines: Vec<String> = match (expr, input) {
                (Some(e), _) => vec![e],
                (None, Some(path)) => match read_input(&path) {
                    Ok(text) => text,
                    Err(e) => {
                        let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
                        return Ok(EXIT_USAGE);
                    }
                }
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(String::from)
                .collect(),
                (None, None) => unreachable!("clap requires one of --expr and --input"),
            };
            let mut worst = EXIT_OK;
            let mut reports = Vec::new();
            for line in &lines {
                let start = Instant::now();
                match analyze(line, vars, seed) {
                    Ok(report) => {
                        if timings {
                            let _ = writeln!(err, "{line}: {:.3} s", start.elapsed().as_secs_f64());
                        }
                        if report.class.label == CubicLabel::Unrecognized.as_str() {
                            worst = worst.max(EXIT_UNRECOGNIZED);
                        }
                        reports.push(report);
                    }
                    Err(e) => {
                        let _ = writeln!(err, "error: {line}: {e}");
                        worst = worst.max(exit_code(&e));
                    }
                }
            }
            write_reports(&reports, from_file, format, out);
            Ok(worst)
        }
        Command::Loci { which, n, d, format } => {
            let rows = loci_rows(which, n, d)?;
            match format {
                Format::Json => {
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("rows serialize"));
                }
                Format::Text => {
                    for row in rows {
                        let _ = writeln!(out, "{}\t{}\t{}", row.locus, row.dim, row.degree);
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Jordan { expr, vars, element, format } => {
            let jt = jordan_for_element(&expr, vars, &element)?;
            match format {
                Format::Json => {
                    let _ = writeln!(out, "{}", serde_json::to_string(jt.parts()).expect("parts serialize"));
                }
                Format::Text => {
                    let _ = writeln!(out, "{jt}");
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn write_reports(reports: &[AnalysisReport], batch: bool, format: Format, out: &mut dyn Write) {
    match format {
        Format::Json if batch => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(reports).expect("reports serialize"));
        }
        Format::Json => {
            for r in reports {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(r).expect("report serializes"));
            }
        }
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    let _ = writeln!(out);
                }
                let _ = write!(out, "{}", r.render_text());
            }
        }
    }
}
