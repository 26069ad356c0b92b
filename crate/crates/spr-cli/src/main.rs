//! spr: stability certification for socle-projective representations of
//! finite type A posets.
//!
//! Verbs parse a poset or quiver file, enumerate the indecomposable objects,
//! certify stability along the bilinear weight route or the polygon angle
//! route, and emit AR quivers (DOT) and polygon diagrams (SVG). `verify`
//! sweeps every connected type A poset and every valid extended quiver up to
//! a point bound. Exit codes: 0 success, 1 validation failure, 2 parse or
//! usage error.

mod input;
mod report;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use spr_core::{AlienViolation, TypeAViolation};

use crate::input::parse_input;
use crate::report::StabilityFlags;

#[derive(Debug)]
pub enum CliError {
    Parse { line: usize, message: String },
    Usage { message: String },
    Validation { message: String },
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage {
            message: message.into(),
        }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        CliError::Validation {
            message: message.into(),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Usage { .. } => 2,
            CliError::Validation { .. } => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { line, message } => write!(f, "line {line}: {message}"),
            CliError::Usage { message } | CliError::Validation { message } => f.write_str(message),
        }
    }
}

pub fn describe_type_a(v: &TypeAViolation) -> String {
    match v {
        TypeAViolation::NotConnected => "the poset is not connected".to_string(),
        TypeAViolation::ThreeUnderOnePeak { peak, points } => format!(
            "points {{{}}} are pairwise incomparable under the single peak {peak}",
            points.join(",")
        ),
        TypeAViolation::ChainUnderTwoPeaks { chain, peaks } => format!(
            "the chain {}<{} lies under the two peaks {},{}",
            chain[0], chain[1], peaks[0], peaks[1]
        ),
        TypeAViolation::OneUnderThreePeaks { point, peaks } => {
            format!(
                "point {point} lies under the three peaks {}",
                peaks.join(",")
            )
        }
        TypeAViolation::Crown { cycle } => format!("crown {}", cycle.join(" ")),
    }
}

pub fn describe_alien(v: &AlienViolation) -> String {
    match v {
        AlienViolation::OutsideSinkBasin { arrow: (s, t) } => {
            format!("arrow {s}->{t} fits in no single sink basin")
        }
        AlienViolation::TargetInteriorSource { arrow: (s, t) } => {
            format!("arrow {s}->{t} targets an interior source")
        }
        AlienViolation::PathNotUnique { arrow: (s, t) } => {
            format!("arrow {s}->{t} is not the unique path between its endpoints")
        }
        AlienViolation::CycleCreated { witness } => {
            let path: Vec<String> = witness.iter().map(ToString::to_string).collect();
            format!("directed cycle {}", path.join("->"))
        }
    }
}

#[derive(Parser)]
#[command(
    name = "spr",
    version,
    about = "Stability of socle-projective representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Bilinear,
    Geometric,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that the input is a type A poset or a valid extended quiver.
    Validate {
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List every indecomposable with its support and dimension vector.
    Indecomposables {
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the proper subspaces of the indecomposable on the given support.
    Subspaces {
        input: PathBuf,
        /// Comma-separated point labels of the support.
        support: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Certify stability of every indecomposable.
    Stability {
        input: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        /// Interior margin for the sincere polygon route (geometric only).
        #[arg(long)]
        m: Option<i64>,
        /// Weight override, comma-separated in point order (bilinear only).
        #[arg(long)]
        theta: Option<String>,
        /// Positive functional switching to the slope route (bilinear only).
        #[arg(long)]
        kappa: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the polygon model: segment classes, or an SVG diagram.
    Polygon {
        input: PathBuf,
        #[arg(long)]
        svg: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the AR quiver of the selected segments.
    ArQuiver {
        input: PathBuf,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sweep all type A posets and extended quivers up to a point bound.
    Verify {
        #[arg(long)]
        max_points: usize,
        /// Worker threads for the sweep.
        #[arg(long, default_value_t = 4)]
        jobs: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    let (report, output) = match cmd {
        Cmd::Validate { input, output } => (report::validate(&read_input(&input)?)?, output),
        Cmd::Indecomposables { input, output } => {
            (report::indecomposables(&read_input(&input)?)?, output)
        }
        Cmd::Subspaces {
            input,
            support,
            output,
        } => (report::subspaces(&read_input(&input)?, &support)?, output),
        Cmd::Stability {
            input,
            method,
            m,
            theta,
            kappa,
            output,
        } => {
            let flags = StabilityFlags {
                method,
                m,
                theta: theta.map(|s| parse_csv("--theta", &s)).transpose()?,
                kappa: kappa.map(|s| parse_csv("--kappa", &s)).transpose()?,
            };
            (report::stability(&read_input(&input)?, &flags)?, output)
        }
        Cmd::Polygon { input, svg, output } => {
            (report::polygon(&read_input(&input)?, svg)?, output)
        }
        Cmd::ArQuiver { input, dot, output } => {
            (report::ar_quiver_report(&read_input(&input)?, dot)?, output)
        }
        Cmd::Verify {
            max_points,
            jobs,
            output,
        } => (report::verify(max_points, jobs)?, output),
    };
    match output {
        None => {
            print!("{report}");
            Ok(())
        }
        Some(path) => fs::write(&path, report)
            .map_err(|e| CliError::validation(format!("cannot write {}: {e}", path.display()))),
    }
}

fn read_input(path: &PathBuf) -> Result<input::Input, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_input(&text)
}

fn parse_csv(name: &str, csv: &str) -> Result<Vec<i64>, CliError> {
    csv.split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| CliError::usage(format!("{name}: `{tok}` is not an integer")))
        })
        .collect()
}
