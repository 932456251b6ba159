//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::AssessError;
use crate::matrix::{load_matrix, DecisionMatrix};
use crate::model::Stage;
use crate::pipeline::{assess, rank_all, AssessmentReport, StageTwo};
use crate::plot::{emit_plot, PlotSpec};
use crate::report::{emit_report, presentation_table};

pub const EXIT_OK: i32 = 0;
/// Invalid matrix, unknown DMU or I/O failure.
pub const EXIT_INPUT: i32 = 1;
/// Solver, numerical or complementary-slackness failure.
pub const EXIT_SOLVER: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "ordvga", version, about = "Rank alternatives on cardinal and Likert criteria by virtual gaps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a matrix file and report its shape.
    Validate { matrix: PathBuf },
    /// Run both stages and print the best DMU.
    Assess {
        matrix: PathBuf,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write one SVG per assessment into this directory.
        #[arg(long)]
        plots: Option<PathBuf>,
    },
    /// Rank DMUs by repeatedly removing the best one.
    Rank {
        matrix: PathBuf,
        #[arg(long)]
        rounds: Option<usize>,
        /// Write the first round's JSON report, with the ranking attached.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Plot one DMU's virtual technology set.
    Plot {
        matrix: PathBuf,
        #[arg(long)]
        dmu: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        stage: u8,
        /// Output SVG file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure(i32, String);

impl From<AssessError> for Failure {
    fn from(e: AssessError) -> Self {
        let code = if matches!(e, AssessError::Matrix(_)) { EXIT_INPUT } else { EXIT_SOLVER };
        Failure(code, e.to_string())
    }
}

fn input_failure(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_INPUT, e.to_string())
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn load(path: &Path) -> Result<DecisionMatrix, Failure> {
    load_matrix(path).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn run(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Validate { matrix } => {
            let m = load(&matrix)?;
            writeln!(out, "valid: {} metrics x {} DMUs", m.n_metrics(), m.n_dmus()).map_err(input_failure)?;
        }
        Command::Assess { matrix, out: report_path, plots } => {
            let m = load(&matrix)?;
            let report = assess(&m)?;
            for line in presentation_table(&report, &m) {
                writeln!(out, "{line}").map_err(input_failure)?;
            }
            if !report.tier_check.consistent {
                writeln!(out, "warning: peer union {} differs from top tier", report.tier_check.peer_union.join(", "))
                    .map_err(input_failure)?;
            }
            writeln!(out, "top tier: {}", report.top_tier.join(", ")).map_err(input_failure)?;
            if report.ties.len() > 1 {
                writeln!(out, "tie: {}", report.ties.join(", ")).map_err(input_failure)?;
            }
            writeln!(out, "best: {}", report.best).map_err(input_failure)?;
            if let Some(p) = report_path {
                emit_report(&report, &m, p).map_err(input_failure)?;
            }
            if let Some(dir) = plots {
                write_plots(&report, &dir)?;
            }
        }
        Command::Rank { matrix, rounds, out: report_path } => {
            let m = load(&matrix)?;
            let ranking = rank_all(&m, rounds)?;
            for r in &ranking {
                writeln!(out, "{}. {}", r.round, r.best).map_err(input_failure)?;
            }
            if let Some(p) = report_path {
                let mut first = ranking[0].report.clone();
                first.ranking = Some(ranking);
                emit_report(&first, &m, p).map_err(input_failure)?;
            }
        }
        Command::Plot { matrix, dmu, stage, out: svg_path } => {
            let m = load(&matrix)?;
            let report = assess(&m)?;
            let stage = if stage == 1 { Stage::BestPractice } else { Stage::Super };
            let result = report.result(&dmu, stage).ok_or_else(|| {
                let why = match (&report.stage2, report.dmu_names.contains(&dmu)) {
                    (_, false) => "unknown DMU",
                    (StageTwo::SoleEfficient { .. }, true) => "no Stage II: the top tier has a single member",
                    _ => "not in the top tier",
                };
                Failure(EXIT_INPUT, format!("{dmu}: {why}"))
            })?;
            let svg = PlotSpec::from_result(result);
            match svg_path {
                Some(p) => emit_plot(&svg, p).map_err(input_failure)?,
                None => out.write_all(svg.to_svg().as_bytes()).map_err(input_failure)?,
            }
        }
    }
    Ok(())
}

fn write_plots(report: &AssessmentReport, dir: &Path) -> Result<(), Failure> {
    std::fs::create_dir_all(dir).map_err(input_failure)?;
    let stage2 = match &report.stage2 {
        StageTwo::Ranked { results } => results.as_slice(),
        StageTwo::SoleEfficient { .. } => &[],
    };
    for (tag, results) in [("stage1", report.stage1.as_slice()), ("stage2", stage2)] {
        for r in results {
            emit_plot(&PlotSpec::from_result(r), dir.join(format!("{tag}-{}.svg", file_stem(&r.dmu)))).map_err(input_failure)?;
        }
    }
    Ok(())
}

/// DMU name with path-hostile characters replaced.
fn file_stem(name: &str) -> String {
    name.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' || c == '.' { c } else { '_' }).collect()
}
