use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use eala::counterexample::section::default_fixture_path;
use eala::counterexample::solve_section_escalating;
use eala::verify::suite::{all_passed, SECTION_SEARCH_LIMIT};
use eala::verify::{emit_report, parse_selection, run_suite, ReportFormat, SuiteConfig};

/// Exact verification of the quaternion-torus EALA and its non-standard MAD.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// Suites to run: torus, matrix, form, cocycle, jacobi, section,
    /// spectrum, lemmas, probe, or all.
    #[arg(required_unless_present = "regenerate_section_fixture")]
    suites: Vec<String>,

    /// Degree box radius.
    #[arg(long = "box", default_value_t = 3, allow_negative_numbers = true)]
    box_radius: i32,

    /// Random samples per randomized check.
    #[arg(long, default_value_t = 1000)]
    samples: u64,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Write reports here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,

    #[arg(long, default_value = "text")]
    format: ReportFormat,

    /// Record wall-clock durations in reports (makes output run-dependent).
    #[arg(long)]
    timing: bool,

    /// Re-solve for the section and rewrite the fixture file.
    #[arg(long)]
    regenerate_section_fixture: bool,

    /// Fixture path used by --regenerate-section-fixture.
    #[arg(long)]
    fixture_path: Option<PathBuf>,
}

fn regenerate(path: PathBuf) -> ExitCode {
    match solve_section_escalating(0, SECTION_SEARCH_LIMIT) {
        Ok((section, radius)) => match std::fs::write(&path, section.to_fixture(radius)) {
            Ok(()) => {
                eprintln!("wrote {} (radius {radius})", path.display());
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.regenerate_section_fixture {
        let path = args.fixture_path.unwrap_or_else(|| default_fixture_path().to_path_buf());
        let code = regenerate(path);
        if args.suites.is_empty() || code != ExitCode::SUCCESS {
            return code;
        }
    }
    let config =
        SuiteConfig { box_radius: args.box_radius, samples: args.samples, seed: args.seed, record_timing: args.timing };
    let reports = match parse_selection(&args.suites).and_then(|s| run_suite(&config, &s)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit_report(&reports, args.format, args.report.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if all_passed(&reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
