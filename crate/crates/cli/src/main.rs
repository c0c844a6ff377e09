mod args;
mod commands;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tdpair_core::report::VerificationReport;

use args::{Cli, Command, TdsCommand, ZzCommand};
use commands::TrialKind;

/// An invocation that cannot run: bad flags, unreadable or malformed input.
#[derive(Debug)]
pub struct UsageError(pub String);

const SUMMARY_FAILURES: usize = 10;

fn dispatch(cmd: &Command) -> Result<VerificationReport, UsageError> {
    match cmd {
        Command::CheckParams { input, field } => commands::check_params(input, field),
        Command::VerifyAppendix(a) => commands::trials(a, TrialKind::Relations),
        Command::MuCertificate(a) => commands::trials(a, TrialKind::Mu),
        Command::Shape(a) => commands::trials(a, TrialKind::Shape),
        Command::Zz(ZzCommand::Enumerate(a)) => commands::zz_enumerate(a),
        Command::Zz(ZzCommand::Rank(a)) => commands::trials(a, TrialKind::Rank),
        Command::Convex { d } => Ok(commands::convex(*d)),
        Command::Tds(TdsCommand::Roundtrip(a)) => commands::roundtrip(a),
    }
}

fn summarize(r: &VerificationReport) {
    let failed: Vec<_> = r.failures().collect();
    eprintln!(
        "{}: {} checks over {} trial(s), {} failed; overall {}",
        r.command,
        r.checks.len(),
        r.trials,
        failed.len(),
        if r.overall { "PASS" } else { "FAIL" }
    );
    for c in failed.iter().take(SUMMARY_FAILURES) {
        eprintln!("  FAIL {}: {}", c.id, c.detail);
    }
    if failed.len() > SUMMARY_FAILURES {
        eprintln!("  ... {} more", failed.len() - SUMMARY_FAILURES);
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let report = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let mut json = serde_json::to_string_pretty(&report).expect("reports serialize");
    json.push('\n');
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &json).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(json.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    summarize(&report);
    if report.overall { ExitCode::SUCCESS } else { ExitCode::from(1) }
}
