use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use supertwist::cli::{emit_human, emit_machine, load_spec, run_checks, CheckGroup, RunOptions};

#[derive(Parser)]
#[command(version, about = "Exact verification of twist-quantized Lie superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a spec file; exits 0 iff every reported check passes.
    Verify {
        specfile: PathBuf,
        /// all, algebra, cybe, cocycle, hopf, qybe, braid or gauge; repeatable
        /// or comma-separated. Overrides the file's settings.
        #[arg(long = "check", value_name = "GROUP")]
        checks: Vec<String>,
        /// Truncation order in h.
        #[arg(long, value_name = "N")]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        report: Format,
        /// Run downstream checks even if the twist fails its cocycle or counit check.
        #[arg(long)]
        allow_invalid_twist: bool,
        /// Omit wall-clock times, making the output byte-for-byte reproducible.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Machine,
}

/// Exit status for malformed input, distinct from a failed check.
const INPUT_ERROR: u8 = 2;

fn main() -> ExitCode {
    let Command::Verify { specfile, checks, order, report, allow_invalid_twist, no_timing } = Cli::parse().command;
    let spec = match load_spec(&specfile) {
        Ok(spec) => spec,
        Err(e) => {
            eprintln!("error: {}: {e}", specfile.display());
            return ExitCode::from(INPUT_ERROR);
        }
    };
    let checks = if checks.is_empty() {
        None
    } else {
        match CheckGroup::parse_list(&checks) {
            Ok(list) => Some(list),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(INPUT_ERROR);
            }
        }
    };
    let options = RunOptions { checks, order, allow_invalid_twist };
    let result = run_checks(&spec, &options);
    let text = match report {
        Format::Human => emit_human(&result, !no_timing),
        Format::Machine => emit_machine(&result, !no_timing),
    };
    if let Err(e) = std::io::stdout().lock().write_all(text.as_bytes()) {
        eprintln!("error: writing the report: {e}");
        return ExitCode::from(INPUT_ERROR);
    }
    ExitCode::from(result.exit_code() as u8)
}
