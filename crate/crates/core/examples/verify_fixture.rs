//! Loads a spec file (default: the h_psi fixture) and prints the human report.
//!
//! cargo run --example verify_fixture -- crates/core/fixtures/gl11.toml

use supertwist::cli::{emit_human, load_spec, run_checks, RunOptions};

fn main() -> supertwist::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/h_psi.toml").into());
    let spec = load_spec(&path)?;
    let report = run_checks(&spec, &RunOptions::default());
    print!("{}", emit_human(&report, true));
    std::process::exit(report.exit_code());
}
