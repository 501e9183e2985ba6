//! Spec-file ingestion, check orchestration and report emission.

mod report;
mod run;
mod spec;

pub use report::{emit_human, emit_machine, parse_machine, Record, Report, Tally, Verdict, KERNEL_VERSION, REPORT_SCHEMA_VERSION};
pub use run::{gauge_element, run_checks, RunOptions};
pub use spec::{load_spec, parse_spec, CheckGroup, DirectRMatrix, GaugeTerm, RepresentationSpec, Settings, SpecFile, TwistTerm};
