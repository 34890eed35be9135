//! Generators and checkers that turn the perimeter bound and its supporting
//! lemmas into per-body margin reports.
//!
//! Margins are signed so that a nonnegative value means the inequality
//! holds; a check passes when its worst margin is at least `-tolerance`.
//! The equality check is the exception and is documented there.

mod checks;
mod generate;
mod suite;

pub use checks::*;
pub use generate::{
    derive_seed, fixture_names, gen_tangential, generate, named_fixture, GeneratorConfig,
    GeneratorKind,
};
pub use suite::{run_check, run_suite, suite_bodies, SuiteBody, SUITES};

/// Outcome of one check on one body.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub check: String,
    pub body: String,
    pub t_values: Vec<f64>,
    pub margins: Vec<f64>,
    pub passed: bool,
    pub worst_margin: f64,
    pub tolerance: f64,
    /// Too few samples, or a margin inside the dead band of the equality test.
    pub inconclusive: bool,
    pub note: Option<String>,
}

impl VerificationReport {
    pub(crate) fn new(check: &str, body: &str, t_values: Vec<f64>, margins: Vec<f64>, tolerance: f64) -> Self {
        let worst_margin = margins.iter().copied().fold(f64::INFINITY, f64::min);
        let passed = margins.iter().all(|m| *m >= -tolerance);
        Self {
            check: check.to_string(),
            body: body.to_string(),
            t_values,
            margins,
            passed,
            worst_margin,
            tolerance,
            inconclusive: false,
            note: None,
        }
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}
