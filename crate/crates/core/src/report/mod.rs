//! Structured pass/fail records with enough provenance to replay a run.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::FieldDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(id: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { id: id.into(), passed, detail: detail.into() }
    }

    pub fn pass(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check::new(id, true, detail)
    }

    pub fn fail(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check::new(id, false, detail)
    }
}

/// Prepends `prefix/` to every check id.
pub fn prefixed(prefix: &str, checks: Vec<Check>) -> impl Iterator<Item = Check> + '_ {
    checks.into_iter().map(move |c| Check { id: format!("{prefix}/{}", c.id), ..c })
}

/// Zero-padded trial tag such as `t07`, so ids sort numerically.
pub fn trial_tag(trial: usize, trials: usize) -> String {
    let width = trials.saturating_sub(1).to_string().len().max(2);
    format!("t{trial:0width$}")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub command: String,
    pub field: FieldDescriptor,
    pub seed: u64,
    pub asset_version: Option<String>,
    pub trials: usize,
    pub checks: Vec<Check>,
    pub overall: bool,
    /// Free-form output lines, e.g. enumerated words.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub items: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MergeError {
    #[error("nothing to merge")]
    Empty,
    #[error("cannot merge reports over different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("cannot merge reports of different commands ({0} vs {1})")]
    CommandMismatch(String, String),
}

impl VerificationReport {
    pub fn new(
        command: impl Into<String>,
        field: FieldDescriptor,
        seed: u64,
        asset_version: Option<String>,
    ) -> Self {
        VerificationReport {
            command: command.into(),
            field,
            seed,
            asset_version,
            trials: 0,
            checks: Vec::new(),
            overall: true,
            items: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.overall &= check.passed;
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    /// Sorts checks by id and recomputes `overall`. Sorting is stable, so
    /// duplicate ids keep insertion order.
    pub fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self.overall = self.checks.iter().all(|c| c.passed);
        self
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Concatenates checks and sums trial counts. All reports must share the
    /// command and field; seed and asset version are taken from the first.
    pub fn merge(reports: Vec<VerificationReport>) -> Result<VerificationReport, MergeError> {
        let mut it = reports.into_iter();
        let mut out = it.next().ok_or(MergeError::Empty)?;
        for r in it {
            if !out.field.same_field(&r.field) {
                return Err(MergeError::FieldMismatch(describe(&out.field), describe(&r.field)));
            }
            if out.command != r.command {
                return Err(MergeError::CommandMismatch(out.command.clone(), r.command));
            }
            out.trials += r.trials;
            out.checks.extend(r.checks);
            out.items.extend(r.items);
        }
        Ok(out.finish())
    }
}

fn describe(f: &FieldDescriptor) -> String {
    match f.prime {
        Some(p) => format!("{} mod {p}", f.kind),
        None => format!("{}", f.kind),
    }
}
