//! Verification records and machine-readable reports.
//!
//! Every verification routine in the crate produces [`Check`]s: a named
//! assertion with a source tag (`paper_ref`), a pass/fail/inconclusive
//! status, and a witness string that makes the outcome auditable (the value
//! that was compared, the certificate margin, the first violated identity,
//! …). Checks accumulate in a [`VerificationRecord`] inside a module, and
//! the CLI wraps them in a [`VerificationReport`] with the invoking command,
//! its inputs, and wall-clock timing.
//!
//! JSON output is deliberately boring: keys sorted (serde_json's default
//! `BTreeMap` object), checks in execution order, so two runs with the same
//! configuration are byte-identical up to the `*_ms` timing fields.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use serde::Serialize;

/// Source tag for checks that exercise crate plumbing rather than a
/// documented mathematical statement.
pub const PLUMBING: &str = "plumbing";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

/// One verified (or failed, or undecided) assertion.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_ref: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub duration_ms: u128,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// An ordered bundle of checks produced by one verification routine.
#[derive(Debug, Clone, Default)]
pub struct VerificationRecord {
    pub checks: Vec<Check>,
}

impl VerificationRecord {
    pub fn new() -> Self {
        VerificationRecord { checks: Vec::new() }
    }

    /// Records a boolean check (duration 0; use [`timed`](Self::timed) when
    /// the computation is worth clocking).
    pub fn record(
        &mut self,
        name: impl Into<String>,
        paper_ref: impl Into<String>,
        ok: bool,
        witness: impl Into<String>,
    ) {
        self.push_status(
            name,
            paper_ref,
            if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            witness,
        );
    }

    pub fn push_status(
        &mut self,
        name: impl Into<String>,
        paper_ref: impl Into<String>,
        status: CheckStatus,
        witness: impl Into<String>,
    ) {
        let witness = witness.into();
        self.checks.push(Check {
            name: name.into(),
            paper_ref: paper_ref.into(),
            status,
            witness: if witness.is_empty() { None } else { Some(witness) },
            duration_ms: 0,
        });
    }

    /// Runs a closure, timing it, and records the `(ok, witness)` it returns.
    pub fn timed(
        &mut self,
        name: impl Into<String>,
        paper_ref: impl Into<String>,
        f: impl FnOnce() -> (bool, String),
    ) {
        let start = Instant::now();
        let (ok, witness) = f();
        self.record(name, paper_ref, ok, witness);
        self.checks.last_mut().unwrap().duration_ms = start.elapsed().as_millis();
    }

    pub fn extend(&mut self, other: VerificationRecord) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail)
    }

    /// Aggregate status: fail beats inconclusive beats pass.
    pub fn status(&self) -> CheckStatus {
        if self.checks.iter().any(|c| c.status == CheckStatus::Fail) {
            CheckStatus::Fail
        } else if self.checks.iter().any(|c| c.status == CheckStatus::Inconclusive) {
            CheckStatus::Inconclusive
        } else {
            CheckStatus::Pass
        }
    }
}

/// A full report: what was run, on which inputs, and every check outcome.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub command: String,
    pub inputs: serde_json::Value,
    pub commands_run: Vec<String>,
    pub checks: Vec<Check>,
    pub overall: CheckStatus,
    pub timing_ms: u128,
}

impl VerificationReport {
    pub fn new(command: impl Into<String>, inputs: serde_json::Value) -> Self {
        let command = command.into();
        VerificationReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            commands_run: vec![command.clone()],
            command,
            inputs,
            checks: Vec::new(),
            overall: CheckStatus::Pass,
            timing_ms: 0,
        }
    }

    pub fn absorb(&mut self, record: VerificationRecord) {
        self.checks.extend(record.checks);
        self.overall = self.status();
    }

    /// Aggregate status over all checks (fail > inconclusive > pass).
    pub fn status(&self) -> CheckStatus {
        let rec = VerificationRecord { checks: self.checks.clone() };
        rec.status()
    }

    /// Process exit code: 0 pass, 1 fail, 2 inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self.status() {
            CheckStatus::Pass => 0,
            CheckStatus::Fail => 1,
            CheckStatus::Inconclusive => 2,
        }
    }

    /// Stable JSON: keys sorted, checks in execution order.
    pub fn to_json(&self) -> String {
        let mut report = self.clone();
        report.overall = report.status();
        // Route through `Value` so object keys come out sorted.
        let value = serde_json::to_value(&report).expect("report serialization");
        serde_json::to_string_pretty(&value).expect("report serialization")
    }

    /// Human-readable table, one line per check plus a summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if self.inputs != serde_json::Value::Null {
            out.push_str(&format!("inputs: {}\n", self.inputs));
        }
        for c in &self.checks {
            out.push_str(&format!("  [{}] {} ({})", c.status, c.name, c.paper_ref));
            if let Some(w) = &c.witness {
                out.push_str(&format!(" — {w}"));
            }
            out.push('\n');
        }
        let (mut pass, mut fail, mut inconclusive) = (0, 0, 0);
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => pass += 1,
                CheckStatus::Fail => fail += 1,
                CheckStatus::Inconclusive => inconclusive += 1,
            }
        }
        out.push_str(&format!(
            "{} checks: {pass} passed, {fail} failed, {inconclusive} inconclusive — overall {}\n",
            self.checks.len(),
            self.status()
        ));
        out
    }

    /// Writes the JSON form to `path`.
    pub fn write_json(&self, path: &std::path::Path) -> std::io::Result<()> {
        let mut file = std::fs::File::create(path)?;
        file.write_all(self.to_json().as_bytes())?;
        file.write_all(b"\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut report = VerificationReport::new("demo", serde_json::json!({"k": 3}));
        let mut rec = VerificationRecord::new();
        rec.record("first", "plumbing", true, "ok");
        rec.record("second", "Eq. (1)", true, "");
        report.absorb(rec);
        report
    }

    #[test]
    fn aggregate_status_ordering() {
        let mut rec = VerificationRecord::new();
        rec.record("a", PLUMBING, true, "");
        assert_eq!(rec.status(), CheckStatus::Pass);
        rec.push_status("b", PLUMBING, CheckStatus::Inconclusive, "depth");
        assert_eq!(rec.status(), CheckStatus::Inconclusive);
        rec.record("c", PLUMBING, false, "boom");
        assert_eq!(rec.status(), CheckStatus::Fail);
        assert_eq!(rec.first_failure().unwrap().name, "c");
    }

    #[test]
    fn json_keys_sorted_and_checks_ordered() {
        let json = sample().to_json();
        // Object keys are alphabetical: "checks" before "command" before
        // "commands_run" etc.
        let checks_pos = json.find("\"checks\"").unwrap();
        let command_pos = json.find("\"command\"").unwrap();
        assert!(checks_pos < command_pos);
        // Execution order preserved inside the array.
        assert!(json.find("first").unwrap() < json.find("second").unwrap());
        // Empty witness omitted.
        assert_eq!(json.matches("witness").count(), 1);
    }

    #[test]
    fn exit_codes_follow_contract() {
        let mut report = sample();
        assert_eq!(report.exit_code(), 0);
        report.checks[0].status = CheckStatus::Inconclusive;
        assert_eq!(report.exit_code(), 2);
        report.checks[1].status = CheckStatus::Fail;
        assert_eq!(report.exit_code(), 1);
    }

    #[test]
    fn text_form_counts() {
        let text = sample().to_text();
        assert!(text.contains("2 checks: 2 passed, 0 failed, 0 inconclusive"));
        assert!(text.contains("overall pass"));
    }
}
