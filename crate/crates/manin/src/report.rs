//! Structured pass/fail reports.
//!
//! A [`CheckReport`] is a flat list of named clauses, each with a pass flag
//! and an optional witness string describing the failing (or noteworthy)
//! data. The overall verdict is the conjunction of the clauses; it is never
//! stored, so it cannot drift out of sync with the clause list.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Clause {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CheckReport {
    pub clauses: Vec<Clause>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { clauses: Vec::new() }
    }

    pub fn verdict(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.clauses.push(Clause { name: name.into(), pass: true, witness: None });
    }

    pub fn pass_note(&mut self, name: impl Into<String>, note: impl Into<String>) {
        self.clauses.push(Clause { name: name.into(), pass: true, witness: Some(note.into()) });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.clauses.push(Clause { name: name.into(), pass: false, witness: Some(witness.into()) });
    }

    pub fn record(
        &mut self,
        name: impl Into<String>,
        ok: bool,
        witness_if_fail: impl FnOnce() -> String,
    ) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness_if_fail());
        }
    }

    /// Absorb `sub`, prefixing every clause name with `prefix/`.
    pub fn merge(&mut self, prefix: &str, sub: CheckReport) {
        for c in sub.clauses {
            self.clauses.push(Clause {
                name: format!("{prefix}/{}", c.name),
                pass: c.pass,
                witness: c.witness,
            });
        }
    }

    /// First failing clause, if any.
    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.pass)
    }

    /// Clause lookup by exact name.
    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    /// Human-readable multi-line rendering (one line per clause).
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.clauses {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("  [{status}] {}", c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  -- {w}"));
            }
            out.push('\n');
        }
        let verdict = if self.verdict() { "PASS" } else { "FAIL" };
        out.push_str(&format!("verdict: {verdict}\n"));
        out
    }
}
