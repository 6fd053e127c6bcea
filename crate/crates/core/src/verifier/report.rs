use std::fmt::Write as _;

use serde_json::{json, Value};

/// Outcome of one check on one group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    /// The hypothesis held and so did the conclusion.
    Checked,
    /// The hypothesis did not hold.
    Vacuous,
    Failed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Checked => "checked",
            Status::Vacuous => "vacuous",
            Status::Failed => "failed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub status: Status,
    /// Canonical exact text of the compared values, when a comparison was made.
    pub lhs: String,
    pub rhs: String,
    pub relation: String,
    /// Six-decimal truncations of `lhs` and `rhs`, for reading only.
    pub approx: Option<(String, String)>,
    pub predicate: String,
}

impl Check {
    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "status": self.status.as_str(),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "approx": self.approx.as_ref().map(|(a, b)| json!([a, b])),
            "predicate": self.predicate,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRecord {
    pub spec: String,
    pub order: u64,
    pub checks: Vec<Check>,
}

impl GroupRecord {
    /// Failed if any check failed, checked if any hypothesis held.
    pub fn status(&self) -> Status {
        let has = |s| self.checks.iter().any(|c| c.status == s);
        if has(Status::Failed) {
            Status::Failed
        } else if has(Status::Checked) {
            Status::Checked
        } else {
            Status::Vacuous
        }
    }

    pub fn comparisons(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| !c.relation.is_empty())
            .count()
    }
}

/// A named statement about specific groups or a closed-form sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub name: String,
    pub holds: bool,
    /// Recorded but not asserted.
    pub informational: bool,
    pub detail: String,
}

impl Witness {
    pub fn asserted(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            holds,
            informational: false,
            detail: detail.into(),
        }
    }

    pub fn informational(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            holds: true,
            informational: true,
            detail: detail.into(),
        }
    }
}

/// Two corpus groups with equal `l` whose order statistics differ, so they
/// are not isomorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anomaly {
    pub spec: String,
    pub dihedral: String,
    pub value: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub groups: usize,
    pub checked: usize,
    pub vacuous: usize,
    pub failed: usize,
    pub comparisons: usize,
    pub witnesses: usize,
    pub witness_failures: usize,
}

pub const REPORT_HEADER: &str = "Statements quantified over all finite groups cannot be verified \
by enumeration. Each suite is a falsification attempt over the corpus described below: a pass \
means no counterexample was found. Every hypothesis is decided by exact comparison; decimals are \
shown only for reading.";

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub description: String,
    pub params: Value,
    pub records: Vec<GroupRecord>,
    pub witnesses: Vec<Witness>,
    pub anomalies: Vec<Anomaly>,
}

impl VerificationReport {
    pub fn summary(&self) -> Summary {
        let mut s = Summary {
            groups: self.records.len(),
            ..Summary::default()
        };
        for r in &self.records {
            match r.status() {
                Status::Checked => s.checked += 1,
                Status::Vacuous => s.vacuous += 1,
                Status::Failed => s.failed += 1,
            }
            s.comparisons += r.comparisons();
        }
        s.witnesses = self.witnesses.len();
        s.witness_failures = self.witnesses.iter().filter(|w| !w.holds).count();
        s
    }

    pub fn passed(&self) -> bool {
        let s = self.summary();
        s.failed == 0 && s.witness_failures == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &GroupRecord> {
        self.records.iter().filter(|r| r.status() == Status::Failed)
    }

    pub fn witness(&self, name: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.name == name)
    }

    pub fn record(&self, spec: &str) -> Option<&GroupRecord> {
        self.records.iter().find(|r| r.spec == spec)
    }

    pub fn to_json(&self) -> Value {
        let s = self.summary();
        json!({
            "suite": self.suite,
            "description": self.description,
            "header": REPORT_HEADER,
            "params": self.params,
            "results": self.records.iter().map(|r| json!({
                "spec": r.spec,
                "order": r.order,
                "status": r.status().as_str(),
                "details": r.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "witnesses": self.witnesses.iter().map(|w| json!({
                "name": w.name,
                "holds": w.holds,
                "informational": w.informational,
                "detail": w.detail,
            })).collect::<Vec<_>>(),
            "equality_anomalies": self.anomalies.iter().map(|a| json!({
                "spec": a.spec,
                "dihedral": a.dihedral,
                "ell": a.value,
            })).collect::<Vec<_>>(),
            "summary": {
                "groups": s.groups,
                "checked": s.checked,
                "vacuous": s.vacuous,
                "failed": s.failed,
                "comparisons": s.comparisons,
                "witnesses": s.witnesses,
                "witness_failures": s.witness_failures,
                "passed": self.passed(),
            },
        })
    }

    /// One row per check: `spec,status,lhs,rhs,predicate`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("spec,status,lhs,rhs,predicate\n");
        for r in &self.records {
            for c in &r.checks {
                let row = [
                    r.spec.as_str(),
                    c.status.as_str(),
                    &c.lhs,
                    &c.rhs,
                    &c.predicate,
                ];
                let cells: Vec<String> = row.iter().map(|s| csv_cell(s)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        out
    }

    /// Summary, failures in full, witnesses and anomalies.  `verbose` lists
    /// every group.
    pub fn to_text(&self, verbose: bool) -> String {
        let s = self.summary();
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        let _ = writeln!(out, "{}", self.description);
        let _ = writeln!(out, "{REPORT_HEADER}");
        let _ = writeln!(out, "params: {}", self.params);
        for r in &self.records {
            let failed = r.status() == Status::Failed;
            if !verbose && !failed {
                continue;
            }
            let _ = writeln!(out, "{:<8} {}", r.status().as_str(), r.spec);
            for c in r
                .checks
                .iter()
                .filter(|c| verbose || c.status == Status::Failed)
            {
                let _ = writeln!(out, "    [{}] {}", c.status.as_str(), c.label);
                if !c.relation.is_empty() {
                    let _ = writeln!(out, "        {} {} {}", c.lhs, c.relation, c.rhs);
                    if let Some((a, b)) = &c.approx {
                        let _ = writeln!(out, "        ~ {a} {} {b}", c.relation);
                    }
                }
                if c.status == Status::Failed {
                    let _ = writeln!(out, "        failed predicate: {}", c.predicate);
                }
            }
        }
        for w in &self.witnesses {
            let tag = match (w.informational, w.holds) {
                (true, _) => "info",
                (false, true) => "ok",
                (false, false) => "FAILED",
            };
            let _ = writeln!(out, "witness [{tag}] {}: {}", w.name, w.detail);
        }
        for a in &self.anomalies {
            let _ = writeln!(
                out,
                "equality anomaly: l({}) = l({}) = {}",
                a.spec, a.dihedral, a.value
            );
        }
        let _ = writeln!(
            out,
            "summary: {} groups, {} checked, {} vacuous, {} failed; {} exact comparisons; {} witnesses, {} failed",
            s.groups, s.checked, s.vacuous, s.failed, s.comparisons, s.witnesses, s.witness_failures
        );
        let _ = writeln!(
            out,
            "result: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
