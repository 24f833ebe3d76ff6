//! The golden suite: a bundled manifest of expected facts, each recomputed
//! from scratch and compared by exact equality.

use nsring_core::NumericalSemigroup;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::facts::evaluate;

pub const BUNDLED_MANIFEST: &str = include_str!("../data/paper_check.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Paper,
    Derived,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct Manifest {
    pub cases: Vec<Case>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct Case {
    pub id: String,
    pub generators: Vec<u64>,
    pub facts: Vec<Fact>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct Fact {
    pub field: String,
    pub expected: Value,
    pub provenance: Provenance,
    /// A published claim known to disagree with the computation; a mismatch
    /// is reported but does not fail the suite.
    #[serde(default)]
    pub informational: bool,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    InformationalDiscrepancy,
    Fail,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::InformationalDiscrepancy => "informational-discrepancy",
            Status::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactResult {
    pub field: String,
    pub expected: Value,
    pub computed: Value,
    pub provenance: Provenance,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub generators: Vec<i64>,
    pub status: Status,
    pub facts: Vec<FactResult>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub pass: usize,
    #[serde(rename = "informational-discrepancy")]
    pub informational_discrepancy: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }
}

pub fn bundled_manifest() -> Manifest {
    serde_json::from_str(BUNDLED_MANIFEST).expect("bundled manifest is valid")
}

/// Whether `filter` selects the case: an exact id, or the id's family
/// prefix before `[` (so `Ex2.7` selects every `Ex2.7[...]` instance).
pub fn selects(filter: &str, id: &str) -> bool {
    id == filter || id.split('[').next() == Some(filter)
}

pub fn run_case(case: &Case) -> CaseResult {
    let h = NumericalSemigroup::new(&case.generators);
    let facts: Vec<FactResult> =
        case.facts
            .iter()
            .map(|fact| {
                let computed = match &h {
                    Ok(h) => evaluate(h, &fact.field)
                        .unwrap_or_else(|e| Value::from(format!("error: {e}"))),
                    Err(e) => Value::from(format!("error: {e}")),
                };
                let status = if computed == fact.expected {
                    Status::Pass
                } else if fact.informational {
                    Status::InformationalDiscrepancy
                } else {
                    Status::Fail
                };
                FactResult {
                    field: fact.field.clone(),
                    expected: fact.expected.clone(),
                    computed,
                    provenance: fact.provenance,
                    status,
                    note: fact.note.clone(),
                }
            })
            .collect();
    CaseResult {
        id: case.id.clone(),
        generators: h
            .map(|h| h.minimal_generators().to_vec())
            .unwrap_or_default(),
        status: facts.iter().map(|f| f.status).max().unwrap_or(Status::Pass),
        facts,
    }
}

pub fn run(manifest: &Manifest, only: Option<&str>) -> SuiteResult {
    let cases: Vec<CaseResult> = manifest
        .cases
        .iter()
        .filter(|c| only.is_none_or(|f| selects(f, &c.id)))
        .map(run_case)
        .collect();
    let mut summary = Summary {
        cases: cases.len(),
        ..Summary::default()
    };
    for c in &cases {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::InformationalDiscrepancy => summary.informational_discrepancy += 1,
            Status::Fail => summary.fail += 1,
        }
    }
    SuiteResult { cases, summary }
}
