use serde::Serialize;

/// Outcome of one registered check.
#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub check: String,
    pub anchor: String,
    pub status: Status,
    /// The extremal residual observed (worst violation for upper bounds,
    /// smallest margin for lower bounds).
    pub residual: f64,
    pub threshold: f64,
    pub bound: BoundKind,
    pub samples: usize,
    /// Wall time is printed to the console but kept out of the serialized
    /// report so identical configurations produce byte-identical files.
    #[serde(skip)]
    pub wall_ms: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Whether the residual must stay below the threshold or exceed it
/// (negative controls).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Upper,
    Lower,
}

impl ReportEntry {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn to_jsonl(entries: &[ReportEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&serde_json::to_string(e).expect("report serializes"));
        out.push('\n');
    }
    out
}
