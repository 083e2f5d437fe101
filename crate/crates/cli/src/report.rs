//! Verification reports.
//!
//! JSON schema (version 1), one object per check:
//!
//! ```json
//! {"schema_version":1,"check":"conj-sum","params":{"n_max":20,"n_min":1},
//!  "status":"fail","counterexample":{"at":{"n":7},"detail":"..."},"elapsed_ms":3}
//! ```
//!
//! `counterexample` is present exactly when `status` is `"fail"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Parameter values at which the check first failed.
    pub at: BTreeMap<String, u64>,
    pub detail: String,
}

impl Counterexample {
    pub fn new<'a>(at: impl IntoIterator<Item = (&'a str, u64)>, detail: impl Into<String>) -> Self {
        Self {
            at: at.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawReport")]
pub struct VerificationReport {
    pub schema_version: u32,
    pub check: String,
    pub params: BTreeMap<String, u64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    /// Status follows from whether a counterexample was found.
    pub fn new(
        check: impl Into<String>,
        params: BTreeMap<String, u64>,
        counterexample: Option<Counterexample>,
        elapsed_ms: u64,
    ) -> Self {
        let status = if counterexample.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        Self {
            schema_version: SCHEMA_VERSION,
            check: check.into(),
            params,
            status,
            counterexample,
            elapsed_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `name=lo..hi` style summary of the parameter range, e.g. `n=1..8`.
    pub fn range_label(&self) -> String {
        let mut parts = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for key in self.params.keys() {
            let base = key.trim_end_matches("_min").trim_end_matches("_max");
            if !seen.insert(base.to_string()) {
                continue;
            }
            let lo = self.params.get(&format!("{base}_min"));
            let hi = self.params.get(&format!("{base}_max"));
            match (lo, hi) {
                (Some(lo), Some(hi)) => parts.push(format!("{base}={lo}..{hi}")),
                _ => parts.push(format!("{key}={}", self.params[key])),
            }
        }
        parts.join(" ")
    }
}

#[derive(Deserialize)]
struct RawReport {
    schema_version: u32,
    check: String,
    params: BTreeMap<String, u64>,
    status: Status,
    #[serde(default)]
    counterexample: Option<Counterexample>,
    elapsed_ms: u64,
}

impl TryFrom<RawReport> for VerificationReport {
    type Error = String;

    fn try_from(raw: RawReport) -> Result<Self, Self::Error> {
        if raw.schema_version != SCHEMA_VERSION {
            return Err(format!("unsupported schema_version {}", raw.schema_version));
        }
        match (raw.status, &raw.counterexample) {
            (Status::Fail, None) => return Err("failed report without a counterexample".into()),
            (Status::Pass, Some(_)) => return Err("passing report with a counterexample".into()),
            _ => {}
        }
        Ok(Self {
            schema_version: raw.schema_version,
            check: raw.check,
            params: raw.params,
            status: raw.status,
            counterexample: raw.counterexample,
            elapsed_ms: raw.elapsed_ms,
        })
    }
}
