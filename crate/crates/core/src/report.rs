//! Machine-readable verification outcomes.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::partition::Flavor;

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The tuple does not meet the check's precondition; carries the reason.
    Skipped(String),
}

/// Parameters a check ran under. `a` is absent for checks that do not
/// depend on it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    pub k: i64,
    pub a: Option<i64>,
    pub d: i64,
    pub s: i64,
    pub flavor: Flavor,
    pub trunc_x: usize,
    pub trunc_n: i64,
}

/// First coefficient where the two sides disagree. `m` is the x-exponent
/// (number of parts), `n` the q-exponent (weight). Values are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub m: i64,
    pub n: i64,
    pub lhs: String,
    pub rhs: String,
}

impl Mismatch {
    pub fn new(m: i64, n: i64, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Self {
            m,
            n,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub params: Params,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub runtime_ms: u64,
}

/// What a check body returns; time is attached by [`CheckReport::timed`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Mismatch),
    Skipped(String),
}

impl CheckReport {
    pub fn new(check_id: impl Into<String>, params: Params, outcome: Outcome) -> Self {
        let (status, first_mismatch) = match outcome {
            Outcome::Pass => (Status::Pass, None),
            Outcome::Fail(m) => (Status::Fail, Some(m)),
            Outcome::Skipped(r) => (Status::Skipped(r), None),
        };
        Self {
            check_id: check_id.into(),
            params,
            status,
            first_mismatch,
            runtime_ms: 0,
        }
    }

    /// Runs `body` and records its wall-clock time.
    pub fn timed(check_id: impl Into<String>, params: Params, body: impl FnOnce() -> Outcome) -> Self {
        let start = Instant::now();
        let outcome = body();
        let mut r = Self::new(check_id, params, outcome);
        r.runtime_ms = start.elapsed().as_millis() as u64;
        r
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn skipped(&self) -> bool {
        matches!(self.status, Status::Skipped(_))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        let a = p.a.map_or_else(|| "-".to_string(), |a| a.to_string());
        write!(
            f,
            "{:<40} k={} a={} d={} s={} {:<7} (X,N)=({},{}) ",
            self.check_id, p.k, a, p.d, p.s, p.flavor, p.trunc_x, p.trunc_n
        )?;
        match &self.status {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => {
                write!(f, "FAIL")?;
                if let Some(m) = &self.first_mismatch {
                    write!(f, " at (m, n) = ({}, {}): {} != {}", m.m, m.n, m.lhs, m.rhs)?;
                }
                Ok(())
            }
            Status::Skipped(r) => write!(f, "SKIPPED ({r})"),
        }
    }
}

/// JSON with `runtime_ms` zeroed, for byte-level comparison of runs.
pub fn canonical_json(reports: &[CheckReport]) -> serde_json::Result<String> {
    let stripped: Vec<CheckReport> = reports
        .iter()
        .cloned()
        .map(|mut r| {
            r.runtime_ms = 0;
            r
        })
        .collect();
    serde_json::to_string_pretty(&stripped)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> Params {
        Params {
            k: 2,
            a: Some(2),
            d: 1,
            s: 0,
            flavor: Flavor::Regular,
            trunc_x: 10,
            trunc_n: 30,
        }
    }

    #[test]
    fn json_shape() {
        let r = CheckReport::new("x", params(), Outcome::Fail(Mismatch::new(1, 4, 2, 3)));
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "fail");
        assert_eq!(v["first_mismatch"]["lhs"], "2");
        assert_eq!(v["params"]["flavor"], "regular");
        let s = CheckReport::new("x", params(), Outcome::Skipped("why".into()));
        let v: serde_json::Value = serde_json::to_value(&s).unwrap();
        assert_eq!(v["status"]["skipped"], "why");
        assert!(v["first_mismatch"].is_null());
    }

    #[test]
    fn canonical_ignores_runtime() {
        let mut a = CheckReport::new("x", params(), Outcome::Pass);
        let mut b = a.clone();
        a.runtime_ms = 3;
        b.runtime_ms = 99;
        assert_eq!(canonical_json(&[a]).unwrap(), canonical_json(&[b]).unwrap());
    }
}
