//! Machine-readable verification reports.
//!
//! Every bound check in this crate produces a [`BoundReport`]: one record
//! stating what was compared (`lhs` against `rhs`), by how much it passed
//! (`margin = rhs - lhs`), and under which parameter regime. A verification
//! run bundles its reports into a [`VerificationReport`] that serializes to
//! stable JSON for downstream tooling.
//!
//! Margins are computed in double-double arithmetic by the producing
//! checks. A margin whose magnitude falls below the double-double
//! resolution of the compared quantities (relative `1e-28`) is clamped to
//! exactly `0.0` and the raw value is recorded in `notes`: several paper
//! bounds are attained with equality at corner cases, where the sign of a
//! ~1e-32 residue is numerical noise, not information.

use serde::Serialize;
use std::time::{SystemTime, UNIX_EPOCH};

/// Outcome of one bound verification.
///
/// Invariant: `holds == (margin >= 0.0)`. `lhs` and `rhs` are the two sides
/// of the verified inequality `lhs <= rhs`, in whatever scale the check
/// documents (usually log scale); `paper_eq` identifies the verified
/// statement in the source material's numbering.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub paper_eq: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub holds: bool,
    pub regime: String,
    pub notes: Vec<String>,
}

/// Parameter snapshot embedded in a [`VerificationReport`].
#[derive(Debug, Clone, Serialize)]
pub struct ParamsSummary {
    pub regime: String,
    pub r: f64,
    pub omega: f64,
    pub alpha: f64,
    pub k: u32,
    pub n_log2: u32,
    pub q: f64,
    pub w1: f64,
    pub w2: f64,
    pub precision: String,
    pub k_override: Option<u32>,
}

/// Run metadata. Kept in a dedicated struct (and serialized last) so that
/// reports can be compared for determinism by ignoring this field alone.
#[derive(Debug, Clone, Serialize)]
pub struct RunMeta {
    pub timestamp: String,
    pub wall_time_ms: u64,
    pub threads: usize,
}

/// A full verification run: parameters, individual checks, overall verdict.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub regime: String,
    pub params: ParamsSummary,
    pub checks: Vec<BoundReport>,
    pub passed: bool,
    pub meta: RunMeta,
}

impl VerificationReport {
    /// Assembles a report; `passed` is the conjunction of all `holds` flags.
    pub fn new(params: ParamsSummary, checks: Vec<BoundReport>, meta: RunMeta) -> Self {
        let passed = checks.iter().all(|c| c.holds);
        VerificationReport {
            regime: params.regime.clone(),
            params,
            checks,
            passed,
            meta,
        }
    }
}

/// Current UTC time as an RFC 3339 string (second resolution).
pub fn rfc3339_utc_now() -> String {
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let days = (secs / 86_400) as i64;
    let rem = secs % 86_400;
    let (y, m, d) = civil_from_days(days);
    format!(
        "{y:04}-{m:02}-{d:02}T{:02}:{:02}:{:02}Z",
        rem / 3600,
        (rem % 3600) / 60,
        rem % 60
    )
}

/// Gregorian date from days since 1970-01-01 (proleptic, era-based).
fn civil_from_days(z: i64) -> (i64, u32, u32) {
    let z = z + 719_468;
    let era = if z >= 0 { z } else { z - 146_096 } / 146_097;
    let doe = (z - era * 146_097) as u64;
    let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
    let y = yoe as i64 + era * 400;
    let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    let mp = (5 * doy + 2) / 153;
    let d = (doy - (153 * mp + 2) / 5 + 1) as u32;
    let m = if mp < 10 { mp + 3 } else { mp - 9 } as u32;
    (if m <= 2 { y + 1 } else { y }, m, d)
}
