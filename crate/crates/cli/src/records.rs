//! Record types produced by the verification suite.

use zetakern::closed_forms::{evaluate_closed, oracle_integral, FamilyId};
use zetakern::Error;

use crate::config::SuiteConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordStatus {
    Pass,
    Fail,
    NoClosedForm,
}

impl RecordStatus {
    pub fn label(self) -> &'static str {
        match self {
            RecordStatus::Pass => "pass",
            RecordStatus::Fail => "fail",
            RecordStatus::NoClosedForm => "no_closed_form",
        }
    }
}

/// One closed-form vs oracle comparison.
#[derive(Debug, Clone)]
pub struct VerificationRecord {
    pub id: FamilyId,
    pub q: f64,
    pub closed_value: f64,
    pub oracle_value: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub oracle_error_estimate: f64,
    pub status: RecordStatus,
}

impl VerificationRecord {
    /// Evaluates both routes and applies the pass rule
    /// |closed − oracle| ≤ max(rel_tol · |closed|, safety · oracle_error).
    pub fn evaluate(id: FamilyId, q: f64, cfg: &SuiteConfig) -> Result<VerificationRecord, Error> {
        let oracle = oracle_integral(&id, q, cfg.oracle_rel_tol)?;
        match evaluate_closed(&id, q) {
            Ok(closed) => {
                let abs_diff = (closed.value - oracle.value).abs();
                let rel_diff = if closed.value != 0.0 { abs_diff / closed.value.abs() } else { abs_diff };
                let tol = (cfg.rel_tol * closed.value.abs())
                    .max(cfg.safety_factor * oracle.abs_error_estimate);
                let status =
                    if abs_diff <= tol { RecordStatus::Pass } else { RecordStatus::Fail };
                Ok(VerificationRecord {
                    id,
                    q,
                    closed_value: closed.value,
                    oracle_value: oracle.value,
                    abs_diff,
                    rel_diff,
                    oracle_error_estimate: oracle.abs_error_estimate,
                    status,
                })
            }
            Err(Error::NoClosedForm(_)) => Ok(VerificationRecord {
                id,
                q,
                closed_value: f64::NAN,
                oracle_value: oracle.value,
                abs_diff: f64::NAN,
                rel_diff: f64::NAN,
                oracle_error_estimate: oracle.abs_error_estimate,
                status: RecordStatus::NoClosedForm,
            }),
            Err(e) => Err(e),
        }
    }
}

/// One identity-suite check (a family of exact or residual identities).
#[derive(Debug, Clone)]
pub struct IdentityRecord {
    pub name: &'static str,
    pub cases: u32,
    pub max_residual: f64,
    pub tolerance: f64,
    pub status: RecordStatus,
}

impl IdentityRecord {
    pub fn new(name: &'static str, cases: u32, max_residual: f64, tolerance: f64) -> Self {
        let status = if max_residual <= tolerance { RecordStatus::Pass } else { RecordStatus::Fail };
        IdentityRecord { name, cases, max_residual, tolerance, status }
    }
}

#[derive(Debug, Clone)]
pub struct Summary {
    pub integral_records: usize,
    pub identity_checks: usize,
    pub pass: usize,
    pub fail: usize,
}

impl Summary {
    pub fn all_pass(&self) -> bool {
        self.fail == 0
    }
}

/// A full suite run: versioned header data, the records and the summary.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub rel_tol: f64,
    pub safety_factor: f64,
    pub q_grid: Vec<f64>,
    pub records: Vec<VerificationRecord>,
    pub identities: Vec<IdentityRecord>,
    pub summary: Summary,
}
