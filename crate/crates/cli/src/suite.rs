//! The verification suite: every implemented closed form against the oracle
//! over the configured grid, plus the identity suites with their
//! spec-pinned parameter ranges.

use zetakern::closed_forms::{
    i_closed, i_recursion_check, i_variant_closed, jplusk_residual, l_odd_closed,
    l_odd_variant_closed, t0_closed, t0_variant_closed, t_even_closed, t_even_variant_closed,
    transform_kernel, Family, FamilyId,
};
use zetakern::expansions::{
    binomial_collapse_identity, evaluation_sums, orthogonality_sum, trig_poly_in_1pt2,
    trig_poly_in_t, Parity,
};
use zetakern::quadrature::KernelKind;
use num::BigInt;
use zetakern::special::binomial;
use zetakern::{Error, Result};

use crate::config::SuiteConfig;
use crate::records::{IdentityRecord, SuiteReport, Summary, VerificationRecord};
use crate::tables::special_values_with_oracle;

const KERNELS: [KernelKind; 3] = [KernelKind::BoseMinus, KernelKind::FermiPlus, KernelKind::Csch];

/// Every family member the suite verifies, in deterministic
/// (family, index, kernel) order.
fn grid_members(cfg: &SuiteConfig) -> Vec<FamilyId> {
    let mut ids = Vec::new();
    for kernel in KERNELS {
        let bose = kernel == KernelKind::BoseMinus;
        // I: Bose from 0, variants from 1
        let (lo, hi) = if bose { (0, cfg.k_max_i) } else { (1, cfg.k_max_variants) };
        for k in lo..=hi {
            ids.push(FamilyId::new(Family::I, k, kernel));
        }
        // T: even subscripts
        let hi = if bose { cfg.k_max_t } else { 2 * cfg.k_max_variants };
        for idx in (0..=hi).step_by(2) {
            ids.push(FamilyId::new(Family::T, idx, kernel));
        }
        // L: odd subscripts
        let hi = if bose { cfg.k_max_l } else { 2 * cfg.k_max_variants + 1 };
        for idx in (1..=hi).step_by(2) {
            ids.push(FamilyId::new(Family::L, idx, kernel));
        }
    }
    ids.sort();
    ids
}

/// Runs the full suite.  Deterministic: records are ordered by
/// (family, index, kernel, q) and all evaluation is serial.
pub fn verify_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate().map_err(Error::Argument)?;

    let mut records = Vec::new();
    for id in grid_members(cfg) {
        for &q in &cfg.q_grid {
            records.push(VerificationRecord::evaluate(id, q, cfg)?);
        }
    }

    let identities = identity_suite()?;

    let pass = records.iter().filter(|r| r.status == crate::records::RecordStatus::Pass).count()
        + identities.iter().filter(|r| r.status == crate::records::RecordStatus::Pass).count();
    let fail = records.iter().filter(|r| r.status == crate::records::RecordStatus::Fail).count()
        + identities.iter().filter(|r| r.status == crate::records::RecordStatus::Fail).count();
    let summary = Summary {
        integral_records: records.len(),
        identity_checks: identities.len(),
        pass,
        fail,
    };
    Ok(SuiteReport {
        schema_version: 1,
        rel_tol: cfg.rel_tol,
        safety_factor: cfg.safety_factor,
        q_grid: cfg.q_grid.clone(),
        records,
        identities,
        summary,
    })
}

/// The q-independent identity suites, with their fixed parameter ranges.
pub fn identity_suite() -> Result<Vec<IdentityRecord>> {
    let mut out = Vec::new();

    // Exact combinatorial identities: residual is the count of mismatches.
    let mut cases = 0;
    let mut bad = 0;
    for m in 1..=40u32 {
        for j in 0..=((m - 1) / 2) {
            let (lhs, rhs) = binomial_collapse_identity(m, j)?;
            cases += 1;
            if lhs != rhs {
                bad += 1;
            }
        }
    }
    out.push(IdentityRecord::new("binomial_collapse[m<=40]", cases, bad as f64, 0.0));

    let mut cases = 0;
    let mut bad = 0;
    for k in 1..=25u32 {
        for p in 1..=25u32 {
            let got = orthogonality_sum(k, p);
            let want = if p == k {
                BigInt::from(if k % 2 == 0 { k as i64 } else { -(k as i64) })
            } else {
                BigInt::from(0)
            };
            cases += 1;
            if got != want {
                bad += 1;
            }
        }
    }
    out.push(IdentityRecord::new("orthogonality_sum[k;p<=25]", cases, bad as f64, 0.0));

    let mut cases = 0;
    let mut bad = 0;
    for k in 1..=25u32 {
        let (s1, s2) = evaluation_sums(k);
        let w1 = BigInt::from(2).pow(2 * k - 1);
        let w2 = BigInt::from(k as i64) * binomial(2 * k as i64, k as i64);
        cases += 1;
        if s1 != w1 || s2 != w2 {
            bad += 1;
        }
    }
    out.push(IdentityRecord::new("evaluation_sums[k<=25]", cases, bad as f64, 0.0));

    let mut cases = 0;
    let mut bad = 0;
    for m in 1..=20u32 {
        for parity in [Parity::SineLike, Parity::CosineLike] {
            cases += 1;
            if trig_poly_in_t(m, parity).to_one_plus_t2_basis().coeffs
                != trig_poly_in_1pt2(m, parity).coeffs
            {
                bad += 1;
            }
        }
    }
    out.push(IdentityRecord::new("trig_basis_conversion[m<=20]", cases, bad as f64, 0.0));

    // Representation identity: explicit Fermi/csch formulas vs the kernel
    // transform of the Bose closed form (pure algebra, no quadrature).
    let mut cases = 0;
    let mut worst: f64 = 0.0;
    for kernel in [KernelKind::FermiPlus, KernelKind::Csch] {
        for &q in &[0.25, 0.5, 1.0] {
            let mut pairs: Vec<(f64, f64)> = Vec::new();
            for k in 1..=3u32 {
                pairs.push((
                    i_variant_closed(k, q, kernel)?.value,
                    transform_kernel(|qq| i_closed(k, qq).map(|c| c.value), q, kernel)?,
                ));
                pairs.push((
                    t_even_variant_closed(k, q, kernel)?.value,
                    transform_kernel(|qq| t_even_closed(k, qq).map(|c| c.value), q, kernel)?,
                ));
            }
            for k in 0..=3u32 {
                pairs.push((
                    l_odd_variant_closed(k, q, kernel)?.value,
                    transform_kernel(|qq| l_odd_closed(k, qq).map(|c| c.value), q, kernel)?,
                ));
            }
            pairs.push((
                t0_variant_closed(q, kernel)?.value,
                transform_kernel(|qq| t0_closed(qq).map(|c| c.value), q, kernel)?,
            ));
            for (explicit, transformed) in pairs {
                cases += 1;
                let rel = (explicit - transformed).abs() / explicit.abs().max(transformed.abs());
                worst = worst.max(rel);
            }
        }
    }
    out.push(IdentityRecord::new("representation_identity[k<=3]", cases, worst, 1e-12));

    // Recursion closures.
    let mut cases = 0;
    let mut worst: f64 = 0.0;
    for m in 0..=8u32 {
        for &q in &[0.5, 1.0, 2.0] {
            cases += 1;
            worst = worst.max(jplusk_residual(m, q)?.abs());
        }
    }
    out.push(IdentityRecord::new("t_l_coupling_recursion[m<=8]", cases, worst, 1e-9));

    let mut cases = 0;
    let mut worst: f64 = 0.0;
    for m in 1..=8u32 {
        for &q in &[0.5, 1.0, 2.0] {
            cases += 1;
            worst = worst.max(i_recursion_check(m, q)?.abs());
        }
    }
    out.push(IdentityRecord::new("i_polygamma_recursion[m<=8]", cases, worst, 1e-9));

    // Special values: closed vs constants, and closed vs oracle.
    let rows = special_values_with_oracle(1e-10)?;
    let mut worst_const: f64 = 0.0;
    let mut worst_oracle: f64 = 0.0;
    let cases = rows.len() as u32;
    for (row, oracle, _err) in &rows {
        worst_const = worst_const.max((row.closed - row.reference).abs());
        worst_oracle = worst_oracle.max((row.closed - oracle).abs());
    }
    out.push(IdentityRecord::new("special_values_vs_constants[19]", cases, worst_const, 1e-10));
    out.push(IdentityRecord::new("special_values_vs_oracle[19]", cases, worst_oracle, 1e-8));

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid_yields_no_records() {
        let mut cfg = SuiteConfig::default();
        cfg.q_grid.clear();
        let report = verify_suite(&cfg).unwrap();
        assert_eq!(report.summary.integral_records, 0);
        assert!(report.summary.all_pass());
        assert!(report.summary.identity_checks > 0);
    }

    #[test]
    fn members_are_sorted_and_complete() {
        let cfg = SuiteConfig::default();
        let ids = grid_members(&cfg);
        // 9 I[bose] + 6 T[bose] + 6 L[bose] + 2*(3 I + 4 T + 4 L) variants
        assert_eq!(ids.len(), 9 + 6 + 6 + 2 * (3 + 4 + 4));
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }
}
