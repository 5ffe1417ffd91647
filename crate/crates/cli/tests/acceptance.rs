//! Acceptance suite: every exit criterion as one test, each printing a
//! single pass/fail line (visible with `--nocapture`).
//!
//! Tolerances are pinned here, in code; nothing is deferred to later
//! calibration.

use zetakern::closed_forms::{
    evaluate_closed, i_recursion_check, jplusk_residual, oracle_integral, t_even_closed, Family,
    FamilyId,
};
use zetakern::constants::{CATALAN, ZETA_PRIME_NEG_1};
use zetakern::hurwitz::{
    hurwitz_zeta, hurwitz_zeta_prime, negapolygamma, negapolygamma_at_zero, HurwitzBackend,
};
use zetakern::quadrature::{integrate_interval, KernelKind};
use zetakern::special::{bernoulli_polynomial, factorial_f64, riemann_zeta};

use zetakern_cli::config::{OutputFormat, SuiteConfig};
use zetakern_cli::render::render_report;
use zetakern_cli::suite::verify_suite;
use zetakern_cli::tables::special_values_with_oracle;

fn report(criterion: u32, name: &str, pass: bool, detail: String) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("acceptance criterion {criterion} ({name}): {status} — {detail}");
    assert!(pass, "criterion {criterion} ({name}) failed: {detail}");
}

#[test]
fn criterion_1_special_value_table() {
    let rows = special_values_with_oracle(1e-10).unwrap();
    let mut worst_const: f64 = 0.0;
    let mut worst_oracle: f64 = 0.0;
    for (row, oracle, _) in &rows {
        worst_const = worst_const.max((row.closed - row.reference).abs());
        worst_oracle = worst_oracle.max((row.closed - oracle).abs());
    }
    let pass = rows.len() >= 18 && worst_const <= 1e-10 && worst_oracle <= 1e-8;
    report(
        1,
        "special-value table",
        pass,
        format!(
            "{} rows; |closed - constant| <= {worst_const:.2e} (tol 1e-10); \
             |closed - oracle| <= {worst_oracle:.2e} (tol 1e-8)",
            rows.len()
        ),
    );
}

#[test]
fn criterion_2_closed_form_oracle_grid() {
    let q_grid = [0.25, 0.5, 1.0, 2.0, 4.0];
    let mut ids = Vec::new();
    for k in 0..=8u32 {
        ids.push(FamilyId::new(Family::I, k, KernelKind::BoseMinus));
    }
    for k in 1..=5u32 {
        ids.push(FamilyId::new(Family::T, 2 * k, KernelKind::BoseMinus));
    }
    for k in 0..=5u32 {
        ids.push(FamilyId::new(Family::L, 2 * k + 1, KernelKind::BoseMinus));
    }
    for kernel in [KernelKind::FermiPlus, KernelKind::Csch] {
        for k in 1..=3u32 {
            ids.push(FamilyId::new(Family::I, k, kernel));
        }
        for k in 0..=3u32 {
            ids.push(FamilyId::new(Family::T, 2 * k, kernel));
            ids.push(FamilyId::new(Family::L, 2 * k + 1, kernel));
        }
    }
    let mut points = 0;
    let mut failures = 0;
    let mut worst: f64 = 0.0;
    for id in &ids {
        for &q in &q_grid {
            let closed = evaluate_closed(id, q).unwrap();
            let oracle = oracle_integral(id, q, 1e-11).unwrap();
            let diff = (closed.value - oracle.value).abs();
            let tol = (1e-9 * closed.value.abs()).max(10.0 * oracle.abs_error_estimate);
            points += 1;
            worst = worst.max(diff / tol);
            if diff > tol {
                failures += 1;
                eprintln!("  grid failure: {} q={q}: diff {diff:e} tol {tol:e}", id.label());
            }
        }
    }
    report(
        2,
        "closed-form/oracle grid",
        failures == 0,
        format!("{points} integrals, {failures} failures, worst diff/tol {worst:.2e}"),
    );
}

#[test]
fn criterion_3_exact_identity_suite() {
    use num::BigInt;
    use zetakern::expansions::{
        binomial_collapse_identity, evaluation_sums, orthogonality_sum, trig_poly_in_1pt2,
        trig_poly_in_t, Parity,
    };
    use zetakern::special::binomial;
    let mut bad = 0u32;
    let mut cases = 0u32;
    for m in 1..=40u32 {
        for j in 0..=((m - 1) / 2) {
            let (lhs, rhs) = binomial_collapse_identity(m, j).unwrap();
            cases += 1;
            bad += u32::from(lhs != rhs);
        }
    }
    for k in 1..=25u32 {
        for p in 1..=25u32 {
            let want = if p == k {
                BigInt::from(if k % 2 == 0 { k as i64 } else { -(k as i64) })
            } else {
                BigInt::from(0)
            };
            cases += 1;
            bad += u32::from(orthogonality_sum(k, p) != want);
        }
    }
    for k in 1..=25u32 {
        let (s1, s2) = evaluation_sums(k);
        cases += 1;
        bad += u32::from(
            s1 != BigInt::from(2).pow(2 * k - 1)
                || s2 != BigInt::from(k as i64) * binomial(2 * k as i64, k as i64),
        );
    }
    for m in 1..=20u32 {
        for parity in [Parity::SineLike, Parity::CosineLike] {
            cases += 1;
            bad += u32::from(
                trig_poly_in_t(m, parity).to_one_plus_t2_basis().coeffs
                    != trig_poly_in_1pt2(m, parity).coeffs,
            );
        }
    }
    report(
        3,
        "exact identity suite",
        bad == 0,
        format!("{cases} exact identities, {bad} mismatches (zero tolerance)"),
    );
}

#[test]
fn criterion_4_hurwitz_backend_agreement() {
    let mut worst_rel: f64 = 0.0;
    for &z in &[-5.0, -2.5, -1.0, -0.5, 0.5, 2.0, 3.0, 7.5] {
        for &q in &[0.25, 0.5, 1.0, 2.0, 5.0] {
            let em = hurwitz_zeta(z, q, HurwitzBackend::EulerMaclaurin).unwrap();
            let hq = hurwitz_zeta(z, q, HurwitzBackend::HermiteQuadrature).unwrap();
            worst_rel = worst_rel.max((em - hq).abs() / em.abs());
        }
    }
    let mut worst_bern: f64 = 0.0;
    for m in 0..=8u32 {
        for &q in &[0.25, 0.5, 1.0, 2.0] {
            let want = -bernoulli_polynomial(m + 1, q) / (m as f64 + 1.0);
            for backend in [HurwitzBackend::EulerMaclaurin, HurwitzBackend::HermiteQuadrature] {
                let got = hurwitz_zeta(-(m as f64), q, backend).unwrap();
                worst_bern = worst_bern.max((got - want).abs() / (1.0 + want.abs()));
            }
        }
    }
    let pass = worst_rel <= 1e-10 && worst_bern <= 1e-10;
    report(
        4,
        "Hurwitz backend agreement",
        pass,
        format!(
            "EM vs Hermite rel <= {worst_rel:.2e} on the 8x5 grid (tol 1e-10); \
             Bernoulli identity residual <= {worst_bern:.2e} (tol 1e-10)"
        ),
    );
}

#[test]
fn criterion_5_balanced_functions() {
    let mut worst_mean: f64 = 0.0;
    let mut worst_endpoint: f64 = 0.0;
    for m in 1..=6u32 {
        let mean = integrate_interval(
            |q: f64| negapolygamma(m, q).unwrap_or(f64::NAN),
            0.0,
            1.0,
            1e-9,
            1e-10,
        )
        .unwrap();
        worst_mean = worst_mean.max(mean.value.abs());
        let left = negapolygamma_at_zero(m - 1);
        let right = negapolygamma(m, 1.0 - 1e-10).unwrap();
        worst_endpoint = worst_endpoint.max((left - right).abs());
    }
    let pass = worst_mean <= 1e-8 && worst_endpoint <= 1e-8;
    report(
        5,
        "balanced negapolygamma",
        pass,
        format!(
            "unit-interval mean <= {worst_mean:.2e}, endpoint mismatch <= {worst_endpoint:.2e} \
             (tol 1e-8, m = 1..6)"
        ),
    );
}

#[test]
fn criterion_6_derivative_pinning() {
    let em = HurwitzBackend::EulerMaclaurin;
    let v_half = hurwitz_zeta_prime(-1.0, 0.5, em).unwrap();
    let want_half = -0.5 * ZETA_PRIME_NEG_1 - std::f64::consts::LN_2 / 24.0;
    let v_quarter = hurwitz_zeta_prime(-1.0, 0.25, em).unwrap();
    let want_quarter = -ZETA_PRIME_NEG_1 / 8.0 + CATALAN / (4.0 * std::f64::consts::PI);
    let d1 = (v_half - want_half).abs();
    let d2 = (v_quarter - want_quarter).abs();
    let pass = d1 <= 1e-9 && d2 <= 1e-9;
    report(
        6,
        "zeta-prime pinning at q=1/2, 1/4",
        pass,
        format!("|zeta'(-1,1/2) - reduction| = {d1:.2e}, |zeta'(-1,1/4) - reduction| = {d2:.2e} (tol 1e-9)"),
    );
}

#[test]
fn criterion_7_recursion_closure() {
    let mut worst: f64 = 0.0;
    for m in 0..=8u32 {
        for &q in &[0.5, 1.0, 2.0] {
            worst = worst.max(jplusk_residual(m, q).unwrap().abs());
        }
    }
    for m in 1..=8u32 {
        for &q in &[0.5, 1.0, 2.0] {
            worst = worst.max(i_recursion_check(m, q).unwrap().abs());
        }
    }
    report(
        7,
        "recursion closure",
        worst <= 1e-9,
        format!("worst normalized residual {worst:.2e} (tol 1e-9)"),
    );
}

#[test]
fn criterion_8_small_q_asymptotics() {
    let q = 1e-3;
    let mut worst: f64 = 0.0;
    for k in [1u32, 2] {
        let t = t_even_closed(k, q).unwrap().value;
        let limit = factorial_f64(2 * k) * riemann_zeta(2.0 * k as f64 + 1.0).unwrap()
            / (4.0 * (2.0 * std::f64::consts::PI).powi(2 * k as i32));
        let ratio = q.powi(2 * k as i32 + 1) * t / limit;
        worst = worst.max((ratio - 1.0).abs());
    }
    report(
        8,
        "small-q asymptotics",
        worst <= 0.01,
        format!("q^(2k+1) T_2k(q) / limit within {worst:.2e} of 1 at q=1e-3 (tol 1%)"),
    );
}

#[test]
fn criterion_9_verify_suite_deterministic() {
    let cfg = SuiteConfig::default();
    let r1 = verify_suite(&cfg).unwrap();
    let r2 = verify_suite(&cfg).unwrap();
    let text1 = render_report(&r1, OutputFormat::Json);
    let text2 = render_report(&r2, OutputFormat::Json);
    let pass = r1.summary.all_pass() && text1 == text2;
    report(
        9,
        "verify suite",
        pass,
        format!(
            "{} records + {} identity checks, {} failures; reports byte-identical: {}",
            r1.summary.integral_records,
            r1.summary.identity_checks,
            r1.summary.fail,
            text1 == text2
        ),
    );
}
