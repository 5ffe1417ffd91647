//! Two-route consistency: the Euler–Maclaurin and Hermite-quadrature
//! backends share no numerical machinery, so their agreement checks both.

use zetakern::hurwitz::{
    digamma_limit_check, hurwitz_zeta, hurwitz_zeta_prime, HurwitzBackend,
};
use zetakern::special::{bernoulli_polynomial, digamma};

const Z_GRID: [f64; 8] = [-5.0, -2.5, -1.0, -0.5, 0.5, 2.0, 3.0, 7.5];
const Q_GRID: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 5.0];

#[test]
fn zeta_backends_agree() {
    for &z in &Z_GRID {
        for &q in &Q_GRID {
            let em = hurwitz_zeta(z, q, HurwitzBackend::EulerMaclaurin).unwrap();
            let hermite = hurwitz_zeta(z, q, HurwitzBackend::HermiteQuadrature).unwrap();
            let diff = (em - hermite).abs();
            assert!(
                diff <= 1e-10 * em.abs(),
                "z={z} q={q}: em {em} vs hermite {hermite} (rel {:e})",
                diff / em.abs()
            );
        }
    }
}

#[test]
fn zeta_prime_backends_agree() {
    // The derivative needs three integrals per point; a coarser grid keeps
    // the test quick while still crossing every z regime.
    for &z in &[-5.0, -2.5, -0.5, 0.5, 3.0] {
        for &q in &[0.25, 1.0, 2.0] {
            let em = hurwitz_zeta_prime(z, q, HurwitzBackend::EulerMaclaurin).unwrap();
            let hermite = hurwitz_zeta_prime(z, q, HurwitzBackend::HermiteQuadrature).unwrap();
            let diff = (em - hermite).abs();
            assert!(
                diff <= 1e-9 * (1.0 + em.abs()),
                "z={z} q={q}: em {em} vs hermite {hermite}"
            );
        }
    }
}

#[test]
fn hermite_backend_reproduces_bernoulli() {
    // zeta(-m, q) = -B_{m+1}(q)/(m+1) through the quadrature route.
    for m in 0..=8u32 {
        for &q in &[0.25, 0.5, 1.0, 2.0] {
            let got = hurwitz_zeta(-(m as f64), q, HurwitzBackend::HermiteQuadrature).unwrap();
            let want = -bernoulli_polynomial(m + 1, q) / (m as f64 + 1.0);
            assert!(
                (got - want).abs() <= 1e-10 * (1.0 + want.abs()),
                "m={m} q={q}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn pole_limit_matches_digamma() {
    for &q in &[0.3, 0.5, 1.0, 2.6, 7.0] {
        let lim = digamma_limit_check(q).unwrap();
        let psi = digamma(q).unwrap();
        assert!((lim - psi).abs() < 1e-8, "q={q}: {lim} vs {psi}");
    }
}
