//! The negapolygamma functions are balanced on the unit interval: zero mean
//! and equal boundary values (with the q = 0 boundary value taken in the
//! renormalized right-limit sense).

use zetakern::hurwitz::{negapolygamma, negapolygamma_at_zero};
use zetakern::quadrature::integrate_interval;

#[test]
fn unit_interval_mean_vanishes() {
    for m in 1..=6u32 {
        let r = integrate_interval(
            |q: f64| negapolygamma(m, q).unwrap_or(f64::NAN),
            0.0,
            1.0,
            1e-9,
            1e-10,
        )
        .unwrap();
        assert!(r.value.abs() <= 1e-8, "m={m}: mean {:e}", r.value);
    }
}

#[test]
fn boundary_values_agree() {
    for m in 1..=6u32 {
        let left = negapolygamma_at_zero(m - 1);
        let right = negapolygamma(m, 1.0 - 1e-10).unwrap();
        assert!(
            (left - right).abs() <= 1e-8,
            "m={m}: psi(0+) {left} vs psi(1-) {right}"
        );
        // For m >= 2 the raw q -> 0+ limit exists and must match the defined
        // boundary value as well.
        if m >= 2 {
            let near_zero = negapolygamma(m, 1e-10).unwrap();
            assert!(
                (left - near_zero).abs() <= 1e-8,
                "m={m}: boundary {left} vs psi(1e-10) {near_zero}"
            );
        }
    }
}
