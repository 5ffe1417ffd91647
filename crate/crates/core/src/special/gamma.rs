//! log Γ, digamma and polygamma for positive real arguments.
//!
//! All three shift the argument upward by the recurrences Γ(x+1) = x Γ(x),
//! ψ(x+1) = ψ(x) + 1/x, ψ^{(m)}(x+1) = ψ^{(m)}(x) + (−1)^m m! x^{−m−1} until
//! the Stirling-type asymptotic series applies, then truncate it at (or
//! before) its smallest term.

use crate::constants::LN_SQRT_2PI;
use crate::error::{require_positive_q, Error, Result};
use crate::special::{bernoulli_f64, factorial_f64};

/// B_{2j} / (2j (2j-1)) for j = 1..=8: the Stirling series for ln Γ.
const STIRLING_LOG_GAMMA: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// B_{2j} / (2j) for j = 1..=8: the asymptotic series for ψ.
const STIRLING_DIGAMMA: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

const SHIFT_TARGET: f64 = 10.0;

/// Natural logarithm of Γ(q), q > 0.
pub fn log_gamma(q: f64) -> Result<f64> {
    require_positive_q(q).map_err(|_| Error::domain(format!("log_gamma requires q > 0, got {q}")))?;
    let mut x = q;
    let mut shift = 0.0;
    let mut comp = 0.0;
    while x < SHIFT_TARGET {
        let y = x.ln() - comp;
        let t = shift + y;
        comp = (t - shift) - y;
        shift = t;
        x += 1.0;
    }
    let mut s = (x - 0.5) * x.ln() - x + LN_SQRT_2PI;
    let x2 = x * x;
    let mut xp = x;
    for c in STIRLING_LOG_GAMMA {
        s += c / xp;
        xp *= x2;
    }
    Ok(s - shift)
}

/// Digamma function ψ(q) = d/dq ln Γ(q), q > 0.
pub fn digamma(q: f64) -> Result<f64> {
    require_positive_q(q).map_err(|_| Error::domain(format!("digamma requires q > 0, got {q}")))?;
    let mut x = q;
    let mut shift = 0.0;
    let mut comp = 0.0;
    while x < SHIFT_TARGET {
        let y = 1.0 / x - comp;
        let t = shift + y;
        comp = (t - shift) - y;
        shift = t;
        x += 1.0;
    }
    let mut s = x.ln() - 0.5 / x;
    let x2 = x * x;
    let mut xp = x2;
    for c in STIRLING_DIGAMMA {
        s -= c / xp;
        xp *= x2;
    }
    Ok(s - shift)
}

/// Polygamma function ψ^{(m)}(q) for m ≥ 1, q > 0.
///
/// Equals (−1)^{m+1} m! ζ(m+1, q).  For m = 0 use [`digamma`].
pub fn polygamma(m: u32, q: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::argument("polygamma order m must be >= 1; use digamma for m = 0"));
    }
    require_positive_q(q)
        .map_err(|_| Error::domain(format!("polygamma requires q > 0, got {q}")))?;

    let mf = m as f64;
    let sign_rec = if m % 2 == 0 { 1.0 } else { -1.0 }; // (-1)^m
    let m_fact = factorial_f64(m);

    let target = SHIFT_TARGET + mf;
    let mut x = q;
    let mut shift = 0.0;
    while x < target {
        shift += sign_rec * m_fact * x.powi(-(m as i32) - 1);
        x += 1.0;
    }

    // psi^{(m)}(x) = (-1)^{m-1} [ (m-1)!/x^m + m!/(2 x^{m+1})
    //              + sum_j B_{2j} (2j+m-1)!/((2j)! x^{2j+m}) ]
    let xm = x.powi(-(m as i32));
    let mut s = factorial_f64(m - 1) * xm + m_fact * xm / (2.0 * x);
    let x2 = x * x;
    let mut xp = xm / x2; // x^{-(2j+m)} at j=1
    let mut fact_ratio = 1.0; // (2j+m-1)!/(2j)! built incrementally
    for i in 1..=(m + 1) {
        fact_ratio *= i as f64; // (m+1)!/2! at j=1
    }
    fact_ratio /= 2.0;
    let mut prev = f64::INFINITY;
    for j in 1..=12u32 {
        if j > 1 {
            // multiply by (2j+m-2)(2j+m-1)/((2j-1)(2j))
            fact_ratio *= (2.0 * j as f64 + mf - 2.0) * (2.0 * j as f64 + mf - 1.0)
                / ((2.0 * j as f64 - 1.0) * (2.0 * j as f64));
            xp /= x2;
        }
        let term = bernoulli_f64(2 * j) * fact_ratio * xp;
        if term.abs() > prev {
            break; // asymptotic tail started growing
        }
        s += term;
        prev = term.abs();
        if term.abs() < 1e-18 * s.abs() {
            break;
        }
    }
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 }; // (-1)^{m-1}
    Ok(sign * s - shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{EULER_GAMMA, LN_GAMMA_QUARTER, ZETA_3};
    use std::f64::consts::PI;

    #[test]
    fn log_gamma_classics() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert!((log_gamma(2.0).unwrap()).abs() < 1e-14);
        let half = log_gamma(0.5).unwrap();
        assert!((half - (PI.ln() / 2.0)).abs() < 5e-15);
        let quarter = log_gamma(0.25).unwrap();
        assert!((quarter - LN_GAMMA_QUARTER).abs() < 1e-14);
        // Gamma(5) = 24
        assert!((log_gamma(5.0).unwrap() - 24.0f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn log_gamma_wide_range() {
        // Recurrence consistency ln Γ(x+1) = ln Γ(x) + ln x across 13 digits.
        for &x in &[1e-3, 0.02, 0.7, 3.3, 41.0, 999.0] {
            let a = log_gamma(x + 1.0).unwrap();
            let b = log_gamma(x).unwrap() + x.ln();
            assert!((a - b).abs() <= 1e-13 * a.abs().max(1.0), "x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn log_gamma_domain() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
        assert!(log_gamma(f64::NAN).is_err());
    }

    #[test]
    fn digamma_classics() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-15);
        // psi(1/2) = -gamma - 2 ln 2
        let want = -EULER_GAMMA - 2.0 * std::f64::consts::LN_2;
        assert!((digamma(0.5).unwrap() - want).abs() < 1e-15);
    }

    #[test]
    fn digamma_matches_log_gamma_derivative() {
        // Central finite difference of log_gamma at a generic point.
        let q = 10.5;
        let h = 1e-5;
        let fd = (log_gamma(q + h).unwrap() - log_gamma(q - h).unwrap()) / (2.0 * h);
        assert!((digamma(q).unwrap() - fd).abs() < 1e-8);
    }

    #[test]
    fn polygamma_classics() {
        // psi'(1) = zeta(2) = pi^2/6, psi''(1) = -2 zeta(3)
        assert!((polygamma(1, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        assert!((polygamma(2, 1.0).unwrap() + 2.0 * ZETA_3).abs() < 1e-14);
        assert!(polygamma(0, 1.0).is_err());
        assert!(polygamma(1, 0.0).is_err());
    }

    #[test]
    fn polygamma_recurrence() {
        // psi^{(m)}(q+1) - psi^{(m)}(q) = (-1)^m m! q^{-(m+1)}
        for m in 1..=6u32 {
            for &q in &[0.3, 1.0, 2.7] {
                let lhs = polygamma(m, q + 1.0).unwrap() - polygamma(m, q).unwrap();
                let rhs =
                    if m % 2 == 0 { 1.0 } else { -1.0 } * factorial_f64(m) * q.powi(-(m as i32) - 1);
                assert!(
                    (lhs - rhs).abs() <= 1e-12 * rhs.abs(),
                    "m={m} q={q}: rel {:e}",
                    (lhs - rhs).abs() / rhs.abs()
                );
            }
        }
    }

    #[test]
    fn polygamma_series_oracle() {
        // psi^{(1)}(q) = sum_n 1/(n+q)^2 by brute force.
        for &q in &[0.25, 1.0, 3.5] {
            let mut s = 0.0;
            let n_max = 2_000_000u64;
            for n in (0..n_max).rev() {
                s += 1.0 / ((n as f64 + q) * (n as f64 + q));
            }
            s += 1.0 / (n_max as f64 + q); // integral tail
            s += 0.5 / ((n_max as f64 + q) * (n_max as f64 + q));
            let got = polygamma(1, q).unwrap();
            assert!((got - s).abs() < 1e-12, "q={q}: {got} vs {s}");
        }
    }
}
