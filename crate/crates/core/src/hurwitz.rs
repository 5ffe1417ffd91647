//! Hurwitz zeta ζ(z,q), its z-derivative, and the balanced negapolygamma
//! functions ψ^{(−m)}.
//!
//! Two independent backends are exposed for both ζ and ζ′:
//!
//! * `EulerMaclaurin` — the double-double Euler–Maclaurin expansion (the
//!   backbone of every closed form in this crate).
//! * `HermiteQuadrature` — Hermite's integral representation
//!
//!   ```text
//!   ζ(z,q) = q^{-z}/2 + q^{1-z}/(z-1)
//!          + 2 q^{1-z} ∫₀^∞ sin(z arctan t) (1+t²)^{-z/2} / (e^{2πtq}-1) dt
//!   ```
//!
//!   and its term-wise z-derivative (three integrals), evaluated with the
//!   quadrature oracle.  Agreement of the backends is a genuine two-route
//!   consistency check since they share no numerical machinery.
//!
//! Operations refuse |z − 1| < 1e-6 instead of attempting cancellation-prone
//! arithmetic near the pole; the z → 1 limit is reachable through
//! [`digamma_limit_check`].  Backends are validated for z ∈ [−12, 50]; far
//! outside that envelope the quadrature route loses accuracy to integrand
//! oscillation and the Euler–Maclaurin route to conditioning.

use crate::dd::Dd;
use crate::em::hurwitz_em;
use crate::error::{require_positive_q, Error, Result};
use crate::quadrature::{integrate, IntegrandSpec, KernelKind};
use crate::special::{
    bernoulli_polynomial_dd, factorial_f64, harmonic_dd, harmonic_f64, zeta_prime_neg,
};

/// Minimum allowed distance from the z = 1 pole.
pub const POLE_GUARD: f64 = 1e-6;

/// A validated (z, q) argument pair for ζ(z,q): q > 0 and z away from 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    z: f64,
    q: f64,
}

impl EvalPoint {
    pub fn new(z: f64, q: f64) -> Result<EvalPoint> {
        require_positive_q(q)?;
        if !z.is_finite() {
            return Err(Error::domain(format!("z must be finite, got {z}")));
        }
        if (z - 1.0).abs() < POLE_GUARD {
            return Err(Error::Pole(POLE_GUARD));
        }
        Ok(EvalPoint { z, q })
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn q(&self) -> f64 {
        self.q
    }
}

/// Which evaluation route to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HurwitzBackend {
    EulerMaclaurin,
    HermiteQuadrature,
}

/// Relative tolerance requested from the oracle inside the Hermite backend.
const HERMITE_TOL: f64 = 1e-12;

/// ζ(z, q) for real z ≠ 1, q > 0.
pub fn hurwitz_zeta(z: f64, q: f64, backend: HurwitzBackend) -> Result<f64> {
    let p = EvalPoint::new(z, q)?;
    match backend {
        HurwitzBackend::EulerMaclaurin => Ok(hurwitz_em(p.z, p.q).value.to_f64()),
        HurwitzBackend::HermiteQuadrature => hermite_zeta(p.z, p.q),
    }
}

/// ∂ζ(z,q)/∂z for real z ≠ 1, q > 0.
pub fn hurwitz_zeta_prime(z: f64, q: f64, backend: HurwitzBackend) -> Result<f64> {
    let p = EvalPoint::new(z, q)?;
    match backend {
        HurwitzBackend::EulerMaclaurin => Ok(hurwitz_em(p.z, p.q).deriv.to_f64()),
        HurwitzBackend::HermiteQuadrature => hermite_zeta_prime(p.z, p.q),
    }
}

fn hermite_zeta(z: f64, q: f64) -> Result<f64> {
    let spec = IntegrandSpec {
        f: |t: f64| (z * t.atan()).sin() * (1.0 + t * t).powf(-z / 2.0),
        decay_class: (-z).max(0.0) + 1.0,
    };
    let j = integrate(&spec, KernelKind::BoseMinus, q, HERMITE_TOL)?;
    Ok(0.5 * q.powf(-z) + q.powf(1.0 - z) / (z - 1.0) + 2.0 * q.powf(1.0 - z) * j.value)
}

fn hermite_zeta_prime(z: f64, q: f64) -> Result<f64> {
    let lnq = q.ln();
    let sin_spec = IntegrandSpec {
        f: |t: f64| (z * t.atan()).sin() * (1.0 + t * t).powf(-z / 2.0),
        decay_class: (-z).max(0.0) + 1.0,
    };
    let cos_atan_spec = IntegrandSpec {
        f: |t: f64| (z * t.atan()).cos() * t.atan() * (1.0 + t * t).powf(-z / 2.0),
        decay_class: (-z).max(0.0) + 1.0,
    };
    let sin_log_spec = IntegrandSpec {
        f: |t: f64| (z * t.atan()).sin() * (1.0 + t * t).ln() * (1.0 + t * t).powf(-z / 2.0),
        decay_class: (-z).max(0.0) + 2.0,
    };
    let j_sin = integrate(&sin_spec, KernelKind::BoseMinus, q, HERMITE_TOL)?.value;
    let j_cos = integrate(&cos_atan_spec, KernelKind::BoseMinus, q, HERMITE_TOL)?.value;
    let j_log = integrate(&sin_log_spec, KernelKind::BoseMinus, q, HERMITE_TOL)?.value;
    let q1z = q.powf(1.0 - z);
    Ok(-0.5 * q.powf(-z) * lnq - q1z / ((z - 1.0) * (z - 1.0)) - q1z * lnq / (z - 1.0)
        - 2.0 * q1z * lnq * j_sin
        + 2.0 * q1z * j_cos
        - q1z * j_log)
}

/// Balanced function A_m(q) = m ζ′(1−m, q), m ≥ 1.
pub fn balanced_a(m: u32, q: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::argument("balanced_a requires m >= 1"));
    }
    Ok(m as f64 * hurwitz_zeta_prime(1.0 - m as f64, q, HurwitzBackend::EulerMaclaurin)?)
}

/// Balanced negapolygamma ψ^{(−m)}(q) = [A_m(q) − H_{m−1} B_m(q)] / m!, m ≥ 1.
pub fn negapolygamma(m: u32, q: f64) -> Result<f64> {
    Ok(negapolygamma_dd(m, q)?.to_f64())
}

/// ∂ζ(z,q)/∂z at double-double precision (Euler–Maclaurin route).
pub(crate) fn hurwitz_zeta_prime_dd(z: f64, q: f64) -> Result<Dd> {
    let p = EvalPoint::new(z, q)?;
    Ok(hurwitz_em(p.z(), p.q()).deriv)
}

/// ψ^{(−m)}(q) at double-double precision.
///
/// The T and L closed forms cancel these values against elementary terms by
/// up to eight orders of magnitude at the large-q end of the working range,
/// so their assembly needs more than binary64 carries.
pub(crate) fn negapolygamma_dd(m: u32, q: f64) -> Result<Dd> {
    if m == 0 {
        return Err(Error::argument("negapolygamma requires m >= 1"));
    }
    let p = EvalPoint::new(1.0 - m as f64, q)?;
    let a = hurwitz_em(p.z(), p.q()).deriv.mul_f64(m as f64);
    let hb = harmonic_dd(m - 1).mul(bernoulli_polynomial_dd(m, q));
    Ok(a.sub(hb).div_f64(factorial_f64(m)))
}

/// Boundary value ψ^{(−1−n)}(0⁺) = [ζ′(−n) − H_n B_{n+1}/(n+1)] / n!.
///
/// ζ(z, 0) itself diverges; this right-limit value is the one that enters the
/// closed forms, and for n ≥ 1 it coincides with lim_{q→0⁺} ψ^{(−1−n)}(q).
pub fn negapolygamma_at_zero(n: u32) -> f64 {
    let b = crate::special::bernoulli_number(n + 1);
    let b_f64 = num::ToPrimitive::to_f64(&b).expect("Bernoulli number within f64 range");
    (zeta_prime_neg(n) - harmonic_f64(n) * b_f64 / (n as f64 + 1.0)) / factorial_f64(n)
}

/// ψ(q) recovered from the pole limit ψ(q) = lim_{z→1} [1/(z−1) − ζ(z,q)].
///
/// Evaluates the bracket at z = 1 ± h for two h and Richardson-extrapolates
/// the even error expansion; the result is for comparison with `digamma`.
pub fn digamma_limit_check(q: f64) -> Result<f64> {
    require_positive_q(q)?;
    let sym = |h: f64| -> f64 {
        let plus = hurwitz_em(1.0 + h, q).value.to_f64();
        let minus = hurwitz_em(1.0 - h, q).value.to_f64();
        // [ (1/h - zeta(1+h,q)) + (-1/h - zeta(1-h,q)) ] / 2
        -(plus + minus) / 2.0
    };
    let h = 0.01;
    let d1 = sym(h);
    let d2 = sym(h / 2.0);
    Ok((4.0 * d2 - d1) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{CATALAN, EULER_GAMMA, LN_SQRT_2PI, ZETA_3, ZETA_PRIME_NEG_1};
    use crate::special::{bernoulli_polynomial, log_gamma};
    use std::f64::consts::PI;

    const EM: HurwitzBackend = HurwitzBackend::EulerMaclaurin;

    #[test]
    fn classic_values() {
        assert!((hurwitz_zeta(2.0, 1.0, EM).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        // zeta(3, 1/2) = 7 zeta(3)
        let v = hurwitz_zeta(3.0, 0.5, EM).unwrap();
        assert!((v - 7.0 * ZETA_3).abs() < 1e-13);
    }

    #[test]
    fn direct_summation_oracle() {
        // Brute-force sum of (n+q)^{-3} with an integral tail.
        let q = 0.5;
        let n_max = 200_000u64;
        let mut s = 0.0;
        for n in (0..n_max).rev() {
            s += ((n as f64) + q).powi(-3);
        }
        let w = n_max as f64 + q;
        s += 0.5 / (w * w) + 0.5 / (w * w * w);
        let v = hurwitz_zeta(3.0, q, EM).unwrap();
        assert!((v - s).abs() < 1e-12, "{v} vs {s}");
    }

    #[test]
    fn bernoulli_identity() {
        // zeta(-m, q) = -B_{m+1}(q)/(m+1)
        for m in 0..=8u32 {
            for &q in &[0.25, 0.5, 1.0, 2.0] {
                let got = hurwitz_zeta(-(m as f64), q, EM).unwrap();
                let want = -bernoulli_polynomial(m + 1, q) / (m as f64 + 1.0);
                assert!(
                    (got - want).abs() <= 1e-12 * (1.0 + want.abs()),
                    "m={m} q={q}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn recurrence_in_q() {
        // zeta(z, q) = zeta(z, q+1) + q^{-z}
        for &z in &[-5.0, -2.5, -1.0, -0.5, 0.5, 2.0, 3.0, 7.5] {
            for &q in &[0.25, 0.5, 1.0, 2.0, 5.0] {
                let lhs = hurwitz_zeta(z, q, EM).unwrap();
                let rhs = hurwitz_zeta(z, q + 1.0, EM).unwrap() + q.powf(-z);
                let scale = lhs.abs().max(q.powf(-z));
                assert!((lhs - rhs).abs() <= 1e-12 * scale, "z={z} q={q}");
            }
        }
    }

    #[test]
    fn pole_guard() {
        assert!(matches!(hurwitz_zeta(1.0, 1.0, EM), Err(Error::Pole(_))));
        assert!(matches!(hurwitz_zeta(1.0 + 1e-8, 1.0, EM), Err(Error::Pole(_))));
        assert!(hurwitz_zeta(2.0, 0.0, EM).is_err());
        assert!(hurwitz_zeta(2.0, -1.0, EM).is_err());
    }

    #[test]
    fn lerch_identity() {
        // zeta'(0, q) = ln Gamma(q) - ln sqrt(2pi), 50 points in (0, 5].
        for i in 1..=50 {
            let q = 0.1 * i as f64;
            let lhs = hurwitz_zeta_prime(0.0, q, EM).unwrap();
            let rhs = log_gamma(q).unwrap() - LN_SQRT_2PI;
            assert!((lhs - rhs).abs() < 1e-9, "q={q}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn derivative_special_values() {
        let v = hurwitz_zeta_prime(-1.0, 0.5, EM).unwrap();
        let want = -0.5 * ZETA_PRIME_NEG_1 - std::f64::consts::LN_2 / 24.0;
        assert!((v - want).abs() < 1e-12);
        let v = hurwitz_zeta_prime(-1.0, 0.25, EM).unwrap();
        let want = -ZETA_PRIME_NEG_1 / 8.0 + CATALAN / (4.0 * PI);
        assert!((v - want).abs() < 1e-12);
    }

    #[test]
    fn derivative_vs_finite_differences() {
        // 5-point stencil in z on the backend-agreement grid.
        let h = 1e-3;
        for &z in &[-5.0, -2.5, -1.0, -0.5, 0.5, 2.0, 3.0, 7.5] {
            for &q in &[0.25, 0.5, 1.0, 2.0, 5.0] {
                let f = |zz: f64| hurwitz_zeta(zz, q, EM).unwrap();
                let fd = (f(z - 2.0 * h) - 8.0 * f(z - h) + 8.0 * f(z + h) - f(z + 2.0 * h))
                    / (12.0 * h);
                let d = hurwitz_zeta_prime(z, q, EM).unwrap();
                assert!(
                    (d - fd).abs() <= 1e-7 * (1.0 + d.abs()),
                    "z={z} q={q}: {d} vs {fd}"
                );
            }
        }
    }

    #[test]
    fn balanced_a_values() {
        // A_1(q) = ln(Gamma(q)/sqrt(2pi)); A_1(1) = -ln sqrt(2pi)
        for &q in &[0.3, 1.0, 2.2] {
            let a = balanced_a(1, q).unwrap();
            let want = log_gamma(q).unwrap() - LN_SQRT_2PI;
            assert!((a - want).abs() < 1e-11);
        }
        assert!((balanced_a(1, 1.0).unwrap() + LN_SQRT_2PI).abs() < 1e-12);
        // A_2(q) = 2 zeta'(-1, q)
        let a = balanced_a(2, 0.7).unwrap();
        let want = 2.0 * hurwitz_zeta_prime(-1.0, 0.7, EM).unwrap();
        assert!((a - want).abs() < 1e-15);
        assert!(balanced_a(0, 1.0).is_err());
    }

    #[test]
    fn negapolygamma_values() {
        // m=1 reduces to A_1
        for &q in &[0.4, 1.0, 3.0] {
            let v = negapolygamma(1, q).unwrap();
            let want = log_gamma(q).unwrap() - LN_SQRT_2PI;
            assert!((v - want).abs() < 1e-11);
        }
        // psi^{(-2)}(1) = zeta'(-1) - 1/12
        let v = negapolygamma(2, 1.0).unwrap();
        assert!((v - (ZETA_PRIME_NEG_1 - 1.0 / 12.0)).abs() < 1e-13);
        assert!(negapolygamma(0, 1.0).is_err());
    }

    #[test]
    fn negapolygamma_boundary_values() {
        assert!((negapolygamma_at_zero(0) + LN_SQRT_2PI).abs() < 1e-15);
        assert!((negapolygamma_at_zero(1) - (ZETA_PRIME_NEG_1 - 1.0 / 12.0)).abs() < 1e-15);
        let want = -ZETA_3 / (8.0 * PI * PI);
        assert!((negapolygamma_at_zero(2) - want).abs() < 1e-15);
    }

    #[test]
    fn digamma_limit_values() {
        assert!((digamma_limit_check(1.0).unwrap() + EULER_GAMMA).abs() < 1e-8);
        assert!((digamma_limit_check(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-8);
        let want = -EULER_GAMMA - 2.0 * std::f64::consts::LN_2;
        assert!((digamma_limit_check(0.5).unwrap() - want).abs() < 1e-8);
    }
}
