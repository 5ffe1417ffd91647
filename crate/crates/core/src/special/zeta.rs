//! Riemann zeta and the derivative ζ′(−n) at nonpositive integers.

use std::f64::consts::PI;

use crate::constants::LN_SQRT_2PI;
use crate::em::hurwitz_em;
use crate::error::{Error, Result};
use crate::special::{bernoulli_number, Rational};
use num::ToPrimitive;

/// sin(πx) with exact zeros at integer x.
fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// Riemann zeta function ζ(s) for real s ≠ 1.
///
/// For s ≥ 1/2 this is the Euler–Maclaurin expansion at q = 1; below that the
/// functional equation ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s) maps back
/// into the well-conditioned region.  Accurate to ≥ 13 significant digits for
/// s ∈ [−50, 50] \ {1}.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    if !s.is_finite() {
        return Err(Error::domain(format!("zeta argument must be finite, got {s}")));
    }
    if s == 1.0 {
        return Err(Error::Pole(0.0));
    }
    // Euler-Maclaurin handles a band around 0 directly; at s = 0 the
    // reflection is the indeterminate form sin(0)·zeta(1).
    if s >= -0.5 {
        return Ok(hurwitz_em(s, 1.0).value.to_f64());
    }
    if s < -170.0 {
        return Err(Error::domain(format!("zeta reflection overflows for s = {s}")));
    }
    let sp = sin_pi(s / 2.0);
    if sp == 0.0 {
        return Ok(0.0); // trivial zeros at negative even integers
    }
    let z = hurwitz_em(1.0 - s, 1.0).value.to_f64();
    let lngamma = crate::special::log_gamma(1.0 - s).expect("1 - s > 1");
    let chi = (s * std::f64::consts::LN_2 + (s - 1.0) * PI.ln() + lngamma).exp();
    Ok(chi * sp * z)
}

/// ζ′(s) for s > 1 (term-wise derivative of the Euler–Maclaurin expansion).
pub(crate) fn riemann_zeta_prime(s: f64) -> f64 {
    debug_assert!(s > 1.0);
    hurwitz_em(s, 1.0).deriv.to_f64()
}

/// Derivative of the Riemann zeta function at nonpositive integers, ζ′(−n).
///
/// * n = 0: ζ′(0) = −ln √(2π).
/// * n = 2k > 0: ζ′(−2k) = (−1)^k (2k)! ζ(2k+1) / (2 (2π)^{2k}).
/// * n odd: from the derivative of the functional equation,
///   ζ′(−n) = ζ(−n)[ln 2π − ψ(n+1)] − sin(−πn/2) 2^{−n} π^{−n−1} n! ζ′(n+1).
pub fn zeta_prime_neg(n: u32) -> f64 {
    if n == 0 {
        return -LN_SQRT_2PI;
    }
    let nf = n as f64;
    if n % 2 == 0 {
        let k = n / 2;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let zeta_odd = hurwitz_em(nf + 1.0, 1.0).value.to_f64();
        // (2k)! / (2 (2pi)^{2k}) in log form to stay clear of overflow
        let ln_mag = crate::special::log_gamma(nf + 1.0).expect("positive argument")
            - nf * (2.0 * PI).ln()
            - std::f64::consts::LN_2;
        sign * ln_mag.exp() * zeta_odd
    } else {
        let zeta_neg = -rational_f64(&(bernoulli_number(n + 1) / Rational::from_integer((n as i64 + 1).into())));
        let psi_np1 = crate::special::digamma(nf + 1.0).expect("positive argument");
        let sin_term = match n % 4 {
            1 => -1.0,
            _ => 1.0, // n % 4 == 3
        };
        let zp = riemann_zeta_prime(nf + 1.0);
        let ln_mag = -nf * std::f64::consts::LN_2 - (nf + 1.0) * PI.ln()
            + crate::special::log_gamma(nf + 1.0).expect("positive argument");
        zeta_neg * ((2.0 * PI).ln() - psi_np1) - sin_term * ln_mag.exp() * zp
    }
}

fn rational_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational within f64 range")
}
