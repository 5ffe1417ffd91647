//! High-precision mathematical constants used by the closed forms and their
//! special-value reductions.
//!
//! Literals are the nearest binary64 to 45-digit arbitrary-precision values.

use std::f64::consts::LN_2;

/// Natural logarithm of π.
pub const LN_PI: f64 = 1.1447298858494002;

/// ln √(2π), defined as (ln 2 + ln π)/2 so the identity holds bit-exactly.
pub const LN_SQRT_2PI: f64 = (LN_2 + LN_PI) * 0.5;

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.5772156649015329;

/// Catalan's constant G = Σ (−1)^n/(2n+1)².
pub const CATALAN: f64 = 0.915965594177219;

/// ζ′(−1) (the logarithm of the Glaisher–Kinkelin constant enters through
/// ζ′(−1) = 1/12 − ln A).
pub const ZETA_PRIME_NEG_1: f64 = -0.16542114370045094;

/// ln Γ(1/4).
pub const LN_GAMMA_QUARTER: f64 = 1.2880225246980774;

/// Apéry's constant ζ(3).
pub const ZETA_3: f64 = 1.2020569031595942;

/// The constants bundle exposed to the verification harness.
#[derive(Debug, Clone, Copy)]
pub struct SpecialConstants {
    pub ln2: f64,
    pub ln_pi: f64,
    pub euler_gamma: f64,
    pub catalan: f64,
    pub zeta_prime_minus1: f64,
    pub ln_gamma_quarter: f64,
    pub ln_sqrt_2pi: f64,
}

impl SpecialConstants {
    pub const STANDARD: SpecialConstants = SpecialConstants {
        ln2: LN_2,
        ln_pi: LN_PI,
        euler_gamma: EULER_GAMMA,
        catalan: CATALAN,
        zeta_prime_minus1: ZETA_PRIME_NEG_1,
        ln_gamma_quarter: LN_GAMMA_QUARTER,
        ln_sqrt_2pi: LN_SQRT_2PI,
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_sqrt_2pi_identity() {
        let c = SpecialConstants::STANDARD;
        assert_eq!(c.ln_sqrt_2pi, (c.ln2 + c.ln_pi) / 2.0);
        assert!((c.ln_sqrt_2pi - 0.9189385332046727).abs() < 2e-16);
    }

    #[test]
    fn constants_consistent_with_runtime_functions() {
        assert!((LN_PI - std::f64::consts::PI.ln()).abs() < 2e-16);
        // Catalan from its defining series (Kahan-style partial sums with an
        // averaged tail to kill the alternating error).
        let mut s = 0.0;
        let n_max = 400_000i64;
        for n in (0..n_max).rev() {
            let d = (2 * n + 1) as f64;
            let t = 1.0 / (d * d);
            s += if n % 2 == 0 { t } else { -t };
        }
        let d = (2 * n_max + 1) as f64;
        let tail = 0.5 / (d * d); // average of the two bracketing partial sums
        let approx = s + if n_max % 2 == 0 { tail } else { -tail };
        assert!((CATALAN - approx).abs() < 1e-11);
    }
}
