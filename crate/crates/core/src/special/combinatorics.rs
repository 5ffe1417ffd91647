//! Binomial coefficients, factorials and the rising factorial.

use num::{BigInt, One, Zero};

/// Exact binomial coefficient C(n, k).
///
/// Out-of-range arguments (k < 0, n < 0 or k > n) return 0, which is the
/// convention the terminating expansions rely on.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// C(n, k) as f64 (exact for results below 2^53).
pub fn binomial_f64(n: u32, k: u32) -> f64 {
    use num::ToPrimitive;
    binomial(n as i64, k as i64).to_f64().unwrap_or(f64::INFINITY)
}

/// n! as f64; exact for n ≤ 22, correctly rounded far beyond.
pub fn factorial_f64(n: u32) -> f64 {
    let mut f = 1.0;
    for i in 2..=n {
        f *= i as f64;
    }
    f
}

/// Rising factorial (z)_n = z (z+1) ··· (z+n−1); the empty product is 1.
pub fn pochhammer(z: f64, n: u32) -> f64 {
    let mut p = 1.0;
    for i in 0..n {
        p *= z + i as f64;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(4, 2), BigInt::from_u32(6).unwrap());
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(6, 3), BigInt::from_u32(20).unwrap());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(-1, 0), BigInt::zero());
    }

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(3.7, 0), 1.0);
        // (-m)_n = (-1)^n n! C(m, n), and it vanishes for n > m.
        assert_eq!(pochhammer(-3.0, 4), 0.0);
        assert_eq!(pochhammer(-3.0, 2), 6.0);
        assert_eq!(pochhammer(2.0, 3), 24.0);
    }
}
