//! Bernoulli numbers and polynomials, harmonic numbers.
//!
//! Bernoulli numbers are computed once by the defining recurrence
//! Σ_{j=0}^{k} C(k+1, j) B_j = 0 over exact rationals and memoized; the
//! cache is idempotent under concurrent fills.

use std::sync::Mutex;
use std::sync::OnceLock;

use num::{BigInt, BigRational, FromPrimitive, One, ToPrimitive, Zero};

use super::combinatorics::binomial;
use crate::dd::Dd;

/// Exact integer-ratio scalar; always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

fn bernoulli_cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        Mutex::new(vec![
            Rational::one(),
            Rational::new(BigInt::from(-1), BigInt::from(2)),
        ])
    })
}

/// Bernoulli number B_k (convention B_1 = −1/2).
pub fn bernoulli_number(k: u32) -> Rational {
    let k = k as usize;
    if k > 1 && k % 2 == 1 {
        return Rational::zero();
    }
    let mut cache = bernoulli_cache().lock().expect("bernoulli cache poisoned");
    while cache.len() <= k {
        let m = cache.len(); // computing B_m
        let mut acc = Rational::zero();
        for (j, b) in cache.iter().enumerate() {
            if !b.is_zero() {
                acc += Rational::from(binomial(m as i64 + 1, j as i64)) * b;
            }
        }
        let m1 = Rational::from_i64(m as i64 + 1).unwrap();
        cache.push(-acc / m1);
    }
    cache[k].clone()
}

/// B_k as f64.
pub(crate) fn bernoulli_f64(k: u32) -> f64 {
    rational_to_f64(&bernoulli_number(k))
}

/// B_k exactly rounded to double-double.
pub(crate) fn bernoulli_dd(k: u32) -> Dd {
    rational_to_dd(&bernoulli_number(k))
}

/// B_m(q) with the Horner pass in double-double; used where the closed forms
/// cancel heavily.
pub(crate) fn bernoulli_polynomial_dd(m: u32, q: f64) -> Dd {
    let mut acc = Dd::ZERO;
    for k in 0..=m {
        let coeff = Rational::from(binomial(m as i64, k as i64)) * bernoulli_number(k);
        acc = acc.mul_f64(q).add(rational_to_dd(&coeff));
    }
    acc
}

/// H_n exactly rounded to double-double.
pub(crate) fn harmonic_dd(n: u32) -> Dd {
    rational_to_dd(&harmonic(n))
}

/// Bernoulli polynomial B_m(q) = Σ_{k=0}^{m} C(m,k) B_k q^{m−k}.
pub fn bernoulli_polynomial(m: u32, q: f64) -> f64 {
    // Horner over the exact coefficients of q^0 .. q^m.
    let mut acc = 0.0;
    for k in 0..=m {
        let coeff = Rational::from(binomial(m as i64, k as i64)) * bernoulli_number(k);
        acc = acc * q + rational_to_f64(&coeff);
    }
    acc
}

/// Harmonic number H_n = Σ_{r=1}^{n} 1/r, with H_0 = 0, as an exact rational.
pub fn harmonic(n: u32) -> Rational {
    let mut h = Rational::zero();
    for r in 1..=n {
        h += Rational::new(BigInt::one(), BigInt::from(r));
    }
    h
}

/// H_n as f64.
pub fn harmonic_f64(n: u32) -> f64 {
    let mut h = 0.0;
    for r in 1..=n {
        h += 1.0 / r as f64;
    }
    h
}

/// Exactly rounded double-double image of a rational.
fn rational_to_dd(r: &Rational) -> Dd {
    let hi = rational_to_f64(r);
    let rem = r - Rational::from_f64(hi).expect("finite f64");
    Dd { hi, lo: rational_to_f64(&rem) }
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational within f64 range")
}

/// The Euler–Maclaurin correction coefficients B_{2j}/(2j)! for j = 1..=J,
/// in double-double precision.
pub(crate) fn bernoulli_over_factorial_dd() -> &'static [Dd] {
    const J: u32 = 14;
    static COEFFS: OnceLock<Vec<Dd>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut v = Vec::with_capacity(J as usize);
        let mut fact = BigInt::one();
        for i in 2..=2 * J {
            if i % 2 == 1 {
                fact *= BigInt::from(i);
                continue;
            }
            fact *= BigInt::from(i);
            let c = bernoulli_number(i) / Rational::from(fact.clone());
            v.push(rational_to_dd(&c));
        }
        v
    })
}
