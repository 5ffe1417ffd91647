//! Exact combinatorial primitives and classical floating special functions.
//!
//! Bernoulli numbers, harmonic numbers and binomial coefficients are kept in
//! exact rational/integer arithmetic; floats appear only at the final
//! conversion.  The gamma-family functions (log-gamma, digamma, polygamma)
//! use argument-raising recurrences into the asymptotic region.

mod bernoulli;
mod combinatorics;
mod gamma;
mod zeta;

pub use bernoulli::{bernoulli_number, bernoulli_polynomial, harmonic, harmonic_f64, Rational};
pub use combinatorics::{binomial, binomial_f64, factorial_f64, pochhammer};
pub use gamma::{digamma, log_gamma, polygamma};
pub use zeta::{riemann_zeta, zeta_prime_neg};

pub(crate) use bernoulli::{
    bernoulli_dd, bernoulli_f64, bernoulli_over_factorial_dd, bernoulli_polynomial_dd, harmonic_dd,
};
