//! Evaluation and verification of the integral families
//!
//! ```text
//! I_k(q) = ∫₀^∞ t / ((1+t²)^{k+1} K(q,t)) dt
//! T_k(q) = ∫₀^∞ t^k arctan(t) / K(q,t) dt
//! L_k(q) = ∫₀^∞ t^k ln(1+t²) / K(q,t) dt
//! ```
//!
//! where `K(q,t)` is one of the kernels `e^{2πqt} − 1`, `e^{2πqt} + 1` or
//! `sinh(2πqt)`.  The `I` family reduces to polygamma functions, `T` with even
//! index and `L` with odd index reduce to derivatives of the Hurwitz zeta
//! function at negative integers (equivalently, balanced negapolygamma
//! functions).  `T` with odd index and `L` with even index have no known
//! closed form and are served by quadrature only.
//!
//! Modules:
//!
//! * [`special`] — exact Bernoulli/harmonic/binomial arithmetic and the
//!   classical floating-point special functions (log-gamma, digamma,
//!   polygamma, Riemann zeta and its derivative at negative integers).
//! * [`hurwitz`] — Hurwitz zeta `ζ(z,q)` and `∂ζ/∂z` through two independent
//!   backends, plus the balanced negapolygamma functions.
//! * [`expansions`] — the finite trigonometric expansions of
//!   `sin/cos(m arctan t)` and the binomial identities behind them, in exact
//!   rational arithmetic.
//! * [`quadrature`] — the adaptive Gauss–Kronrod oracle for semi-infinite
//!   kernel integrals.
//! * [`closed_forms`] — the closed-form evaluators for the three families and
//!   their Fermi/csch variants, with consistency residuals.

pub mod closed_forms;
pub mod constants;
mod dd;
mod em;
pub mod error;
pub mod expansions;
pub mod hurwitz;
pub mod quadrature;
pub mod special;

pub use error::{Error, Result};
