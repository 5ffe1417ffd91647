//! Crate-wide error type.  Domain violations are reported as errors; no
//! public operation returns NaN.

/// Errors produced by the evaluators and the quadrature oracle.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Argument outside the mathematical domain (q ≤ 0, pole, …).
    #[error("domain error: {0}")]
    Domain(String),

    /// The evaluation point is at (or numerically too close to) the z = 1 pole.
    #[error("pole: z = 1 (|z - 1| < {0:e})")]
    Pole(f64),

    /// Structurally invalid argument (wrong index range, bad tolerance, …).
    #[error("argument error: {0}")]
    Argument(String),

    /// The requested combination has no known closed form.
    #[error("no closed form for {0}; use the quadrature oracle")]
    NoClosedForm(String),

    /// The quadrature oracle exhausted its panel budget before reaching the
    /// target accuracy.  Carries the best estimate and its error bound.
    #[error("accuracy target not reached: value ≈ {value:e}, error estimate {error:e}")]
    Accuracy { value: f64, error: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}

/// Checks the `q > 0` precondition shared by almost every operation.
pub(crate) fn require_positive_q(q: f64) -> Result<()> {
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::domain(format!("q must be positive and finite, got {q}")));
    }
    Ok(())
}
