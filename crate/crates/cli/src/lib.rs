//! Batch verification runner behind the `zetakern` CLI: evaluates any family
//! member closed-form and/or by the quadrature oracle, runs the full
//! verification grid plus the identity suites, and renders machine-readable
//! reports (JSON lines or CSV).

pub mod config;
pub mod records;
pub mod render;
pub mod suite;
pub mod tables;
