//! Suite configuration: defaults, JSON config files and the environment
//! variable hook.

use serde::Deserialize;

/// Environment variable naming a JSON config file with suite defaults.
pub const CONFIG_ENV_VAR: &str = "ZETAKERN_CONFIG";

/// Output encoding for reports and tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<OutputFormat, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format '{other}' (json|csv)")),
        }
    }
}

/// Configuration of one verification run.
///
/// The q-grid default covers the values where the printed special values
/// live (1/4, 1/2, 1) plus 2 and 4.
#[derive(Debug, Clone, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Relative tolerance for closed-form vs oracle records.
    pub rel_tol: f64,
    /// A record also passes when within `safety_factor` times the oracle's
    /// own error estimate.
    pub safety_factor: f64,
    pub q_grid: Vec<f64>,
    /// Largest I-family subscript with the Bose kernel.
    pub k_max_i: u32,
    /// Largest T-family subscript with the Bose kernel (even entries only).
    pub k_max_t: u32,
    /// Largest L-family subscript with the Bose kernel (odd entries only).
    pub k_max_l: u32,
    /// Variant (Fermi/csch) family parameter bound: I up to k, T up to 2k,
    /// L up to 2k+1.
    pub k_max_variants: u32,
    /// Relative tolerance requested from the quadrature oracle.
    pub oracle_rel_tol: f64,
    pub output_format: OutputFormat,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            rel_tol: 1e-9,
            safety_factor: 10.0,
            q_grid: vec![0.25, 0.5, 1.0, 2.0, 4.0],
            k_max_i: 8,
            k_max_t: 10,
            k_max_l: 11,
            k_max_variants: 3,
            oracle_rel_tol: 1e-11,
            output_format: OutputFormat::Json,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !(1e-13..=1e-3).contains(&self.rel_tol) {
            return Err(format!("rel_tol must lie in [1e-13, 1e-3], got {:e}", self.rel_tol));
        }
        if !(self.safety_factor >= 0.0) {
            return Err(format!("safety_factor must be >= 0, got {}", self.safety_factor));
        }
        if !(1e-14..=1e-3).contains(&self.oracle_rel_tol) {
            return Err(format!(
                "oracle_rel_tol must lie in [1e-14, 1e-3], got {:e}",
                self.oracle_rel_tol
            ));
        }
        if self.q_grid.iter().any(|q| !(*q > 0.0) || !q.is_finite()) {
            return Err("q_grid entries must be positive and finite".to_string());
        }
        Ok(())
    }

    pub fn from_file(path: &std::path::Path) -> Result<SuiteConfig, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let cfg: SuiteConfig = serde_json::from_str(&text)
            .map_err(|e| format!("cannot parse config {}: {e}", path.display()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Explicit path, else the `ZETAKERN_CONFIG` environment variable, else
    /// built-in defaults.
    pub fn resolve(explicit: Option<&std::path::Path>) -> Result<SuiteConfig, String> {
        if let Some(p) = explicit {
            return SuiteConfig::from_file(p);
        }
        if let Ok(p) = std::env::var(CONFIG_ENV_VAR) {
            if !p.is_empty() {
                return SuiteConfig::from_file(std::path::Path::new(&p));
            }
        }
        Ok(SuiteConfig::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        assert!(SuiteConfig::default().validate().is_ok());
    }

    #[test]
    fn bad_tolerances_rejected() {
        let mut cfg = SuiteConfig::default();
        cfg.rel_tol = 1e-2;
        assert!(cfg.validate().is_err());
        cfg.rel_tol = 1e-14;
        assert!(cfg.validate().is_err());
        let mut cfg = SuiteConfig::default();
        cfg.q_grid = vec![1.0, -2.0];
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn parses_partial_json() {
        let cfg: SuiteConfig = serde_json::from_str(r#"{"rel_tol": 1e-10}"#).unwrap();
        assert_eq!(cfg.rel_tol, 1e-10);
        assert_eq!(cfg.q_grid.len(), 5);
    }
}
