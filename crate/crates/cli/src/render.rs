//! Report rendering: JSON lines and CSV, deterministic byte-for-byte.
//!
//! Numeric fields are printed with 17 significant digits, which round-trips
//! binary64 losslessly.

use crate::config::OutputFormat;
use crate::records::{IdentityRecord, SuiteReport, VerificationRecord};
use crate::tables::SpecialValueRow;

/// 17 significant digits; `NaN` renders as JSON null.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "null".to_string()
    } else {
        format!("{x:.16e}")
    }
}

pub fn render_report(report: &SuiteReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => render_report_jsonl(report),
        OutputFormat::Csv => render_report_csv(report),
    }
}

fn record_json(r: &VerificationRecord) -> String {
    format!(
        concat!(
            r#"{{"type":"integral","family":"{}","index":{},"kernel":"{}","q":{},"#,
            r#""closed_value":{},"oracle_value":{},"abs_diff":{},"rel_diff":{},"#,
            r#""oracle_error_estimate":{},"status":"{}"}}"#
        ),
        r.id.family.label(),
        r.id.index,
        r.id.kernel.label(),
        fmt_f64(r.q),
        fmt_f64(r.closed_value),
        fmt_f64(r.oracle_value),
        fmt_f64(r.abs_diff),
        fmt_f64(r.rel_diff),
        fmt_f64(r.oracle_error_estimate),
        r.status.label(),
    )
}

fn identity_json(r: &IdentityRecord) -> String {
    format!(
        r#"{{"type":"identity","name":"{}","cases":{},"max_residual":{},"tolerance":{},"status":"{}"}}"#,
        r.name,
        r.cases,
        fmt_f64(r.max_residual),
        fmt_f64(r.tolerance),
        r.status.label(),
    )
}

/// Versioned JSON-lines report: header, one line per record, summary last.
pub fn render_report_jsonl(report: &SuiteReport) -> String {
    let mut out = String::new();
    let grid = report.q_grid.iter().map(|q| fmt_f64(*q)).collect::<Vec<_>>().join(",");
    out.push_str(&format!(
        r#"{{"type":"header","schema_version":{},"rel_tol":{},"safety_factor":{},"q_grid":[{}]}}"#,
        report.schema_version,
        fmt_f64(report.rel_tol),
        fmt_f64(report.safety_factor),
        grid,
    ));
    out.push('\n');
    for r in &report.records {
        out.push_str(&record_json(r));
        out.push('\n');
    }
    for r in &report.identities {
        out.push_str(&identity_json(r));
        out.push('\n');
    }
    out.push_str(&format!(
        r#"{{"type":"summary","integral_records":{},"identity_checks":{},"pass":{},"fail":{},"status":"{}"}}"#,
        report.summary.integral_records,
        report.summary.identity_checks,
        report.summary.pass,
        report.summary.fail,
        if report.summary.all_pass() { "pass" } else { "fail" },
    ));
    out.push('\n');
    out
}

pub const CSV_HEADER: &str = "type,name,family,index,kernel,q,closed_value,oracle_value,\
abs_diff,rel_diff,oracle_error_estimate,max_residual,tolerance,cases,status";

fn csv_f64(x: f64) -> String {
    if x.is_nan() {
        String::new()
    } else {
        format!("{x:.16e}")
    }
}

/// CSV with a unified column set; identity rows leave the integral columns
/// empty and vice versa.
pub fn render_report_csv(report: &SuiteReport) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in &report.records {
        out.push_str(&format!(
            "integral,,{},{},{},{},{},{},{},{},{},,,,{}\n",
            r.id.family.label(),
            r.id.index,
            r.id.kernel.label(),
            csv_f64(r.q),
            csv_f64(r.closed_value),
            csv_f64(r.oracle_value),
            csv_f64(r.abs_diff),
            csv_f64(r.rel_diff),
            csv_f64(r.oracle_error_estimate),
            r.status.label(),
        ));
    }
    for r in &report.identities {
        out.push_str(&format!(
            "identity,{},,,,,,,,,,{},{},{},{}\n",
            r.name,
            csv_f64(r.max_residual),
            csv_f64(r.tolerance),
            r.cases,
            r.status.label(),
        ));
    }
    out.push_str(&format!(
        "summary,,,,,,,,,,,,,{},{}\n",
        report.summary.integral_records + report.summary.identity_checks,
        if report.summary.all_pass() { "pass" } else { "fail" },
    ));
    out
}

/// One eval-command record.
pub fn render_eval(r: &VerificationRecord, mode: &str, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = record_json(r);
            // annotate the mode without disturbing the schema
            s.insert_str(s.len() - 1, &format!(r#","mode":"{mode}""#));
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            out.push_str(&format!(
                "integral,,{},{},{},{},{},{},{},{},{},,,,{}\n",
                r.id.family.label(),
                r.id.index,
                r.id.kernel.label(),
                csv_f64(r.q),
                csv_f64(r.closed_value),
                csv_f64(r.oracle_value),
                csv_f64(r.abs_diff),
                csv_f64(r.rel_diff),
                csv_f64(r.oracle_error_estimate),
                r.status.label(),
            ));
            out
        }
    }
}

/// The `table` subcommand payloads.
pub fn render_special_values(rows: &[SpecialValueRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut out = String::new();
            for r in rows {
                out.push_str(&format!(
                    r#"{{"type":"special_value","label":"{}","expression":"{}","closed_value":{},"reference_value":{},"abs_diff":{}}}"#,
                    r.label,
                    r.expression,
                    fmt_f64(r.closed),
                    fmt_f64(r.reference),
                    fmt_f64((r.closed - r.reference).abs()),
                ));
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("label,expression,closed_value,reference_value,abs_diff\n");
            for r in rows {
                out.push_str(&format!(
                    "{},\"{}\",{},{},{}\n",
                    r.label,
                    r.expression,
                    csv_f64(r.closed),
                    csv_f64(r.reference),
                    csv_f64((r.closed - r.reference).abs()),
                ));
            }
            out
        }
    }
}

pub fn render_named_f64(rows: &[(&'static str, f64)], kind: &str, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut out = String::new();
            for (name, v) in rows {
                out.push_str(&format!(
                    r#"{{"type":"{kind}","name":"{name}","value":{}}}"#,
                    fmt_f64(*v)
                ));
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("name,value\n");
            for (name, v) in rows {
                out.push_str(&format!("{name},{}\n", csv_f64(*v)));
            }
            out
        }
    }
}

pub fn render_fractions(rows: &[(u32, String)], kind: &str, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut out = String::new();
            for (k, v) in rows {
                out.push_str(&format!(r#"{{"type":"{kind}","index":{k},"value":"{v}"}}"#));
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("index,value\n");
            for (k, v) in rows {
                out.push_str(&format!("{k},{v}\n"));
            }
            out
        }
    }
}
