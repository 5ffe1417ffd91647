//! `zetakern` — evaluate and verify the closed-form kernel integrals.
//!
//! Subcommands:
//! * `eval`   — one family member at one q, closed form and/or oracle.
//! * `verify` — the full verification grid plus identity suites.
//! * `table`  — the special-value, Bernoulli and constants tables.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zetakern::closed_forms::{evaluate_closed, oracle_integral, Family, FamilyId};
use zetakern::quadrature::KernelKind;
use zetakern::Error;

use zetakern_cli::config::{OutputFormat, SuiteConfig, CONFIG_ENV_VAR};
use zetakern_cli::records::{RecordStatus, VerificationRecord};
use zetakern_cli::render;
use zetakern_cli::suite::verify_suite;
use zetakern_cli::tables;

#[derive(Parser)]
#[command(
    name = "zetakern",
    about = "Closed-form evaluation and verification of Bose/Fermi/csch kernel integrals",
    long_about = None,
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "I", alias = "i")]
    I,
    #[value(name = "T", alias = "t")]
    T,
    #[value(name = "L", alias = "l")]
    L,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::I => Family::I,
            FamilyArg::T => Family::T,
            FamilyArg::L => Family::L,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelArg {
    Bose,
    Fermi,
    Csch,
}

impl From<KernelArg> for KernelKind {
    fn from(k: KernelArg) -> KernelKind {
        match k {
            KernelArg::Bose => KernelKind::BoseMinus,
            KernelArg::Fermi => KernelKind::FermiPlus,
            KernelArg::Csch => KernelKind::Csch,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Closed,
    Oracle,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    #[value(name = "special_values")]
    SpecialValues,
    Bernoulli,
    Constants,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one family member at one q.
    Eval(EvalArgs),
    /// Run the full verification suite and emit a report.
    Verify(VerifyArgs),
    /// Print one of the built-in tables.
    Table(TableArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Integral family.
    #[arg(long)]
    family: FamilyArg,
    /// Family subscript (e.g. 0 for T_0, 3 for L_3).
    #[arg(long)]
    k: u32,
    /// Kernel.
    #[arg(long, value_enum, default_value = "bose")]
    kernel: KernelArg,
    /// The q parameter (q > 0).
    #[arg(long)]
    q: f64,
    /// What to evaluate.
    #[arg(long, value_enum, default_value = "both")]
    mode: ModeArg,
    /// Relative tolerance (oracle target and both-mode pass rule).
    #[arg(long, default_value_t = 1e-9)]
    rel_tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Config file (JSON); defaults to $ZETAKERN_CONFIG, then built-ins.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override the record tolerance from the config.
    #[arg(long)]
    rel_tol: Option<f64>,
    /// Override the oracle-error safety factor from the config.
    #[arg(long)]
    safety_factor: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// Which table to print.
    #[arg(long, value_enum)]
    which: TableArg,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Table(args) => cmd_table(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    }
}

fn cmd_eval(args: EvalArgs) -> Result<ExitCode, String> {
    let id = FamilyId::new(args.family.into(), args.k, args.kernel.into());
    if !(1e-14..=1e-3).contains(&args.rel_tol) {
        return Err(format!("--rel-tol must lie in [1e-14, 1e-3], got {:e}", args.rel_tol));
    }
    let record = match args.mode {
        ModeArg::Closed => {
            let closed = evaluate_closed(&id, args.q).map_err(|e| e.to_string())?;
            VerificationRecord {
                id,
                q: args.q,
                closed_value: closed.value,
                oracle_value: f64::NAN,
                abs_diff: f64::NAN,
                rel_diff: f64::NAN,
                oracle_error_estimate: f64::NAN,
                status: RecordStatus::Pass,
            }
        }
        ModeArg::Oracle => {
            let oracle = oracle_integral(&id, args.q, args.rel_tol).map_err(|e| e.to_string())?;
            VerificationRecord {
                id,
                q: args.q,
                closed_value: f64::NAN,
                oracle_value: oracle.value,
                abs_diff: f64::NAN,
                rel_diff: f64::NAN,
                oracle_error_estimate: oracle.abs_error_estimate,
                status: RecordStatus::Pass,
            }
        }
        ModeArg::Both => {
            let mut cfg = SuiteConfig::default();
            cfg.rel_tol = args.rel_tol.max(1e-13);
            cfg.oracle_rel_tol = (args.rel_tol * 1e-2).clamp(1e-14, 1e-3);
            VerificationRecord::evaluate(id, args.q, &cfg).map_err(|e| e.to_string())?
        }
    };
    let mode = match args.mode {
        ModeArg::Closed => "closed",
        ModeArg::Oracle => "oracle",
        ModeArg::Both => "both",
    };
    emit(&render::render_eval(&record, mode, args.format.into()), args.out.as_ref())?;
    Ok(if record.status == RecordStatus::Fail { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let mut cfg = SuiteConfig::resolve(args.config.as_deref())?;
    if let Some(t) = args.rel_tol {
        cfg.rel_tol = t;
    }
    if let Some(s) = args.safety_factor {
        cfg.safety_factor = s;
    }
    if let Some(f) = args.format {
        cfg.output_format = f.into();
    }
    cfg.validate()?;
    let report = verify_suite(&cfg).map_err(|e: Error| e.to_string())?;
    emit(&render::render_report(&report, cfg.output_format), args.out.as_ref())?;
    let _ = CONFIG_ENV_VAR; // documented in --help via config resolution
    Ok(if report.summary.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, String> {
    let format: OutputFormat = args.format.into();
    let text = match args.which {
        TableArg::SpecialValues => {
            let rows = tables::special_values().map_err(|e| e.to_string())?;
            render::render_special_values(&rows, format)
        }
        TableArg::Bernoulli => render::render_fractions(&tables::bernoulli_rows(20), "bernoulli", format),
        TableArg::Constants => render::render_named_f64(&tables::constant_rows(), "constant", format),
    };
    emit(&text, args.out.as_ref())?;
    Ok(ExitCode::SUCCESS)
}
