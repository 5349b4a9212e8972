//! Command line front end: `eval`, `table`, `asymptotics`, `prove`.
//!
//! [`run`] does all the work and returns the exit code together with the
//! captured output, so the binary is a thin wrapper and tests can drive every
//! command in-process.
//!
//! Exit codes: 0 success, 1 hypothesis `gamma < gamma_0` fails, 2 precision
//! or witness search exhausted, 3 usage error, 4 internal invariant violated.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::approximants::{
    compute_records, verify_record, witness_with_budget, ApproximantRecord, RecordRow,
};
use crate::arith::{
    format_rational, parse_rational, to_sci_string, Integer, ProblemInstance, Rational,
    RationalInterval,
};
use crate::asymptotics::{
    empirical_exponents, estimate_measure, hypothesis_check, Hypothesis, HypothesisCheck,
};
use crate::error::Error;
use crate::series::{tschakaloff_enclosure, SeriesTermBudget};

pub const EXIT_OK: i32 = 0;
pub const EXIT_HYPOTHESIS: i32 = 1;
pub const EXIT_EXHAUSTED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

/// 2^-64
const DEFAULT_WIDTH: &str = "1/18446744073709551616";
const APPROX_DIGITS: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "tschakaloff",
    version,
    about = "Rational approximations to the Tschakaloff series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enclose T_q(z)
    Eval(CommonArgs),
    /// Tabulate n, m, A_n, B_n and the enclosure of B_n T_q(z) - A_n
    Table(TableArgs),
    /// Empirical versus limiting exponents, gamma and the measure estimate
    Asymptotics(CommonArgs),
    /// Certify T_q(z) != a/b for all integers a
    Prove(ProveArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// q as num/den, |q| > 1
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    /// z as num/den, non-zero
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    #[arg(long = "n-max", default_value_t = 40)]
    n_max: u64,
    /// Enclosure width as num/den
    #[arg(long, default_value = DEFAULT_WIDTH)]
    width: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Self-test: corrupt A_n of this row before the inline checks run
    #[arg(long, hide = true)]
    inject_fault: Option<u64>,
}

#[derive(Debug, Args)]
struct ProveArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Denominator to rule out, a positive integer
    #[arg(long)]
    b: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Validated command parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub q: Rational,
    pub z: Rational,
    pub n_max: u64,
    pub precision_width: Rational,
    pub format: Format,
    pub b: Option<Integer>,
}

impl RunConfig {
    pub fn instance(&self) -> ProblemInstance {
        ProblemInstance::from_rationals(&self.q, &self.z).expect("validated")
    }

    pub fn budget(&self) -> SeriesTermBudget {
        SeriesTermBudget::with_width(self.precision_width.clone()).expect("validated")
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: msg.into(),
    }
}

fn build_config(args: &CommonArgs, b: Option<&str>) -> Result<RunConfig, Failure> {
    let q = parse_rational(&args.q).map_err(|e| usage(e.to_string()))?;
    let z = parse_rational(&args.z).map_err(|e| usage(e.to_string()))?;
    let precision_width = parse_rational(&args.width).map_err(|e| usage(e.to_string()))?;
    if z.is_zero() {
        return Err(usage("z must be non-zero"));
    }
    if q.abs() <= Rational::from_integer(1.into()) {
        return Err(usage(format!("|q| must exceed 1, got q = {q}")));
    }
    if args.n_max == 0 {
        return Err(usage("--n-max must be at least 1"));
    }
    if !precision_width.is_positive() {
        return Err(usage("--width must be positive"));
    }
    let b = match b {
        None => None,
        Some(text) => {
            let value = parse_rational(text).map_err(|e| usage(e.to_string()))?;
            if !value.is_integer() || !value.is_positive() {
                return Err(usage(format!("--b must be a positive integer, got {text}")));
            }
            Some(value.to_integer())
        }
    };
    Ok(RunConfig {
        q,
        z,
        n_max: args.n_max,
        precision_width,
        format: args.format,
        b,
    })
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = exit_code(&err);
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) | Error::Parse { .. } => EXIT_USAGE,
        Error::PrecisionExhausted { .. } | Error::WitnessNotFound { .. } | Error::Estimation(_) => {
            EXIT_EXHAUSTED
        }
        Error::InvariantViolation { .. } => EXIT_INVARIANT,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let (out_path, result) = match &cli.command {
        Command::Eval(a) => (
            a.out.clone(),
            build_config(a, None).and_then(|c| cmd_eval(&c)),
        ),
        Command::Table(t) => (
            t.common.out.clone(),
            build_config(&t.common, None).and_then(|c| cmd_table(&c, t.inject_fault)),
        ),
        Command::Asymptotics(a) => (
            a.out.clone(),
            build_config(a, None).and_then(|c| cmd_asymptotics(&c)),
        ),
        Command::Prove(p) => (
            p.common.out.clone(),
            build_config(&p.common, Some(&p.b)).and_then(|c| cmd_prove(&c)),
        ),
    };
    match result {
        Ok(report) => match out_path {
            None => Outcome {
                code: EXIT_OK,
                stdout: report,
                stderr: String::new(),
            },
            Some(path) => match std::fs::write(&path, report) {
                Ok(()) => Outcome {
                    code: EXIT_OK,
                    stdout: String::new(),
                    stderr: String::new(),
                },
                Err(e) => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                },
            },
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn approx(r: &Rational) -> String {
    to_sci_string(r, APPROX_DIGITS)
}

fn csv_text(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).expect("writing to memory");
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8")
}

fn json_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct EvalJson {
    q: String,
    z: String,
    lo: String,
    hi: String,
    width: String,
    lo_approx: String,
    hi_approx: String,
}

/// `eval`: enclosure of `T_q(z)`.
fn cmd_eval(config: &RunConfig) -> Result<String, Failure> {
    let enc = tschakaloff_enclosure(&config.q, &config.z, &config.budget())?;
    let row = EvalJson {
        q: format_rational(&config.q),
        z: format_rational(&config.z),
        lo: format_rational(enc.lo()),
        hi: format_rational(enc.hi()),
        width: format_rational(&enc.width()),
        lo_approx: approx(enc.lo()),
        hi_approx: approx(enc.hi()),
    };
    Ok(match config.format {
        Format::Json => json_text(&row),
        Format::Csv => csv_text(|w| {
            w.write_record(["q", "z", "lo", "hi", "width", "lo_approx", "hi_approx"])?;
            w.write_record([
                &row.q,
                &row.z,
                &row.lo,
                &row.hi,
                &row.width,
                &row.lo_approx,
                &row.hi_approx,
            ])
        }),
        Format::Text => {
            format!(
            "T_q(z) for q = {}, z = {}\n  lo     {}\n  hi     {}\n  width  {}\n  approx [{}, {}]\n",
            row.q, row.z, row.lo, row.hi, approx(&enc.width()), row.lo_approx, row.hi_approx
        )
        }
    })
}

fn records_for(config: &RunConfig) -> Result<Vec<ApproximantRecord>, Failure> {
    Ok(compute_records(
        &config.instance(),
        1..=config.n_max,
        &config.budget(),
    )?)
}

/// `table`: one row per `n`, with the inline integrality and two-route checks.
fn cmd_table(config: &RunConfig, inject_fault: Option<u64>) -> Result<String, Failure> {
    let inst = config.instance();
    let budget = config.budget();
    let mut records = records_for(config)?;
    if let Some(n) = inject_fault {
        if let Some(rec) = records.iter_mut().find(|r| r.n() == n) {
            *rec = ApproximantRecord::from_parts(
                n,
                rec.a() + 1,
                rec.b().clone(),
                rec.i_tilde().clone(),
            )?;
        }
    }
    for rec in &records {
        verify_record(&inst, rec, &budget)?;
    }
    let rows: Vec<RecordRow> = records.iter().map(ApproximantRecord::to_row).collect();
    Ok(match config.format {
        Format::Json => json_text(&rows),
        Format::Csv => csv_text(|w| {
            w.write_record([
                "n",
                "m",
                "A",
                "B",
                "I_lo",
                "I_hi",
                "nonzero",
                "I_lo_approx",
                "I_hi_approx",
            ])?;
            for (row, rec) in rows.iter().zip(&records) {
                w.write_record([
                    row.n.to_string(),
                    row.m.to_string(),
                    row.a.clone(),
                    row.b.clone(),
                    row.i_lo.clone(),
                    row.i_hi.clone(),
                    row.nonzero.to_string(),
                    approx(rec.i_tilde().lo()),
                    approx(rec.i_tilde().hi()),
                ])?;
            }
            Ok(())
        }),
        Format::Text => {
            let mut s = format!("approximants for q = {}, z = {}\n", config.q, config.z);
            let _ = writeln!(
                s,
                "{:>4} {:>4} {:>8} {:>28} {:>28} {:>8}",
                "n", "m", "nonzero", "I~_n lo", "I~_n hi", "|B_n|"
            );
            for rec in &records {
                let digits = rec.b().abs().to_string().len();
                let _ = writeln!(
                    s,
                    "{:>4} {:>4} {:>8} {:>28} {:>28} {:>8}",
                    rec.n(),
                    rec.m(),
                    rec.nonzero_certified(),
                    approx(rec.i_tilde().lo()),
                    approx(rec.i_tilde().hi()),
                    format!("{digits}d")
                );
            }
            s
        }
    })
}

fn verdict_text(check: &HypothesisCheck) -> &'static str {
    match check.verdict {
        Hypothesis::Holds => "γ < γ0: Theorem hypothesis holds",
        Hypothesis::Fails => "γ ≥ γ0: Theorem hypothesis fails",
        Hypothesis::Indeterminate => "γ ≈ γ0: undecided at working precision",
    }
}

#[derive(Serialize)]
struct ExponentJson {
    n: u64,
    empirical_b: String,
    theoretical_b: String,
    empirical_i: String,
    theoretical_i: String,
}

#[derive(Serialize)]
struct SkipJson {
    n: u64,
    reason: String,
}

#[derive(Serialize)]
struct MeasureJson {
    c_hat: String,
    empirical_exponent: String,
    predicted_exponent: Option<String>,
    last_growth_ratio: String,
    fit_n_min: u64,
    fit_n_max: u64,
}

#[derive(Serialize)]
struct AsymptoticsJson {
    q: String,
    z: String,
    gamma_lo: String,
    gamma_hi: String,
    gamma0_lo: String,
    gamma0_hi: String,
    verdict: String,
    rows: Vec<ExponentJson>,
    skipped: Vec<SkipJson>,
    measure: Option<MeasureJson>,
    measure_error: Option<String>,
}

fn mid_approx(iv: &RationalInterval) -> String {
    approx(&iv.midpoint())
}

/// `asymptotics`: empirical exponents, gamma verdict and measure estimate.
fn cmd_asymptotics(config: &RunConfig) -> Result<String, Failure> {
    let inst = config.instance();
    let check = hypothesis_check(&inst)?;
    let records = records_for(config)?;
    let series = empirical_exponents(&records, &inst)?;
    let measure = estimate_measure(&records, &inst);

    let report = AsymptoticsJson {
        q: format_rational(&config.q),
        z: format_rational(&config.z),
        gamma_lo: approx(check.gamma.lo()),
        gamma_hi: approx(check.gamma.hi()),
        gamma0_lo: approx(check.gamma0.lo()),
        gamma0_hi: approx(check.gamma0.hi()),
        verdict: verdict_text(&check).to_string(),
        rows: series
            .reports
            .iter()
            .map(|r| ExponentJson {
                n: r.n,
                empirical_b: approx(&r.empirical_b),
                theoretical_b: mid_approx(&r.theoretical_b),
                empirical_i: approx(&r.empirical_i),
                theoretical_i: mid_approx(&r.theoretical_i),
            })
            .collect(),
        skipped: series
            .skipped
            .iter()
            .map(|(n, reason)| SkipJson {
                n: *n,
                reason: reason.clone(),
            })
            .collect(),
        measure: measure.as_ref().ok().map(|m| MeasureJson {
            c_hat: approx(&m.c_hat),
            empirical_exponent: approx(&m.empirical_exponent),
            predicted_exponent: m.predicted_exponent.as_ref().map(mid_approx),
            last_growth_ratio: approx(&m.last_growth_ratio),
            fit_n_min: m.fit_ns.first().copied().unwrap_or(0),
            fit_n_max: m.fit_ns.last().copied().unwrap_or(0),
        }),
        measure_error: measure.as_ref().err().map(ToString::to_string),
    };

    Ok(match config.format {
        Format::Json => json_text(&report),
        Format::Csv => csv_text(|w| {
            w.write_record([
                "n",
                "empirical_B",
                "theoretical_B",
                "empirical_I",
                "theoretical_I",
            ])?;
            for r in &report.rows {
                w.write_record([
                    &r.n.to_string(),
                    &r.empirical_b,
                    &r.theoretical_b,
                    &r.empirical_i,
                    &r.theoretical_i,
                ])?;
            }
            Ok(())
        }),
        Format::Text => {
            let mut s = format!("asymptotics for q = {}, z = {}\n", report.q, report.z);
            let _ = writeln!(s, "gamma  in [{}, {}]", report.gamma_lo, report.gamma_hi);
            let _ = writeln!(s, "gamma0 in [{}, {}]", report.gamma0_lo, report.gamma0_hi);
            let _ = writeln!(s, "{}", report.verdict);
            let _ = writeln!(
                s,
                "{:>4} {:>26} {:>26} {:>26} {:>26}",
                "n", "empirical_B", "theoretical_B", "empirical_I", "theoretical_I"
            );
            for r in &report.rows {
                let _ = writeln!(
                    s,
                    "{:>4} {:>26} {:>26} {:>26} {:>26}",
                    r.n, r.empirical_b, r.theoretical_b, r.empirical_i, r.theoretical_i
                );
            }
            for k in &report.skipped {
                let _ = writeln!(s, "skipped n = {}: {}", k.n, k.reason);
            }
            match (&report.measure, &report.measure_error) {
                (Some(m), _) => {
                    let _ = writeln!(
                        s,
                        "measure fit over n in [{}, {}]",
                        m.fit_n_min, m.fit_n_max
                    );
                    let _ = writeln!(s, "  c_hat              {}", m.c_hat);
                    let _ = writeln!(s, "  empirical exponent {}", m.empirical_exponent);
                    if let Some(p) = &m.predicted_exponent {
                        let _ = writeln!(s, "  predicted exponent {p}");
                    }
                    let _ = writeln!(s, "  log|B_(n+1)|/log|B_n| {}", m.last_growth_ratio);
                }
                (None, Some(e)) => {
                    let _ = writeln!(s, "measure: unavailable ({e})");
                }
                (None, None) => {}
            }
            s
        }
    })
}

#[derive(Serialize)]
struct ProveJson {
    q: String,
    z: String,
    b: String,
    n: u64,
    m: u64,
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B")]
    b_n: String,
    #[serde(rename = "bI_lo")]
    scaled_lo: String,
    #[serde(rename = "bI_hi")]
    scaled_hi: String,
    statement: String,
}

const CERTIFICATE: &str = "0 < |b·Ĩ_n| < 1, hence T_q(z) ≠ a/b for all integers a";

/// `prove`: per-denominator irrationality certificate.
fn cmd_prove(config: &RunConfig) -> Result<String, Failure> {
    let inst = config.instance();
    let b = config.b.as_ref().expect("prove always carries b");
    let check = hypothesis_check(&inst)?;
    if !check.holds() {
        return Err(Failure {
            code: EXIT_HYPOTHESIS,
            message: format!(
                "γ ≥ γ0, method inapplicable (gamma in [{}, {}])",
                approx(check.gamma.lo()),
                approx(check.gamma.hi())
            ),
        });
    }
    let witness = witness_with_budget(&inst, b, config.n_max, &config.budget())?;
    let rec = &witness.record;
    let proof = ProveJson {
        q: format_rational(&config.q),
        z: format_rational(&config.z),
        b: b.to_string(),
        n: rec.n(),
        m: rec.m(),
        a: rec.a().to_string(),
        b_n: rec.b().to_string(),
        scaled_lo: format_rational(witness.scaled.lo()),
        scaled_hi: format_rational(witness.scaled.hi()),
        statement: CERTIFICATE.to_string(),
    };
    Ok(match config.format {
        Format::Json => json_text(&proof),
        Format::Csv => csv_text(|w| {
            w.write_record(["q", "z", "b", "n", "m", "A", "B", "bI_lo", "bI_hi"])?;
            w.write_record([
                &proof.q,
                &proof.z,
                &proof.b,
                &proof.n.to_string(),
                &proof.m.to_string(),
                &proof.a,
                &proof.b_n,
                &proof.scaled_lo,
                &proof.scaled_hi,
            ])
        }),
        Format::Text => format!(
            "witness for q = {}, z = {}, b = {}\n  n = {}, m = {}\n  A_n = {}\n  B_n = {}\n  b·Ĩ_n in [{}, {}]\n         ≈ [{}, {}]\n{}\n",
            proof.q,
            proof.z,
            proof.b,
            proof.n,
            proof.m,
            proof.a,
            proof.b_n,
            proof.scaled_lo,
            proof.scaled_hi,
            approx(witness.scaled.lo()),
            approx(witness.scaled.hi()),
            CERTIFICATE
        ),
    })
}
