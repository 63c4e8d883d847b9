//! JSON job runner used by the `nczeta` binary.
//!
//! Exit codes: 0 success, 1 input error (unreadable file, bad JSON, schema
//! violation, budget exceeded), 2 verification failure.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::exact::{IntMatrix, Rational, RationalFunction};
use crate::lattice::{kernels, numerical_quotient, quiver_euler_form, BilinearLattice, KernelReport, NumericalQuotient};
use crate::points::{hasse_weil_zeta, CountOptions, ProjectiveScheme, SchemeInput, SchemeZetaReport, DEFAULT_BUDGET};
use crate::witt::{ghost, unghost, witt_add, witt_mul, GhostVector, WittVector};
use crate::zeta::{
    determinant, functional_equation_check, verify_series_equals_det, zeta_det, zeta_report, FunctionalEquationCheck,
    SemisimpleBlockData, SuperRealization, ZetaReport, DEFAULT_PRECISION,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Lattice,
    Witt,
    ZetaRealize,
    ZetaFunctional,
    ZetaDet,
    ZetaScheme,
    /// Cross-check the realization at `input_path` against this scheme file.
    Check { scheme_path: PathBuf },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub input_path: PathBuf,
    /// Series precision, or number of counted terms for schemes. `None`
    /// picks a default per command.
    pub precision: Option<usize>,
    pub budget: u64,
    /// 0 means one worker per core.
    pub workers: usize,
    pub output: OutputFormat,
}

impl JobSpec {
    pub fn new(command: Command, input_path: impl Into<PathBuf>) -> Self {
        JobSpec {
            command,
            input_path: input_path.into(),
            precision: None,
            budget: budget_from_env(),
            workers: 0,
            output: OutputFormat::Json,
        }
    }

    pub fn with_precision(mut self, precision: usize) -> Self {
        self.precision = Some(precision);
        self
    }

    fn count_options(&self) -> CountOptions {
        CountOptions { budget: self.budget, workers: self.workers }
    }
}

/// `ZETA_BUDGET` if set to a positive integer, else the library default.
pub fn budget_from_env() -> u64 {
    std::env::var("ZETA_BUDGET").ok().and_then(|s| s.trim().parse().ok()).filter(|&b| b > 0).unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Input error with the file it came from.
#[derive(Debug)]
pub struct JobError {
    pub path: PathBuf,
    pub message: String,
}

impl fmt::Display for JobError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path.display(), self.message)
    }
}

impl std::error::Error for JobError {}

fn input_error(path: &Path, e: impl fmt::Display) -> JobError {
    JobError { path: path.to_path_buf(), message: e.to_string() }
}

fn load<T: DeserializeOwned>(path: &Path) -> Result<T, JobError> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(path, format!("cannot read file: {e}")))?;
    serde_json::from_str(&text).map_err(|e| input_error(path, format!("invalid input: {e}")))
}

/// Lattice given as the Euler form of an acyclic quiver:
/// `{"adjacency": [[0,1],[0,0]], "label": "A2"}`.
#[derive(Clone, Debug, Deserialize)]
pub struct QuiverInput {
    pub adjacency: IntMatrix,
    #[serde(default)]
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub label: String,
    pub rank: usize,
    pub gram: IntMatrix,
    pub left_kernel_rank: usize,
    pub right_kernel_rank: usize,
    pub kernels: KernelReport,
    pub quotient: Option<NumericalQuotient>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WittOp {
    Add,
    Mul,
    Neg,
    Ghost,
    Unghost,
}

/// `{"op": "mul", "a": ["1", "1"], "b": ["1", "2"]}`. Operands are
/// coefficient lists; for `unghost` the operand is a ghost vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittJob {
    pub op: WittOp,
    pub a: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittReport {
    pub op: WittOp,
    pub result: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationReport {
    pub label: String,
    /// `det(I − tT₋)/det(I − tT₊)` in factored notation.
    pub rational_form: String,
    pub zeta: RationalFunction,
    pub series_matches_det: bool,
    pub report: ZetaReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterminantReport {
    pub determinant: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub realization_label: String,
    pub scheme_label: String,
    pub realization_zeta: String,
    pub scheme_zeta: String,
    pub terms: usize,
    pub counts: Vec<u64>,
    pub matches: bool,
}

enum Failure {
    Input(JobError),
    /// Mathematical failure with no report to show.
    Verify(String),
}

impl From<JobError> for Failure {
    fn from(e: JobError) -> Self {
        Failure::Input(e)
    }
}

fn lib_error(path: &Path, e: Error) -> Failure {
    match e {
        Error::NotRational { .. } | Error::NoSignWorks | Error::KernelsDisagree => {
            Failure::Verify(format!("{}: {e}", path.display()))
        }
        e => Failure::Input(input_error(path, e)),
    }
}

/// JSON value of the report and whether it passed verification.
type Produced = (Value, bool);

fn to_value<T: Serialize>(report: &T) -> Value {
    serde_json::to_value(report).expect("reports serialize")
}

fn run_lattice(path: &Path) -> Result<Produced, Failure> {
    let value: Value = load(path)?;
    let parsed = |e: serde_json::Error| input_error(path, format!("invalid input: {e}"));
    let lattice = if value.get("adjacency").is_some() {
        let quiver: QuiverInput = serde_json::from_value(value).map_err(parsed)?;
        let n = quiver.adjacency.rows();
        let mut l = quiver_euler_form(&quiver.adjacency, n).map_err(|e| lib_error(path, e))?;
        l.label = quiver.label;
        l
    } else {
        let l: BilinearLattice = serde_json::from_value(value).map_err(parsed)?;
        l.validate().map_err(|e| lib_error(path, e))?;
        l
    };
    let k = kernels(&lattice);
    let quotient = numerical_quotient(&lattice).ok();
    let ok = k.agree;
    let report = LatticeReport {
        label: lattice.label.clone(),
        rank: lattice.rank,
        gram: lattice.gram.clone(),
        left_kernel_rank: k.left_basis.len(),
        right_kernel_rank: k.right_basis.len(),
        kernels: k,
        quotient,
    };
    Ok((to_value(&report), ok))
}

fn run_witt(path: &Path) -> Result<Produced, Failure> {
    let job: WittJob = load(path)?;
    let err = |e| lib_error(path, e);
    let witt = |coeffs: &[Rational]| WittVector::from_coeffs(coeffs.to_vec()).map_err(err);
    let second = || {
        job.b.as_deref().ok_or_else(|| Failure::Input(input_error(path, "missing field `b` for a binary operation")))
    };
    let result = match job.op {
        WittOp::Add => witt_add(&witt(&job.a)?, &witt(second()?)?).map_err(err)?.into_series().into_coeffs(),
        WittOp::Mul => witt_mul(&witt(&job.a)?, &witt(second()?)?).map_err(err)?.into_series().into_coeffs(),
        WittOp::Neg => witt(&job.a)?.neg().into_series().into_coeffs(),
        WittOp::Ghost => ghost(&witt(&job.a)?).components().to_vec(),
        WittOp::Unghost => unghost(&GhostVector::new(job.a.clone())).into_series().into_coeffs(),
    };
    Ok((to_value(&WittReport { op: job.op, result }), true))
}

fn load_realization(path: &Path) -> Result<SuperRealization, Failure> {
    let r: SuperRealization = load(path)?;
    r.validate().map_err(|e| lib_error(path, e))?;
    Ok(r)
}

fn run_realize(path: &Path, precision: usize) -> Result<Produced, Failure> {
    let r = load_realization(path)?;
    let err = |e| lib_error(path, e);
    let zeta = zeta_det(&r).map_err(err)?;
    let series_matches_det = verify_series_equals_det(&r, precision).map_err(err)?;
    let report = zeta_report(&r, precision).map_err(err)?;
    let ok = series_matches_det && report.functional_eq.as_ref().is_none_or(|f| f.holds);
    let out = RealizationReport {
        label: r.label.clone(),
        rational_form: zeta.to_string(),
        zeta,
        series_matches_det,
        report,
    };
    Ok((to_value(&out), ok))
}

fn run_functional(path: &Path) -> Result<Produced, Failure> {
    let r = load_realization(path)?;
    let check: FunctionalEquationCheck = functional_equation_check(&r).map_err(|e| lib_error(path, e))?;
    let ok = check.holds;
    Ok((to_value(&check), ok))
}

fn run_det(path: &Path) -> Result<Produced, Failure> {
    let blocks: SemisimpleBlockData = load(path)?;
    let d = determinant(&blocks).map_err(|e| lib_error(path, e))?;
    Ok((to_value(&DeterminantReport { determinant: d }), true))
}

fn load_scheme(path: &Path) -> Result<ProjectiveScheme, Failure> {
    let input: SchemeInput = load(path)?;
    ProjectiveScheme::from_input(&input).map_err(|e| lib_error(path, e))
}

fn run_scheme(path: &Path, terms: usize, opts: &CountOptions) -> Result<Produced, Failure> {
    let x = load_scheme(path)?;
    let report: SchemeZetaReport = hasse_weil_zeta(&x, terms, opts).map_err(|e| lib_error(path, e))?;
    let ok = report.functional_eq.is_some();
    Ok((to_value(&report), ok))
}

/// Compares `zeta_det` of a realization with the Hasse–Weil zeta of a scheme.
/// With `terms = None` the scheme is counted to twice the larger degree of the
/// realization's zeta.
pub fn cross_check(
    realization_path: &Path,
    scheme_path: &Path,
    terms: Option<usize>,
    opts: &CountOptions,
) -> Result<CrossCheckReport, JobError> {
    match cross_check_inner(realization_path, scheme_path, terms, opts) {
        Ok(r) => Ok(r),
        Err(Failure::Input(e)) => Err(e),
        Err(Failure::Verify(m)) => Err(JobError { path: scheme_path.to_path_buf(), message: m }),
    }
}

fn cross_check_inner(
    realization_path: &Path,
    scheme_path: &Path,
    terms: Option<usize>,
    opts: &CountOptions,
) -> Result<CrossCheckReport, Failure> {
    let r = load_realization(realization_path)?;
    let x = load_scheme(scheme_path)?;
    let from_matrices = zeta_det(&r).map_err(|e| lib_error(realization_path, e))?;
    let degree = from_matrices.num().degree_or_zero().max(from_matrices.den().degree_or_zero());
    let terms = terms.unwrap_or((2 * degree).max(2));
    let (scheme_zeta, counts) = match hasse_weil_zeta(&x, terms, opts) {
        Ok(report) => (Some(report.rational), report.counts),
        // A series with no small rational form cannot match.
        Err(Error::NotRational { .. }) => (None, Vec::new()),
        Err(e) => return Err(lib_error(scheme_path, e)),
    };
    Ok(CrossCheckReport {
        realization_label: r.label.clone(),
        scheme_label: x.label.clone(),
        realization_zeta: from_matrices.to_string(),
        scheme_zeta: scheme_zeta.as_ref().map_or_else(|| "not rational at this precision".into(), |z| z.to_string()),
        terms,
        counts,
        matches: scheme_zeta.as_ref() == Some(&from_matrices),
    })
}

/// Renders a report as `key  value` lines.
pub fn render_table(value: &Value) -> String {
    let mut out = String::new();
    flatten("", value, &mut out);
    out
}

fn flatten(prefix: &str, value: &Value, out: &mut String) {
    match value {
        Value::Object(map) if !map.is_empty() && !is_leafy(value) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix:<28} {s}\n")),
        v => out.push_str(&format!("{prefix:<28} {v}\n")),
    }
}

/// Small objects such as superdimensions read better on one line.
fn is_leafy(value: &Value) -> bool {
    matches!(value, Value::Object(m) if m.len() <= 2 && m.values().all(|v| v.is_number()))
}

/// Runs one job and collects what would be printed.
pub fn run(job: &JobSpec) -> Outcome {
    let path = job.input_path.as_path();
    let precision = job.precision.unwrap_or(DEFAULT_PRECISION);
    let produced = match &job.command {
        Command::Lattice => run_lattice(path),
        Command::Witt => run_witt(path),
        Command::ZetaRealize => run_realize(path, precision),
        Command::ZetaFunctional => run_functional(path),
        Command::ZetaDet => run_det(path),
        Command::ZetaScheme => run_scheme(path, precision, &job.count_options()),
        Command::Check { scheme_path } => {
            cross_check_inner(path, scheme_path, job.precision, &job.count_options()).map(|r| {
                let ok = r.matches;
                (to_value(&r), ok)
            })
        }
    };
    match produced {
        Ok((value, ok)) => {
            let stdout = match job.output {
                OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("json")),
                OutputFormat::Table => render_table(&value),
            };
            let stderr = if ok { String::new() } else { "verification failed\n".to_string() };
            Outcome { code: if ok { EXIT_OK } else { EXIT_VERIFY }, stdout, stderr }
        }
        Err(Failure::Input(e)) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
        Err(Failure::Verify(m)) => Outcome { code: EXIT_VERIFY, stdout: String::new(), stderr: format!("verification failed: {m}\n") },
    }
}

