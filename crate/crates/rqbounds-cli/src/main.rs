//! Command-line frontend: read operators and vectors from files, run the
//! bound catalogue, the randomized verification harness, or a named
//! experiment, and emit text or JSON reports.
//!
//! Exit codes: 0 when everything certified holds, 1 on a certification
//! failure, 2 on input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use rqbounds::bounds::{run_catalogue, BoundOutcome};
use rqbounds::experiments::{
    davis_kahan, invariant_subspace_tightness, random_verification, sin_theta_counterexample,
    ExperimentResult, FieldChoice,
};
use rqbounds::{HermitianOperator, Matrix, Vector};

use rqbounds_cli::{json, mtx};
use mtx::{MatrixData, VectorData};

const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "rqbounds",
    version,
    about = "Certified Rayleigh-quotient perturbation identities and eigenvalue error bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Real,
    Complex,
}

impl From<FieldArg> for FieldChoice {
    fn from(value: FieldArg) -> Self {
        match value {
            FieldArg::Real => FieldChoice::Real,
            FieldArg::Complex => FieldChoice::Complex,
        }
    }
}

/// Inclusive dimension range, written MIN..MAX.
#[derive(Clone, Copy)]
struct DimRange {
    lo: usize,
    hi: usize,
}

impl std::str::FromStr for DimRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected MIN..MAX, got {s:?}"))?;
        let lo: usize = lo.parse().map_err(|_| format!("bad lower bound {lo:?}"))?;
        let hi: usize = hi.parse().map_err(|_| format!("bad upper bound {hi:?}"))?;
        if lo > hi {
            return Err(format!("empty dimension range {s:?}"));
        }
        Ok(DimRange { lo, hi })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the bound catalogue for a Hermitian operator and a probe vector
    Bounds {
        /// Matrix Market file with the operator
        #[arg(long)]
        matrix: PathBuf,
        /// Probe vector: Matrix Market single column, or one number per line
        #[arg(long)]
        vector: PathBuf,
        /// Optional reference eigenvector enabling the a priori and mixed bounds
        #[arg(long = "ref-vector")]
        ref_vector: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run the randomized identity and inequality verification harness
    Verify {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Inclusive matrix dimension range, MIN..MAX
        #[arg(long, default_value = "2..12")]
        dims: DimRange,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FieldArg::Real)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run a named experiment: davis-kahan, sin-theta, or tightness
    Example {
        name: String,
        /// Truncation level for davis-kahan
        #[arg(long, default_value_t = 64)]
        n: usize,
        /// Ratio for davis-kahan, in (0, 1)
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
        /// Seed for tightness
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use the index-shifted probe in davis-kahan
        #[arg(long, default_value_t = false)]
        shifted: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<u8, String> {
    match command {
        Command::Bounds {
            matrix,
            vector,
            ref_vector,
            format,
        } => run_bounds(&matrix, &vector, ref_vector.as_deref(), format),
        Command::Verify {
            trials,
            dims,
            seed,
            field,
            format,
        } => {
            let result = random_verification(trials, dims.lo..=dims.hi, field.into(), seed)
                .map_err(|e| e.to_string())?;
            let inputs = json::Object::new()
                .int_field("trials", trials as u64)
                .int_field("dim_min", dims.lo as u64)
                .int_field("dim_max", dims.hi as u64)
                .int_field("seed", seed)
                .str_field(
                    "field",
                    match field {
                        FieldArg::Real => "real",
                        FieldArg::Complex => "complex",
                    },
                )
                .finish();
            emit_experiment("verify", &result, &inputs, format);
            Ok(if result.pass { 0 } else { 1 })
        }
        Command::Example {
            name,
            n,
            eps,
            seed,
            shifted,
            format,
        } => {
            let result = match name.as_str() {
                "davis-kahan" | "davis_kahan" => {
                    davis_kahan(n, eps, shifted).map_err(|e| e.to_string())?
                }
                "sin-theta" | "sin_theta" => {
                    sin_theta_counterexample().map_err(|e| e.to_string())?
                }
                "tightness" => invariant_subspace_tightness(seed).map_err(|e| e.to_string())?,
                other => {
                    return Err(format!(
                        "unknown example {other:?} (expected davis-kahan, sin-theta or tightness)"
                    ))
                }
            };
            let inputs = json::Object::new()
                .str_field("name", &name)
                .int_field("n", n as u64)
                .num_field("eps", eps)
                .int_field("seed", seed)
                .bool_field("shifted", shifted)
                .finish();
            emit_experiment("example", &result, &inputs, format);
            Ok(if result.pass { 0 } else { 1 })
        }
    }
}

fn load_matrix(path: &Path) -> Result<MatrixData, String> {
    mtx::read_matrix_file(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_vector(path: &Path) -> Result<VectorData, String> {
    mtx::read_vector_file(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn matrix_to_complex(m: &Matrix<f64>) -> Matrix<Complex64> {
    let n = m.n();
    let rows: Vec<Vec<Complex64>> = (0..n)
        .map(|i| (0..n).map(|j| Complex64::new(m.get(i, j), 0.0)).collect())
        .collect();
    Matrix::from_rows(rows).expect("finite promotion")
}

fn vector_to_complex(v: &[f64]) -> Vec<Complex64> {
    v.iter().map(|&x| Complex64::new(x, 0.0)).collect()
}

fn run_bounds(
    matrix_path: &Path,
    vector_path: &Path,
    ref_path: Option<&Path>,
    format: OutputFormat,
) -> Result<u8, String> {
    let matrix = load_matrix(matrix_path)?;
    let vector = load_vector(vector_path)?;
    let reference = ref_path.map(load_vector).transpose()?;

    let complex = matches!(matrix, MatrixData::Complex(_))
        || matches!(vector, VectorData::Complex(_))
        || matches!(reference, Some(VectorData::Complex(_)));

    let (outcomes, dim) = if complex {
        let m = match &matrix {
            MatrixData::Complex(m) => m.clone(),
            MatrixData::Real(m) => matrix_to_complex(m),
        };
        let v = match &vector {
            VectorData::Complex(v) => v.clone(),
            VectorData::Real(v) => vector_to_complex(v),
        };
        let r = reference.as_ref().map(|r| match r {
            VectorData::Complex(r) => r.clone(),
            VectorData::Real(r) => vector_to_complex(r),
        });
        evaluate_catalogue(m, v, r)?
    } else {
        let MatrixData::Real(m) = &matrix else {
            unreachable!()
        };
        let VectorData::Real(v) = &vector else {
            unreachable!()
        };
        let r = reference.as_ref().map(|r| match r {
            VectorData::Real(r) => r.clone(),
            VectorData::Complex(_) => unreachable!(),
        });
        evaluate_catalogue(m.clone(), v.clone(), r)?
    };

    let certified = outcomes
        .iter()
        .filter_map(BoundOutcome::report)
        .all(|r| r.holds);

    match format {
        OutputFormat::Text => {
            println!("rqbounds {TOOL_VERSION} — bounds");
            println!(
                "matrix: {} (dim {dim}, {})",
                matrix_path.display(),
                if complex { "complex" } else { "real" }
            );
            println!("vector: {}", vector_path.display());
            if let Some(p) = ref_path {
                println!("reference: {}", p.display());
            }
            println!();
            for outcome in &outcomes {
                print!("{}", render_outcome_text(outcome));
            }
            println!();
            println!(
                "result: {}",
                if certified {
                    "all certified bounds hold"
                } else {
                    "CERTIFICATION FAILURE"
                }
            );
        }
        OutputFormat::Json => {
            let inputs = json::Object::new()
                .str_field("matrix", &matrix_path.display().to_string())
                .str_field("vector", &vector_path.display().to_string())
                .opt_str_field("ref_vector", ref_path.map(|p| p.display().to_string()).as_deref())
                .str_field("field", if complex { "complex" } else { "real" })
                .int_field("dim", dim as u64)
                .finish();
            let reports = json::array(outcomes.iter().map(render_outcome_json));
            let doc = json::Object::new()
                .str_field("tool_version", TOOL_VERSION)
                .str_field("command", "bounds")
                .raw("inputs", inputs)
                .raw("reports", reports)
                .finish();
            println!("{doc}");
        }
    }
    Ok(if certified { 0 } else { 1 })
}

fn evaluate_catalogue<T: rqbounds::Field>(
    matrix: Matrix<T>,
    entries: Vec<T>,
    reference: Option<Vec<T>>,
) -> Result<(Vec<BoundOutcome>, usize), String> {
    let operator = HermitianOperator::from_dense(matrix).map_err(|e| e.to_string())?;
    let dim = operator.dim();
    let probe = Vector::new(entries).map_err(|e| e.to_string())?;
    if probe.len() != dim {
        return Err(format!(
            "vector length {} does not match operator dimension {dim}",
            probe.len()
        ));
    }
    let reference = reference
        .map(|r| {
            let r = Vector::new(r).map_err(|e| e.to_string())?;
            if r.len() != dim {
                return Err(format!(
                    "reference vector length {} does not match operator dimension {dim}",
                    r.len()
                ));
            }
            Ok(r)
        })
        .transpose()?;
    let outcomes =
        run_catalogue(&operator, &probe, reference.as_ref()).map_err(|e| e.to_string())?;
    Ok((outcomes, dim))
}

fn render_outcome_text(outcome: &BoundOutcome) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    match outcome {
        BoundOutcome::Ran(r) => {
            let _ = writeln!(
                out,
                "{:28} lhs {:>24} rhs {:>24}  holds {}  equality {}",
                r.bound_name,
                mtx::fmt_f64(r.lhs),
                mtx::fmt_f64(r.rhs),
                if r.holds { "yes" } else { "NO " },
                if r.equality { "yes" } else { "no" },
            );
            for (key, value) in &r.ingredients {
                let _ = writeln!(out, "{:30}{key} = {}", "", mtx::fmt_f64(*value));
            }
        }
        BoundOutcome::Skipped { bound_name, reason } => {
            let _ = writeln!(out, "{bound_name:28} skipped: {reason}");
        }
    }
    out
}

fn render_outcome_json(outcome: &BoundOutcome) -> String {
    match outcome {
        BoundOutcome::Ran(r) => {
            let ingredients = {
                let mut obj = json::Object::new();
                for (key, value) in &r.ingredients {
                    obj = obj.num_field(key, *value);
                }
                obj.finish()
            };
            json::Object::new()
                .str_field("bound_name", r.bound_name)
                .num_field("lhs", r.lhs)
                .num_field("rhs", r.rhs)
                .bool_field("holds", r.holds)
                .bool_field("equality", r.equality)
                .bool_field("skipped", false)
                .raw("reason", "null")
                .raw("ingredients", ingredients)
                .finish()
        }
        BoundOutcome::Skipped { bound_name, reason } => json::Object::new()
            .str_field("bound_name", bound_name)
            .raw("lhs", "null")
            .raw("rhs", "null")
            .opt_bool_field("holds", None)
            .opt_bool_field("equality", None)
            .bool_field("skipped", true)
            .str_field("reason", reason)
            .raw("ingredients", "{}")
            .finish(),
    }
}

fn emit_experiment(command: &str, result: &ExperimentResult, inputs: &str, format: OutputFormat) {
    match format {
        OutputFormat::Text => {
            println!("rqbounds {TOOL_VERSION} — {command}");
            println!("experiment: {}", result.name);
            println!("status: {}", if result.pass { "PASS" } else { "FAIL" });
            if !result.scalars.is_empty() {
                println!("scalars:");
                for (key, value) in &result.scalars {
                    println!("  {key} = {}", mtx::fmt_f64(*value));
                }
            }
            if !result.reports.is_empty() {
                println!("reports:");
                for report in &result.reports {
                    print!(
                        "{}",
                        render_outcome_text(&BoundOutcome::Ran(report.clone()))
                    );
                }
            }
            if !result.notes.is_empty() {
                println!("notes:");
                for line in result.notes.lines() {
                    println!("  {line}");
                }
            }
        }
        OutputFormat::Json => {
            let scalars = {
                let mut obj = json::Object::new();
                for (key, value) in &result.scalars {
                    obj = obj.num_field(key, *value);
                }
                obj.finish()
            };
            let reports = json::array(
                result
                    .reports
                    .iter()
                    .map(|r| render_outcome_json(&BoundOutcome::Ran(r.clone()))),
            );
            let doc = json::Object::new()
                .str_field("tool_version", TOOL_VERSION)
                .str_field("command", command)
                .raw("inputs", inputs)
                .raw("reports", reports)
                .str_field("name", &result.name)
                .raw("scalars", scalars)
                .bool_field("pass", result.pass)
                .str_field("notes", &result.notes)
                .finish();
            println!("{doc}");
        }
    }
}
