//! Argument parsing and the subcommands.
//!
//! Exit codes: 0 pass (or no verdict), 1 verdict fail, 2 bad input,
//! 3 internal error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use liegeo_core::filiform::{self, catalog};
use liegeo_core::{parse_scalar, search, Error as CoreError, Jacobi, SearchBudget, Subspace, Vector};
use serde_json::{json, Value};

use crate::file::{self, AlgebraFile, FileError, Parsed};
use crate::report::{self, Report, Verdict};
use crate::suite::{self, Level};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser, Debug)]
#[command(name = "liegeo", version, about = "Geodesics and totally geodesic subalgebras of metric Lie algebras")]
pub struct Cli {
    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a file and check the Jacobi identity.
    Check { file: PathBuf },
    /// Test whether a subalgebra is totally geodesic.
    Tg {
        file: PathBuf,
        /// Name from the file, or inline vectors like "1,0,0;0,1/2,1".
        #[arg(long)]
        subalgebra: String,
        /// Also report whether the orthogonal complement is ad(h)-invariant.
        #[arg(long)]
        invariance: bool,
    },
    /// Test a vector for being geodesic, or search for one numerically.
    Geodesics {
        file: PathBuf,
        #[arg(long, conflicts_with = "numeric", required_unless_present = "numeric")]
        vector: Option<String>,
        #[arg(long)]
        numeric: bool,
        #[arg(long, env = "LIEGEO_SEED")]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 400)]
        max_iterations: usize,
    },
    /// Compute a Vergne basis of a filiform algebra.
    Vergne {
        file: PathBuf,
        #[arg(long, env = "LIEGEO_SEED")]
        seed: Option<u64>,
    },
    /// Write a catalog algebra as a file.
    Catalog {
        /// One of Ln, LC, heis3, dim6, irreg6, heis6_2center, so3, sl2,
        /// solv_rot, solv_exp, cd2f.
        name: String,
        /// Parameters: n for Ln and cd2f, the coefficients c_2 .. c_{n-1} for LC.
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search for totally geodesic subalgebras of a given dimension.
    SearchTg {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long, env = "LIEGEO_SEED")]
        seed: Option<u64>,
        /// Number of random candidates.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Run the reproduction suite.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
        #[arg(long, env = "LIEGEO_SEED")]
        seed: Option<u64>,
        /// Run only these criteria (comma separated ids).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum LevelArg {
    Quick,
    Full,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    File(#[from] FileError),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal() => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        }
    }
}

/// What a command produced: either a report or raw text (for `catalog`).
pub enum Output {
    Report(Report),
    Raw(String),
}

pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let raw: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    match run(&cli, &raw) {
        Ok(Output::Raw(text)) => {
            print!("{text}");
            EXIT_PASS
        }
        Ok(Output::Report(r)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(if cli.json { r.to_json() } else { r.to_text() }.as_bytes());
            match r.verdict {
                Some(Verdict::Fail) => EXIT_FAIL,
                _ => EXIT_PASS,
            }
        }
        Err(e) => {
            let code = e.exit_code();
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&json!({"error": e.to_string(), "exit_code": code})).unwrap());
            }
            eprintln!("error: {e}");
            code
        }
    }
}

fn read_input(path: &PathBuf) -> Result<Vec<u8>, CliError> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

/// Reads and validates a file; the Jacobi identity must hold.
fn load(path: &PathBuf) -> Result<Parsed, CliError> {
    let parsed = file::parse_domain(&read_input(path)?)?;
    if let Jacobi::Fails { triple: (i, j, k), .. } = parsed.algebra.verify_jacobi() {
        return Err(CliError::Input(format!("Jacobi identity fails for ({i}, {j}, {k})")));
    }
    Ok(parsed)
}

fn parse_vector(s: &str, n: usize) -> Result<Vector, CliError> {
    let coords = s
        .split(',')
        .map(|c| parse_scalar(c.trim()).ok_or_else(|| CliError::Input(format!("invalid rational {:?}", c.trim()))))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != n {
        return Err(CliError::Input(format!("expected {n} coordinates, found {}", coords.len())));
    }
    Ok(Vector::new(coords))
}

fn resolve_subalgebra(parsed: &Parsed, arg: &str) -> Result<Subspace, CliError> {
    if let Some(s) = parsed.subalgebras.get(arg) {
        return Ok(s.clone());
    }
    let n = parsed.algebra.dim();
    if !arg.contains(',') && !(n == 1 && parse_scalar(arg.trim()).is_some()) {
        let known: Vec<&str> = parsed.subalgebras.keys().map(String::as_str).collect();
        return Err(CliError::Input(format!("no subalgebra named {arg:?} (known: {})", known.join(", "))));
    }
    let vs = arg.split(';').map(|v| parse_vector(v, n)).collect::<Result<Vec<_>, _>>()?;
    let count = vs.len();
    let space = Subspace::span(n, vs);
    if space.dim() != count {
        return Err(CliError::Input("subalgebra vectors are linearly dependent".into()));
    }
    Ok(space)
}

fn seed_or_default(seed: Option<u64>) -> u64 {
    seed.unwrap_or(DEFAULT_SEED)
}

pub fn run(cli: &Cli, raw_args: &[String]) -> Result<Output, CliError> {
    let start = Instant::now();
    let mut r = Report::new(raw_args);
    match &cli.command {
        Command::Check { file } => {
            let parsed = file::parse_domain(&read_input(file)?)?;
            let g = &parsed.algebra;
            r.set("dim", g.dim());
            if let Some(name) = g.name() {
                r.set("name", name);
            }
            match g.verify_jacobi() {
                Jacobi::Holds => {
                    r.verdict = Some(Verdict::Pass);
                    r.set("jacobi", "holds");
                    r.set("nilpotent", g.is_nilpotent());
                    r.set("center", report::subspace(&g.center()));
                    r.set("derived_algebra", report::subspace(&g.derived_algebra()));
                    if g.is_nilpotent() {
                        r.set("filiform", filiform::is_filiform(g)?.is_some());
                    }
                    r.set("metric", if parsed.metric.is_some() { "given" } else { "standard" });
                    let names: Vec<Value> = parsed.subalgebras.keys().map(|k| Value::String(k.clone())).collect();
                    r.set("subalgebras", names);
                    let bad: Vec<Value> =
                        parsed.subalgebras.iter().filter(|(_, s)| !g.is_subalgebra(s)).map(|(k, _)| Value::String(k.clone())).collect();
                    if !bad.is_empty() {
                        r.verdict = Some(Verdict::Fail);
                        r.set("not_closed", bad);
                    }
                }
                Jacobi::Fails { triple: (i, j, k), residual } => {
                    r.verdict = Some(Verdict::Fail);
                    r.set("jacobi", "fails");
                    r.set("triple", json!([i, j, k]));
                    r.set("residual", report::vector(&residual));
                }
            }
        }
        Command::Tg { file, subalgebra, invariance } => {
            let parsed = load(file)?;
            let h = resolve_subalgebra(&parsed, subalgebra)?;
            if !parsed.algebra.is_subalgebra(&h) {
                return Err(CliError::Input(format!("{h} is not closed under the bracket")));
            }
            let mg = parsed.metric_algebra();
            let t = mg.is_totally_geodesic(&h)?;
            r.verdict = Some(Verdict::from_bool(t.totally_geodesic));
            r.set("subalgebra", report::subspace(&h));
            r.set("complement", report::subspace(&t.complement));
            if let Some(w) = &t.witness {
                r.set(
                    "witness",
                    json!({
                        "x": report::vector(&w.x),
                        "y": report::vector(&w.y),
                        "z": report::vector(&w.z),
                        "indices": [w.indices.0, w.indices.1, w.indices.2],
                        "value": report::scalar(&w.value),
                    }),
                );
            }
            if *invariance {
                r.set("complement_invariant", t.complement_invariant);
            }
        }
        Command::Geodesics { file, vector, numeric, seed, tol, max_iterations } => {
            let parsed = load(file)?;
            let mg = parsed.metric_algebra();
            if *numeric {
                let budget = SearchBudget::new(seed_or_default(*seed), 10_000, *tol, *max_iterations)?;
                let g = search::find_geodesic_numeric(&mg, &budget)?;
                r.verdict = Some(Verdict::from_bool(g.converged));
                r.set("vector", Value::Array(g.vector.iter().map(|x| report::decimal(*x)).collect()));
                r.set("residual", report::decimal(g.residual));
                r.set("starts_used", g.starts_used);
                r.set("exact", g.exact.as_ref().map_or(Value::Null, report::vector));
            } else {
                let y = parse_vector(vector.as_deref().expect("clap requires it"), mg.dim())?;
                let g = mg.is_geodesic(&y)?;
                r.verdict = Some(Verdict::from_bool(g.geodesic));
                r.set("vector", report::vector(&y));
                r.set("defect", report::vector(&g.defect));
                r.set("defect_norm_sq", report::scalar(&g.residual_norm_sq));
            }
        }
        Command::Vergne { file, seed } => {
            let parsed = load(file)?;
            let g = &parsed.algebra;
            let vb = filiform::vergne_basis(g)?;
            r.set("basis", report::vectors(&vb.vectors));
            r.set("alpha", report::scalar(&vb.alpha));
            let reg = filiform::regularity(g, seed_or_default(*seed), 64)?;
            let regularity = match &reg {
                filiform::Regularity::Regular(b) => {
                    if b != &vb {
                        r.set("regular_basis", report::vectors(&b.vectors));
                    }
                    "regular"
                }
                filiform::Regularity::IrregularRelativeToComputedBasis { .. } => "irregular relative to computed basis",
            };
            r.set("regularity", regularity);
            if g.dim() >= 3 {
                r.set("standard", filiform::is_standard_filiform(g)?);
            }
            if g.dim() == 4 {
                let nf = filiform::normalize_4d(&parsed.metric_algebra())?;
                r.set(
                    "normal_form",
                    json!({
                        "basis": report::vectors(&nf.basis),
                        "norms_sq": nf.norms_sq.iter().map(report::scalar).collect::<Vec<_>>(),
                        "alpha": report::scalar(&nf.alpha),
                        "beta": report::scalar(&nf.beta),
                        "gamma": report::scalar(&nf.gamma),
                    }),
                );
            }
        }
        Command::Catalog { name, params, output } => {
            let e = catalog::lookup(name, params)?;
            let text = AlgebraFile::from_domain(&e.algebra, e.metric.as_ref(), &e.subalgebras).to_json();
            return match output {
                Some(path) => {
                    std::fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                    Ok(Output::Raw(String::new()))
                }
                None => Ok(Output::Raw(text)),
            };
        }
        Command::SearchTg { file, dim, seed, budget } => {
            let parsed = load(file)?;
            let mg = parsed.metric_algebra();
            let b = SearchBudget::default().with_seed(seed_or_default(*seed)).with_candidates(*budget);
            SearchBudget::new(b.seed, b.max_candidates, b.tol, b.max_iterations)?;
            let found = search::search_tg_subalgebras(&mg, *dim, &b)?;
            r.set("dim", *dim);
            r.set("count", found.len());
            let mut list = Vec::new();
            for h in &found {
                let t = mg.is_totally_geodesic(h)?;
                list.push(json!({"basis": report::subspace(h), "complement_invariant": t.complement_invariant}));
            }
            r.set("found", list);
        }
        Command::VerifyPaper { level, seed, only } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let seed = seed_or_default(*seed);
            let ids = if only.is_empty() { suite::ids() } else { only.clone() };
            let mut all = true;
            let mut rows = Vec::new();
            for id in ids {
                let o = suite::run_one(id, level, seed).ok_or_else(|| CliError::Input(format!("unknown criterion {id}")))?;
                if !cli.json {
                    eprintln!("{}", o.line());
                }
                all &= o.passed;
                rows.push(json!({
                    "id": o.id,
                    "title": o.title,
                    "verdict": if o.passed { "pass" } else { "fail" },
                    "detail": o.detail,
                    "elapsed_seconds": format!("{:.3}", o.elapsed.as_secs_f64()),
                }));
            }
            r.verdict = Some(Verdict::from_bool(all));
            r.set("level", if level == Level::Quick { "quick" } else { "full" });
            r.set("seed", seed.to_string());
            r.set("criteria", rows);
        }
    }
    Ok(Output::Report(r.with_elapsed(start.elapsed())))
}
