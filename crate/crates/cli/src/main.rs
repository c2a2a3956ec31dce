mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use tropbase::newton::{enumerate_qn, qn_image, sylvester_resultant, NewtonError};
use tropbase::projection::{
    check_algebraic_regularity, kernel_homogeneous, project_hypersurface, ProjectionError, ProjectionSpec,
    DEFAULT_BOUND, DEFAULT_RETRY_CAP,
};
use tropbase::tropical::{
    circuits_linear, extend_point, member_of_intersection, TropicalError,
};
use tropbase::{
    compute_tropical_basis, tropicalize, BasisOptions, Exec, Field, Ideal, KernelSource, PAdic, ProjectionMethod, RatFunc, Rational,
    TAdic, TropicalComplex, TropicalForm, Valuation,
};

use input::{FieldConfig, IdealFile};
use report::{IntervalDoc, Report};

#[derive(Parser)]
#[command(name = "tropbase", version, about = "Tropical bases by projection and elimination")]
struct Cli {
    /// Run without the thread pool.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Output {
    /// Write the result here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Elimination for explicit kernels, graded search for random ones.
    Auto,
    Elimination,
    Graded,
}

impl From<MethodArg> for ProjectionMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => ProjectionMethod::Auto,
            MethodArg::Elimination => ProjectionMethod::Elimination,
            MethodArg::Graded => ProjectionMethod::GradedSearch,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a tropical basis and write a JSON report.
    Basis {
        file: PathBuf,
        /// Seed for random kernels.
        #[arg(long, env = "TROPBASE_SEED", default_value_t = 0)]
        seed: u64,
        /// One kernel per projection, e.g. "(0,0,1);(1,2,0);(1,0,1)".
        #[arg(long, conflicts_with = "seed")]
        kernels: Option<String>,
        /// Override the dimension of the ideal.
        #[arg(long)]
        dim: Option<usize>,
        /// Random kernel entries are drawn from [-bound, bound].
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: i64,
        #[arg(long, default_value_t = DEFAULT_RETRY_CAP)]
        retry_cap: usize,
        /// How projections are computed.
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Include wall-clock timings (makes the report nondeterministic).
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Test a point against every hypersurface of an ideal file or basis report.
    Member {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Cells of the intersection of the tropical hypersurfaces (at most 3 variables).
    Cells {
        file: PathBuf,
        /// Add vertices, bounded edges and rays for plotting.
        #[arg(long)]
        emit_segments: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Eliminate onto one projection with the given kernel.
    Project {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        kernel: String,
    },
    /// Sylvester resultant of two polynomials in one variable.
    Resultant {
        file: PathBuf,
        #[arg(long)]
        var: String,
    },
    /// Enumerate Q_n for an exponent vector and its projected image.
    Qn {
        #[arg(long)]
        v: String,
    },
    /// Feasible values of the first coordinate over a point of the rest.
    Extend {
        file: PathBuf,
        /// Values of every variable except the first.
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Circuits of a linear ideal.
    OracleLinear { file: PathBuf },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Compute(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

fn compute(e: impl ToString) -> CliError {
    CliError::Compute(e.to_string())
}

fn projection_error(e: ProjectionError) -> CliError {
    match e {
        ProjectionError::KernelRank { .. }
        | ProjectionError::KernelShape { .. }
        | ProjectionError::KernelCount { .. }
        | ProjectionError::BadDimension { .. }
        | ProjectionError::NoGenerators => usage(e),
        _ => compute(e),
    }
}

fn tropical_error(e: TropicalError) -> CliError {
    match e {
        TropicalError::UnsupportedDimension(_)
        | TropicalError::ArityMismatch { .. }
        | TropicalError::Nonlinear(_)
        | TropicalError::ZeroPolynomial
        | TropicalError::TooFewTerms => usage(e),
        _ => compute(e),
    }
}

fn newton_error(e: NewtonError) -> CliError {
    match e {
        NewtonError::Precondition(_) | NewtonError::Shape(_) | NewtonError::DegreeZero(_) => usage(e),
        _ => compute(e),
    }
}

/// Reads an ideal file, or a basis report whose `basis` becomes the body.
fn load(path: &Path) -> Result<IdealFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let located = |e: input::InputError| usage(format!("{}:{e}", path.display()));
    if text.trim_start().starts_with('{') {
        let r: Report = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let mut body = format!("vars: {}\nfield: {}\n", r.vars.join(", "), r.field);
        for p in &r.basis {
            body.push_str(p);
            body.push('\n');
        }
        return IdealFile::parse(&body).map_err(located);
    }
    IdealFile::parse(&text).map_err(located)
}

fn parse_polys<F: Field>(
    path: &Path,
    file: &IdealFile,
) -> Result<(std::sync::Arc<tropbase::Ring>, Vec<tropbase::Polynomial<F>>), CliError> {
    file.polynomials::<F>().map_err(|e| usage(format!("{}:{e}", path.display())))
}

fn forms<F: Field, V: Valuation<F>>(val: &V, polys: &[tropbase::Polynomial<F>]) -> Result<Vec<TropicalForm>, CliError> {
    polys.iter().map(|p| tropicalize(p, val).map_err(tropical_error)).collect()
}

fn check_arity(what: &str, got: usize, expected: usize) -> Result<(), CliError> {
    if got == expected {
        Ok(())
    } else {
        Err(usage(format!("{what} has {got} coordinates, expected {expected}")))
    }
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn emit(out: &Output, text: &str) -> Result<(), CliError> {
    match &out.output {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

struct BasisArgs<'a> {
    path: &'a Path,
    source: KernelSource,
    dim: Option<usize>,
    method: ProjectionMethod,
    timings: bool,
    exec: Exec,
}

/// Returns the report text and whether every recorded check passed.
fn basis_cmd<F: Field, V: Valuation<F>>(
    _val: &V,
    file: &IdealFile,
    args: &BasisArgs<'_>,
) -> Result<(String, bool), CliError> {
    let t0 = Instant::now();
    let (_, gens) = parse_polys::<F>(args.path, file)?;
    let t1 = Instant::now();
    let opts = BasisOptions { kernels: args.source.clone(), dimension: args.dim, method: args.method, exec: args.exec };
    let rep = compute_tropical_basis(&gens, &opts).map_err(projection_error)?;
    let t2 = Instant::now();
    let mut doc = report::basis_report(&rep, file.field.to_string(), &args.source);
    if args.timings {
        let ms = |a: Instant, b: Instant| (b - a).as_secs_f64() * 1e3;
        doc.timings_ms = Some(report::Timings { parse: ms(t0, t1), basis: ms(t1, t2) });
    }
    Ok((to_json(&doc), rep.all_checks_pass()))
}

fn member_cmd<F: Field, V: Valuation<F>>(val: &V, path: &Path, file: &IdealFile, point: &str) -> Result<String, CliError> {
    let (ring, polys) = parse_polys::<F>(path, file)?;
    let w = input::parse_point(point).map_err(usage)?;
    check_arity("point", w.len(), ring.arity())?;
    let fs = forms(val, &polys)?;
    let each: Vec<_> = polys
        .iter()
        .zip(&fs)
        .map(|(p, f)| json!({ "polynomial": p.to_string(), "contains": f.contains(&w) }))
        .collect();
    Ok(to_json(&json!({
        "point": report::qs(&w),
        "member": member_of_intersection(&fs, &w),
        "polynomials": each,
    })))
}

fn cells_cmd<F: Field, V: Valuation<F>>(
    val: &V,
    path: &Path,
    file: &IdealFile,
    segments: bool,
) -> Result<String, CliError> {
    let (ring, polys) = parse_polys::<F>(path, file)?;
    let fs = forms(val, &polys)?;
    let complex = TropicalComplex::from_forms(&fs).map_err(tropical_error)?;
    let doc = report::CellsReport {
        schema: report::SCHEMA,
        vars: ring.vars().to_vec(),
        field: file.field.to_string(),
        polynomials: polys.iter().map(ToString::to_string).collect(),
        dimension: complex.dimension(),
        cells: report::cells_docs(&complex),
        vertices: segments.then(|| complex.vertices().iter().map(|v| report::qs(v)).collect()),
        segments: segments.then(|| complex.segments().iter().map(report::SegmentDoc::from).collect()),
    };
    Ok(to_json(&doc))
}

fn project_cmd<F: Field, V: Valuation<F>>(_val: &V, path: &Path, file: &IdealFile, kernel: &str) -> Result<String, CliError> {
    let (ring, gens) = parse_polys::<F>(path, file)?;
    let rows = input::parse_kernel(kernel).map_err(usage)?;
    let spec = ProjectionSpec::new(ring.arity(), rows).map_err(projection_error)?;
    let g = project_hypersurface(&gens, spec.kernel()).map_err(projection_error)?;
    let ideal = Ideal::new(&ring, gens.clone()).map_err(compute)?;
    let regularity = check_algebraic_regularity(&gens, spec.kernel());
    Ok(to_json(&json!({
        "kernel": spec.kernel(),
        "polynomial": g.to_string(),
        "checks": {
            "contained": ideal.contains(&g).map_err(compute)?,
            "kernel_homogeneous": kernel_homogeneous(&g, spec.kernel()),
            "algebraic_regularity": report::RegularityDoc {
                passed: regularity.is_ok(),
                enforced: false,
                collision: regularity.as_ref().err().map(report::CollisionDoc::from),
            },
        },
    })))
}

fn resultant_cmd<F: Field, V: Valuation<F>>(_val: &V, path: &Path, file: &IdealFile, var: &str) -> Result<String, CliError> {
    let (ring, polys) = parse_polys::<F>(path, file)?;
    if polys.len() != 2 {
        return Err(usage(format!("{}: expected 2 polynomials, found {}", path.display(), polys.len())));
    }
    let idx = ring.index_of(var).ok_or_else(|| usage(format!("variable `{var}` is not declared")))?;
    let r = sylvester_resultant(&polys[0], &polys[1], idx).map_err(newton_error)?;
    Ok(format!("{r}\n"))
}

fn extend_cmd<F: Field, V: Valuation<F>>(val: &V, path: &Path, file: &IdealFile, w: &str) -> Result<String, CliError> {
    let (ring, polys) = parse_polys::<F>(path, file)?;
    let w = input::parse_point(w).map_err(usage)?;
    check_arity("w", w.len(), ring.arity().saturating_sub(1))?;
    let fs = forms(val, &polys)?;
    let intervals = extend_point(&fs, &w);
    Ok(to_json(&json!({
        "variable": ring.vars()[0],
        "w": report::qs(&w),
        "intervals": intervals.iter().map(IntervalDoc::from).collect::<Vec<_>>(),
        "text": intervals.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })))
}

fn oracle_cmd<F: Field, V: Valuation<F>>(_val: &V, path: &Path, file: &IdealFile) -> Result<String, CliError> {
    let (_, polys) = parse_polys::<F>(path, file)?;
    let circuits = circuits_linear(&polys).map_err(tropical_error)?;
    Ok(to_json(&json!({ "circuits": circuits.iter().map(ToString::to_string).collect::<Vec<_>>() })))
}

fn qn_cmd(v: &str, exec: Exec) -> Result<String, CliError> {
    let v = input::parse_int_list(v).map_err(usage)?;
    let pts = enumerate_qn(&v, exec).map_err(newton_error)?;
    let image = qn_image(&pts);
    Ok(to_json(&json!({
        "v": v,
        "count": pts.len(),
        "points": pts.iter().map(|p| json!({ "p": p.p, "q": p.q })).collect::<Vec<_>>(),
        "image": image,
    })))
}

/// Calls `$f::<F, V>(&val, args..)` for the field named in `$file`.
macro_rules! with_field {
    ($file:expr, $f:ident($($arg:expr),*)) => {
        match &$file.field {
            FieldConfig::PAdic(p) => {
                let val = PAdic::new(p.clone()).map_err(usage)?;
                $f::<Rational, _>(&val, $($arg),*)
            }
            FieldConfig::TAdic => $f::<RatFunc, _>(&TAdic, $($arg),*),
        }
    };
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    let stdout = Output { output: None };
    match cli.cmd {
        Cmd::Basis { file, seed, kernels, dim, bound, retry_cap, method, timings, out } => {
            let source = match kernels {
                Some(k) => KernelSource::Explicit(input::parse_kernels(&k).map_err(usage)?),
                None => KernelSource::Random { seed, bound, retry_cap },
            };
            let f = load(&file)?;
            let args = BasisArgs { path: &file, source, dim, method: method.into(), timings, exec };
            let (text, ok) = with_field!(f, basis_cmd(&f, &args))?;
            emit(&out, &text)?;
            Ok(ok)
        }
        Cmd::Member { file, point } => {
            let f = load(&file)?;
            emit(&stdout, &with_field!(f, member_cmd(&file, &f, &point))?)?;
            Ok(true)
        }
        Cmd::Cells { file, emit_segments, out } => {
            let f = load(&file)?;
            emit(&out, &with_field!(f, cells_cmd(&file, &f, emit_segments))?)?;
            Ok(true)
        }
        Cmd::Project { file, kernel } => {
            let f = load(&file)?;
            emit(&stdout, &with_field!(f, project_cmd(&file, &f, &kernel))?)?;
            Ok(true)
        }
        Cmd::Resultant { file, var } => {
            let f = load(&file)?;
            emit(&stdout, &with_field!(f, resultant_cmd(&file, &f, &var))?)?;
            Ok(true)
        }
        Cmd::Qn { v } => {
            emit(&stdout, &qn_cmd(&v, exec)?)?;
            Ok(true)
        }
        Cmd::Extend { file, w } => {
            let f = load(&file)?;
            emit(&stdout, &with_field!(f, extend_cmd(&file, &f, &w))?)?;
            Ok(true)
        }
        Cmd::OracleLinear { file } => {
            let f = load(&file)?;
            emit(&stdout, &with_field!(f, oracle_cmd(&file, &f))?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: some projection checks failed (see report)");
            ExitCode::from(1)
        }
        Err(e) => {
            let (CliError::Usage(m) | CliError::Compute(m)) = &e;
            eprintln!("error: {m}");
            ExitCode::from(e.code())
        }
    }
}
