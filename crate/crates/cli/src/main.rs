use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use slicecalc::series::{construct, Family};
use slicecalc::tolerance::Tolerances;
use slicecalc::verify::{run_suite, Report, SuiteConfig, DEFAULT_SAMPLES, DEFAULT_SEED};
use slicecalc::zeros::{contour_count, ContourSpec, DEFAULT_NODES};
use slicecalc::{Error, Octonion, RegularRational, SliceSeries, UnitImaginary};

#[derive(Parser)]
#[command(name = "slicecalc", version, about = "Slice-regular functions over the octonions")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Base seed for the verification suites.
    #[arg(long, global = true, env = "SLICECALC_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Truncation degree for series expansions.
    #[arg(long, global = true, default_value_t = slicecalc::series::DEFAULT_DEGREE)]
    degree: usize,
    /// Samples per randomized check.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, global = true, default_value_t = slicecalc::tolerance::ALG_TOL)]
    tol_alg: f64,
    #[arg(long, global = true, default_value_t = slicecalc::tolerance::SERIES_TOL)]
    tol_series: f64,
    #[arg(long, global = true, default_value_t = slicecalc::tolerance::SAMPLE_TOL)]
    tol_sample: f64,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a series or rational file at a point.
    Eval {
        file: PathBuf,
        /// Eight comma-separated reals, a basis name such as e3, or a real.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Regular product of two functions.
    Star {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regular reciprocal.
    Recip {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a member of one of the extremal families.
    Construct(ConstructArgs),
    /// Run verification suites.
    Verify {
        /// Suite name; repeatable. Defaults to all.
        #[arg(long)]
        suite: Vec<String>,
        /// Record wall-clock time in each report.
        #[arg(long)]
        timing: bool,
    },
    /// Count zero spheres inside a symmetric neighbourhood. Counts refer to
    /// the symmetrization, so a spherical zero of order one counts 2.
    Zeros {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x0: f64,
        #[arg(long, default_value_t = 0.0)]
        y0: f64,
        #[arg(long)]
        delta: f64,
        /// Integration slice.
        #[arg(long, default_value = "e1")]
        slice: String,
        #[arg(long, default_value_t = DEFAULT_NODES)]
        nodes: usize,
    },
    /// Write the configuration and all suite reports as one JSON document.
    Report {
        #[arg(long)]
        suite: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Extremal,
    Mobius,
    Koebe,
    Monomial,
    Example33,
    InnerExtremal,
}

#[derive(Args)]
struct ConstructArgs {
    family: FamilyName,
    /// Extremal parameter in [-1, 1).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    /// Boundary point (extremal, inner-extremal).
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<String>,
    /// Mobius centre, or the monomial's unit multiplier.
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    /// Mobius unit multiplier [default: 1].
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    /// Inner-extremal unit multiplier [default: 1].
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    /// Slice unit [default: e1].
    #[arg(long)]
    i: Option<String>,
    /// Second unit for example33, perpendicular to --i [default: e2].
    #[arg(long)]
    j: Option<String>,
    /// Koebe rotation angle [default: 0].
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<f64>,
    /// Monomial degree.
    #[arg(long)]
    n: Option<usize>,
    /// Inner-extremal boundary derivative, at least 1.
    #[arg(long)]
    delta: Option<f64>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failures mapped to exit codes: 1 for computation or verification
/// failures, 2 for usage and input errors.
enum Failure {
    Verification,
    Compute(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::BadParameter(_) | Error::BadFrame(_) | Error::UnknownSuite(_) => {
                Failure::Usage(e.to_string())
            }
            e => Failure::Compute(e),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn parse_octonion(s: &str) -> CliResult<Octonion> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) if b.starts_with('e') => (true, b),
        _ => (false, s),
    };
    if let Some(k) = body.strip_prefix('e') {
        let k: usize = k.parse().map_err(|_| Failure::Usage(format!("bad basis name {s:?}")))?;
        if k > 7 {
            return Err(Failure::Usage(format!("basis index {k} out of range")));
        }
        let e = Octonion::basis(k);
        return Ok(if neg { -e } else { e });
    }
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("bad octonion {s:?}")))?;
    match parts.len() {
        1 => Ok(Octonion::real(parts[0])),
        8 => Ok(Octonion::new(parts.try_into().expect("eight parts"))),
        n => Err(Failure::Usage(format!("expected 1 or 8 components, got {n}"))),
    }
}

fn parse_unit(s: &str) -> CliResult<UnitImaginary> {
    Ok(UnitImaginary::new(parse_octonion(s)?)?)
}

fn read_function(path: &Path) -> CliResult<RegularRational> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    if let Ok(r) = serde_json::from_str::<RegularRational>(&text) {
        return Ok(r);
    }
    serde_json::from_str::<SliceSeries>(&text)
        .map(RegularRational::from)
        .map_err(|e| Failure::Usage(format!("{}: not a series or rational: {e}", path.display())))
}

fn emit(value: &impl serde::Serialize, out: Option<&Path>) -> CliResult<()> {
    let text = serde_json::to_string(value).expect("serializable");
    match out {
        Some(p) => fs::write(p, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn required<T>(v: Option<T>, name: &str) -> CliResult<T> {
    v.ok_or_else(|| Failure::Usage(format!("--{name} is required for this family")))
}

fn family(a: &ConstructArgs) -> CliResult<Family> {
    let oct = |v: &Option<String>, name: &str| -> CliResult<Octonion> { parse_octonion(required(v.as_deref(), name)?) };
    Ok(match a.family {
        FamilyName::Extremal => Family::Extremal { a: required(a.a, "a")?, xi: oct(&a.xi, "xi")? },
        FamilyName::Mobius => Family::Mobius {
            u: oct(&a.u, "u")?,
            v: a.v.as_deref().map(parse_octonion).transpose()?.unwrap_or(Octonion::ONE),
        },
        FamilyName::Koebe => Family::Koebe {
            i: a.i.as_deref().map(parse_unit).transpose()?.unwrap_or(UnitImaginary::basis(1)),
            theta: a.theta.unwrap_or(0.0),
        },
        FamilyName::Monomial => Family::MonomialRotation { n: required(a.n, "n")?, u: oct(&a.u, "u")? },
        FamilyName::Example33 => Family::Example33 {
            i: a.i.as_deref().map(parse_unit).transpose()?.unwrap_or(UnitImaginary::basis(1)),
            j: a.j.as_deref().map(parse_unit).transpose()?.unwrap_or(UnitImaginary::basis(2)),
        },
        FamilyName::InnerExtremal => Family::InnerExtremal {
            delta: required(a.delta, "delta")?,
            xi: oct(&a.xi, "xi")?,
            c: a.c.as_deref().map(parse_octonion).transpose()?.unwrap_or(Octonion::ONE),
        },
    })
}

fn config(g: &Global, suites: &[String]) -> SuiteConfig {
    SuiteConfig {
        seed: g.seed,
        degree: g.degree,
        samples: g.samples,
        tolerances: Tolerances { alg: g.tol_alg, series: g.tol_series, sample: g.tol_sample },
        suites: if suites.is_empty() { vec!["all".into()] } else { suites.to_vec() },
    }
}

fn run_reports(cfg: &SuiteConfig, timing: bool) -> CliResult<Vec<Report>> {
    cfg.suites
        .iter()
        .map(|s| {
            let start = Instant::now();
            let mut r = run_suite(s, cfg)?;
            if timing {
                r.runtime_ms = Some(start.elapsed().as_millis() as u64);
            }
            Ok(r)
        })
        .collect()
}

fn print_table(reports: &[Report]) {
    for r in reports {
        let time = r.runtime_ms.map(|t| format!(" ({t} ms)")).unwrap_or_default();
        println!("{} {}{time}", if r.pass { "PASS" } else { "FAIL" }, r.suite);
        for c in &r.cases {
            println!("  {} {:<40} {:>11.3e}  {}", if c.pass { "ok  " } else { "FAIL" }, c.name, c.margin, c.details);
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let g = &cli.global;
    match &cli.command {
        Command::Eval { file, point } => {
            let f = read_function(file)?;
            let v = f.eval(&parse_octonion(point)?)?;
            println!("{}", serde_json::to_string(&v).expect("serializable"));
        }
        Command::Star { left, right, out } => {
            let p = read_function(left)?.star(&read_function(right)?);
            emit(&p, out.as_deref())?;
        }
        Command::Recip { file, out } => {
            let f = read_function(file)?;
            if f.num().coeffs().iter().all(|a| a.norm() == 0.0) {
                return Err(Error::IdenticallyZero.into());
            }
            emit(&f.reciprocal(), out.as_deref())?;
        }
        Command::Construct(args) => {
            let f = construct(&family(args)?)?;
            emit(&f, args.out.as_deref())?;
        }
        Command::Verify { suite, timing } => {
            let cfg = config(g, suite);
            let reports = run_reports(&cfg, *timing)?;
            if g.json {
                emit(&reports, None)?;
            } else {
                print_table(&reports);
            }
            if !reports.iter().all(|r| r.pass) {
                return Err(Failure::Verification);
            }
        }
        Command::Zeros { file, x0, y0, delta, slice, nodes } => {
            let f = read_function(file)?;
            let spec = ContourSpec::new(*x0, *y0, *delta, parse_unit(slice)?, *nodes)?;
            let r = contour_count(&f, &spec)?;
            if g.json {
                emit(&json!({ "spec": spec, "result": r }), None)?;
            } else {
                println!("count {} (raw {:.12} {:+.3e}i, guard {:.3e})", r.count, r.raw.re, r.raw.im, r.guard);
            }
        }
        Command::Report { suite, out, timing } => {
            let cfg = config(g, suite);
            let reports = run_reports(&cfg, *timing)?;
            let pass = reports.iter().all(|r| r.pass);
            emit(&json!({ "config": cfg, "pass": pass, "reports": reports }), out.as_deref())?;
            if !pass {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
