use clap::{Args, Parser, Subcommand, ValueEnum};
use epstein::applications::{self, BoxGeometry};
use epstein::benchmark::{self, BenchRow};
use epstein::incomplete_gamma as ig;
use epstein::{CaseId, Error, Lattice};
use rayon::prelude::*;
use serde::Serialize;
use std::fs;
use std::io::Write;
use std::process::ExitCode;

const EXIT_USAGE: u8 = 2;
const EXIT_POLE: u8 = 3;
const EXIT_ACCURACY: u8 = 4;

#[derive(Parser)]
#[command(name = "epstein", version, about = "Epstein zeta function and lattice sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Z_{Λ,ν}(x, y)
    Eval(EvalArgs),
    /// Evaluate the regularised function e^{2πi x·y} Z - ŝ_ν(y)/V
    EvalReg(EvalArgs),
    /// Sweep the closed-form cases over a grid of ν and report errors and timings
    Bench(BenchArgs),
    /// Incomplete gamma functions at (a, x)
    Gamma(GammaArgs),
    /// Spin-wave dispersion ω(k) = JS (Z(0,0) - Z(0,k))
    Dispersion(DispersionArgs),
    /// Casimir energy, force or unit-volume energy surface of a box
    Casimir(CasimirArgs),
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Args)]
struct LatticeArgs {
    /// Dimension (defaults to the length of --x, --y or the matrix size)
    #[arg(long)]
    dim: Option<usize>,
    /// Row-major generator matrix, comma-separated (defaults to the identity)
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    lattice: LatticeArgs,
    /// Shift x, comma-separated (defaults to 0)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Wave vector y, comma-separated (defaults to 0)
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "nu_range", required_unless_present = "nu_range")]
    nu: Option<f64>,
    /// start:stop:step
    #[arg(long, allow_hyphen_values = true)]
    nu_range: Option<String>,
    /// Evaluate the regularised function
    #[arg(long)]
    regularised: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct BenchArgs {
    /// start:stop:step (defaults to -12.5+2^-15 : 12.5+2^-15 : 0.05)
    #[arg(long, allow_hyphen_values = true)]
    nu_range: Option<String>,
    /// Cases to run, comma-separated or repeated (defaults to S1..S4)
    #[arg(long = "case", value_delimiter = ',')]
    cases: Vec<String>,
    /// Skip the regularised function
    #[arg(long)]
    no_regularised: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct GammaArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct DispersionArgs {
    #[command(flatten)]
    lattice: LatticeArgs,
    #[arg(long, allow_hyphen_values = true)]
    nu: f64,
    /// Single wave vector, comma-separated
    #[arg(long, allow_hyphen_values = true, conflicts_with = "k_range")]
    k: Option<String>,
    /// lo:hi:count, geometric samples of |k| along the first axis (default 2π·1e-3 : 2π·1e-2 : 11)
    #[arg(long)]
    k_range: Option<String>,
    #[arg(long, default_value_t = 1.0)]
    js: f64,
    /// Also fit the small-k exponent
    #[arg(long)]
    fit: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CasimirArgs {
    #[command(subcommand)]
    what: CasimirCommand,
}

#[derive(Subcommand)]
enum CasimirCommand {
    /// Energy π Z_{Λ*,-1}(0,0) of the box with the given edges
    Energy {
        #[arg(long)]
        edges: String,
        #[command(flatten)]
        output: Output,
    },
    /// Force -dE/dL on the box (L, 1, 1)
    Force {
        #[arg(long = "length")]
        length: f64,
        /// Finite-difference step (default L/100)
        #[arg(long)]
        step: Option<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Energies of the boxes (L1, L2, 1/(L1 L2)) on a geometric grid
    Surface {
        #[arg(long, default_value_t = 0.5)]
        min: f64,
        #[arg(long, default_value_t = 2.0)]
        max: f64,
        #[arg(long, default_value_t = 21)]
        points: usize,
        #[command(flatten)]
        output: Output,
    },
}

/// Failure carrying the exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Pole { .. } => EXIT_POLE,
            Error::DimensionMismatch { .. }
            | Error::UnsupportedDimension(_)
            | Error::InvalidLattice(_)
            | Error::Domain(_)
            | Error::UnknownCase(_) => EXIT_USAGE,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Eval(a) => eval(a, false),
        Command::EvalReg(a) => eval(a, true),
        Command::Bench(a) => bench(a),
        Command::Gamma(a) => gamma(a),
        Command::Dispersion(a) => dispersion(a),
        Command::Casimir(a) => casimir(a),
    };
    match run {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_list(name: &str, s: &str) -> CliResult<Vec<f64>> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| usage(format!("--{name}: cannot parse {t:?} as a number"))))
        .collect()
}

fn parse_range(s: &str) -> CliResult<(f64, f64, f64)> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(usage(format!("range {s:?} must be start:stop:step")));
    }
    let p = |t: &str| t.trim().parse::<f64>().map_err(|_| usage(format!("cannot parse {t:?} in range {s:?}")));
    Ok((p(parts[0])?, p(parts[1])?, p(parts[2])?))
}

fn build_lattice(args: &LatticeArgs, vectors: &[&Option<String>]) -> CliResult<Lattice> {
    let matrix = args.matrix.as_deref().map(|m| parse_list("matrix", m)).transpose()?;
    let from_vectors = vectors.iter().find_map(|v| v.as_deref().map(|s| s.split(',').count()));
    let from_matrix = matrix.as_ref().map(|m| (m.len() as f64).sqrt().round() as usize);
    let dim = args
        .dim
        .or(from_matrix)
        .or(from_vectors)
        .ok_or_else(|| usage("cannot infer the dimension; pass --dim"))?;
    let lattice = match matrix {
        Some(m) => {
            if m.len() != dim * dim {
                return Err(usage(format!("--matrix has {} entries, expected {}", m.len(), dim * dim)));
            }
            Lattice::new(dim, &m)?
        }
        None => Lattice::identity(dim)?,
    };
    Ok(lattice)
}

fn vector(name: &str, s: &Option<String>, dim: usize) -> CliResult<Vec<f64>> {
    match s {
        None => Ok(vec![0.0; dim]),
        Some(s) => {
            let v = parse_list(name, s)?;
            if v.len() != dim {
                return Err(usage(format!("--{name} has {} entries, expected {dim}", v.len())));
            }
            Ok(v)
        }
    }
}

fn emit(output: &Output, text: &str) -> CliResult<()> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure { code: 1, message: format!("writing {path}: {e}") }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Failure { code: 1, message: e.to_string() })
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn g(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Serialize)]
struct EvalRecord {
    nu: f64,
    re: Option<f64>,
    im: Option<f64>,
    pole: bool,
}

fn eval(args: EvalArgs, reg_command: bool) -> CliResult<u8> {
    let regularised = reg_command || args.regularised;
    let lattice = build_lattice(&args.lattice, &[&args.x, &args.y])?;
    let d = lattice.dim();
    let x = vector("x", &args.x, d)?;
    let y = vector("y", &args.y, d)?;
    let nus = match (&args.nu, &args.nu_range) {
        (Some(nu), _) => vec![*nu],
        (None, Some(r)) => {
            let (a, b, s) = parse_range(r)?;
            benchmark::nu_grid(a, b, s)?
        }
        (None, None) => return Err(usage("pass --nu or --nu-range")),
    };
    let mut records = Vec::with_capacity(nus.len());
    for &nu in &nus {
        let r = if regularised {
            epstein::epstein_zeta_reg(nu, &lattice, &x, &y)
        } else {
            epstein::epstein_zeta(nu, &lattice, &x, &y)
        };
        match r {
            Ok(z) => records.push(EvalRecord { nu, re: Some(z.re), im: Some(z.im), pole: false }),
            Err(Error::Pole { .. }) => records.push(EvalRecord { nu, re: None, im: None, pole: true }),
            Err(e) => return Err(e.into()),
        }
    }
    let single = args.nu.is_some();
    let cell = |v: Option<f64>| v.map(g).unwrap_or_else(|| "pole".into());
    let text = match args.output.format {
        Format::Plain => {
            let mut s = String::new();
            for r in &records {
                let line = match (single, r.pole) {
                    (true, true) => "pole".to_string(),
                    (true, false) => format!("{} {}", cell(r.re), cell(r.im)),
                    (false, true) => format!("{} pole", g(r.nu)),
                    (false, false) => format!("{} {} {}", g(r.nu), cell(r.re), cell(r.im)),
                };
                s.push_str(&line);
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("nu,re,im\n");
            for r in &records {
                s.push_str(&format!("{},{},{}\n", g(r.nu), cell(r.re), cell(r.im)));
            }
            s
        }
        Format::Json if single => json(&records[0]),
        Format::Json => json(&records),
    };
    emit(&args.output, &text)?;
    Ok(if records.iter().any(|r| r.pole) { EXIT_POLE } else { 0 })
}

#[derive(Serialize)]
struct SummaryRecord {
    case: String,
    regularised: bool,
    points: usize,
    max_error: f64,
    worst_nu: f64,
    min_seconds: f64,
    mean_seconds: f64,
    max_seconds: f64,
    threshold: f64,
    passed: bool,
}

#[derive(Serialize)]
struct RowRecord {
    case: String,
    d: usize,
    nu: f64,
    regularised: bool,
    reference: f64,
    computed_re: f64,
    computed_im: f64,
    error: f64,
    seconds: f64,
}

impl From<&BenchRow> for RowRecord {
    fn from(r: &BenchRow) -> Self {
        RowRecord {
            case: r.case.to_string(),
            d: r.dim,
            nu: r.nu,
            regularised: r.regularised,
            reference: r.reference,
            computed_re: r.computed.re,
            computed_im: r.computed.im,
            error: r.error,
            seconds: r.seconds,
        }
    }
}

fn bench(args: BenchArgs) -> CliResult<u8> {
    let cases: Vec<CaseId> = if args.cases.is_empty() {
        CaseId::DEFAULT.to_vec()
    } else {
        let names: Vec<&str> = args.cases.iter().map(|s| s.trim()).filter(|s| !s.is_empty()).collect();
        if names.is_empty() {
            return Err(usage("empty case set"));
        }
        names.iter().map(|s| s.parse::<CaseId>()).collect::<Result<_, _>>()?
    };
    let grid = match &args.nu_range {
        Some(r) => {
            let (a, b, s) = parse_range(r)?;
            benchmark::nu_grid(a, b, s)?
        }
        None => benchmark::default_grid(),
    };
    let jobs: Vec<(CaseId, f64)> = cases.iter().flat_map(|c| grid.iter().map(move |nu| (*c, *nu))).collect();
    let results: Vec<_> = jobs.par_iter().map(|(c, nu)| benchmark::bench_point(*c, *nu)).collect();
    let mut rows = Vec::new();
    for r in results {
        rows.extend(r?);
    }
    if args.no_regularised {
        rows.retain(|r| !r.regularised);
    }
    let summaries = benchmark::summarize(&rows);
    let passed = summaries.iter().all(|s| s.passed());
    match args.output.format {
        Format::Plain => {
            let mut s = String::from(BenchRow::CSV_HEADER);
            s.push('\n');
            for r in &rows {
                s.push_str(&r.to_csv());
                s.push('\n');
            }
            if args.output.out.is_some() {
                emit(&args.output, &s)?;
            }
            print!("{}", benchmark::format_summary(&summaries));
        }
        Format::Csv => {
            let mut s = String::from(BenchRow::CSV_HEADER);
            s.push('\n');
            for r in &rows {
                s.push_str(&r.to_csv());
                s.push('\n');
            }
            emit(&args.output, &s)?;
            eprint!("{}", benchmark::format_summary(&summaries));
        }
        Format::Json => {
            let summary: Vec<SummaryRecord> = summaries
                .iter()
                .map(|s| SummaryRecord {
                    case: s.case.to_string(),
                    regularised: s.regularised,
                    points: s.points,
                    max_error: s.max_error,
                    worst_nu: s.worst_nu,
                    min_seconds: s.min_seconds,
                    mean_seconds: s.mean_seconds,
                    max_seconds: s.max_seconds,
                    threshold: s.threshold,
                    passed: s.passed(),
                })
                .collect();
            let rows: Vec<RowRecord> = rows.iter().map(RowRecord::from).collect();
            emit(&args.output, &json(&serde_json::json!({ "summary": summary, "rows": rows })))?;
        }
    }
    Ok(if passed { 0 } else { EXIT_ACCURACY })
}

#[derive(Serialize)]
struct GammaRecord {
    a: f64,
    x: f64,
    region: &'static str,
    upper_gamma: Option<f64>,
    regularized_p: Option<f64>,
    regularized_q: Option<f64>,
    gamma_star: Option<f64>,
}

fn gamma(args: GammaArgs) -> CliResult<u8> {
    let (a, x) = (args.a, args.x);
    if !a.is_finite() || !(x >= 0.0) || !x.is_finite() {
        return Err(usage(format!("need finite a and x >= 0, got a = {a}, x = {x}")));
    }
    let rec = GammaRecord {
        a,
        x,
        region: ig::select_region(a, x).name(),
        upper_gamma: ig::upper_gamma(a, x).ok(),
        regularized_p: ig::regularized_p(a, x).ok(),
        regularized_q: ig::regularized_q(a, x).ok(),
        gamma_star: ig::gamma_star(a, x).ok(),
    };
    let cell = |v: Option<f64>| v.map(g).unwrap_or_else(|| "undefined".into());
    let text = match args.output.format {
        Format::Plain => format!(
            "region {}\nupper_gamma {}\nregularized_p {}\nregularized_q {}\ngamma_star {}\n",
            rec.region,
            cell(rec.upper_gamma),
            cell(rec.regularized_p),
            cell(rec.regularized_q),
            cell(rec.gamma_star)
        ),
        Format::Csv => format!(
            "a,x,region,upper_gamma,regularized_p,regularized_q,gamma_star\n{},{},{},{},{},{},{}\n",
            g(a),
            g(x),
            rec.region,
            cell(rec.upper_gamma),
            cell(rec.regularized_p),
            cell(rec.regularized_q),
            cell(rec.gamma_star)
        ),
        Format::Json => json(&rec),
    };
    emit(&args.output, &text)?;
    Ok(0)
}

fn dispersion(args: DispersionArgs) -> CliResult<u8> {
    let lattice = build_lattice(&args.lattice, &[&args.k])?;
    let d = lattice.dim();
    if let Some(k) = &args.k {
        let k = vector("k", &Some(k.clone()), d)?;
        let w = applications::spin_wave_dispersion(args.nu, &lattice, &k, args.js)?;
        let text = match args.output.format {
            Format::Plain => format!("{}\n", g(w)),
            Format::Csv => format!("omega\n{}\n", g(w)),
            Format::Json => json(&serde_json::json!({ "nu": args.nu, "k": k, "omega": w })),
        };
        emit(&args.output, &text)?;
        return Ok(0);
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let (lo, hi, n) = match &args.k_range {
        Some(r) => {
            let (lo, hi, n) = parse_range(r)?;
            if !(lo > 0.0 && hi > lo && n >= 2.0 && n.fract() == 0.0) {
                return Err(usage("--k-range needs 0 < lo < hi and an integer count >= 2"));
            }
            (lo, hi, n as usize)
        }
        None => (two_pi * 1e-3, two_pi * 1e-2, 11),
    };
    let ks = applications::geometric_grid(lo, hi, n);
    let pts: Vec<(f64, f64)> = ks
        .par_iter()
        .map(|&k| {
            let mut v = vec![0.0; d];
            v[0] = k;
            applications::spin_wave_dispersion(args.nu, &lattice, &v, args.js).map(|w| (k, w))
        })
        .collect::<Result<_, _>>()?;
    let fit = if args.fit {
        let (x, y): (Vec<f64>, Vec<f64>) = pts.iter().copied().unzip();
        Some(applications::fit_power_law(&x, &y)?)
    } else {
        None
    };
    let text = match args.output.format {
        Format::Plain | Format::Csv => applications::dispersion_csv(&pts),
        Format::Json => json(&serde_json::json!({
            "nu": args.nu,
            "points": pts.iter().map(|(k, w)| serde_json::json!({ "k": k, "omega": w })).collect::<Vec<_>>(),
            "exponent": fit.map(|f| f.exponent),
        })),
    };
    emit(&args.output, &text)?;
    if let (Some(f), false) = (fit, matches!(args.output.format, Format::Json)) {
        eprintln!("fitted exponent {}", g(f.exponent));
    }
    Ok(0)
}

fn casimir(args: CasimirArgs) -> CliResult<u8> {
    match args.what {
        CasimirCommand::Energy { edges, output } => {
            let edges = parse_list("edges", &edges)?;
            let e = applications::casimir_energy(&BoxGeometry::new(&edges)?)?;
            let text = match output.format {
                Format::Plain => format!("{}\n", g(e)),
                Format::Csv => format!("energy\n{}\n", g(e)),
                Format::Json => json(&serde_json::json!({ "edges": edges, "energy": e })),
            };
            emit(&output, &text)?;
        }
        CasimirCommand::Force { length, step, output } => {
            let step = step.unwrap_or(length * applications::FORCE_STEP_FRACTION);
            let f = applications::casimir_force(length, step)?;
            let asym = applications::casimir_force_asymptotic(length);
            let text = match output.format {
                Format::Plain => format!("{}\n", g(f)),
                Format::Csv => format!("L,force,asymptotic\n{},{},{}\n", g(length), g(f), g(asym)),
                Format::Json => json(&serde_json::json!({ "L": length, "force": f, "asymptotic": asym })),
            };
            emit(&output, &text)?;
        }
        CasimirCommand::Surface { min, max, points, output } => {
            if !(min > 0.0 && max > min && points >= 2) {
                return Err(usage("surface needs 0 < min < max and at least two points"));
            }
            let grid = applications::geometric_grid(min, max, points);
            let rows: Vec<Vec<(f64, f64, f64)>> = grid
                .par_iter()
                .map(|&a| applications::energy_surface(&[a], &grid))
                .collect::<Result<_, _>>()?;
            let pts: Vec<(f64, f64, f64)> = rows.into_iter().flatten().collect();
            let text = match output.format {
                Format::Plain | Format::Csv => applications::energy_surface_csv(&pts),
                Format::Json => json(
                    &pts.iter()
                        .map(|(a, b, e)| serde_json::json!({ "L1": a, "L2": b, "L3": 1.0 / (a * b), "energy": e }))
                        .collect::<Vec<_>>(),
                ),
            };
            emit(&output, &text)?;
        }
    }
    Ok(0)
}
