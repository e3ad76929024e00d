//! The `glasner` command line: every subcommand reads the file formats in
//! [`format`] and prints one JSON document to stdout.
//!
//! Exit codes: 0 success or affirmative finding, 2 input or configuration
//! error, 3 violation or negative finding, 4 precondition not certified.

pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::check::{check, CheckConfig};
use crate::expsum::{complete_sum, hua_experiment};
use crate::fixtures::{generator_fixture, GENERATOR_FIXTURES};
use crate::poly::{IntPoly, PolyMat};
use crate::torus::{
    eps_dense, k_min_scaling, non_glasner_witness, orbit_density_search, pair_spectrum,
    weighted_spectrum_sum, ScalingConfig,
};
use crate::unipotent::{construct_polynomial, ConstructOptions, UnipotentSystem};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;
pub const EXIT_UNCERTIFIED: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "glasner", version, about = "Hyperplane-fleeing polynomial matrices and orbit density on tori")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a polynomial matrix has hyperplane-fleeing orbits.
    Check(CheckArgs),
    /// Build A(x) from unipotent generators.
    Construct(ConstructArgs),
    /// Search n with A(n)·Y ε-dense.
    Density(DensityArgs),
    /// Least point count k(ε) for which random sets become ε-dense.
    Scaling(ScalingArgs),
    /// Complete exponential sums.
    #[command(subcommand)]
    Expsum(ExpsumCommand),
    /// Pair spectrum of an exact point set.
    Spectrum(SpectrumArgs),
    /// Finite set whose orbit avoids a band, from a violating pair.
    Witness(WitnessArgs),
}

#[derive(Args, Debug)]
struct CheckOpts {
    #[arg(long, default_value_t = 5)]
    height: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 1_000_000)]
    coord_bound: u64,
    #[arg(long)]
    seed: u64,
}

impl CheckOpts {
    fn config(&self) -> CheckConfig {
        CheckConfig { height: self.height, trials: self.trials, coord_bound: self.coord_bound, seed: self.seed }
    }
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Polynomial matrix file.
    matrix: PathBuf,
    #[command(flatten)]
    opts: CheckOpts,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// Generator list file.
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    generators: Option<PathBuf>,
    /// Built-in generators instead of a file.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(GENERATOR_FIXTURES))]
    fixture: Option<String>,
    /// Continue when irreducibility is not certified.
    #[arg(long)]
    force: bool,
    /// Write A(x) here in the polynomial matrix format.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    opts: CheckOpts,
}

#[derive(Args, Debug)]
struct DensityArgs {
    matrix: PathBuf,
    points: PathBuf,
    #[arg(long)]
    epsilon: f64,
    /// Grid spacing; defaults to ε/4.
    #[arg(long)]
    mesh: Option<f64>,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    n_min: i64,
    #[arg(long, default_value_t = 10_000, allow_hyphen_values = true)]
    n_max: i64,
}

#[derive(Args, Debug)]
struct ScalingArgs {
    matrix: PathBuf,
    /// Comma-separated list of ε values.
    #[arg(long, value_delimiter = ',', required = true)]
    epsilon: Vec<f64>,
    #[arg(long, default_value_t = 5)]
    samples: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    n_min: i64,
    #[arg(long, default_value_t = 10_000, allow_hyphen_values = true)]
    n_max: i64,
    #[arg(long, default_value_t = 4096)]
    k_max: usize,
}

#[derive(Subcommand, Debug)]
enum ExpsumCommand {
    /// (1/q) Σ_{n=1}^q e(f(n)/q) for f given by ascending integer coefficients.
    Complete {
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        coeffs: Vec<i64>,
        #[arg(long)]
        q: u64,
    },
    /// Rescaled maxima of random degree-D sums over q = 2..=q_max.
    Hua {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        q_max: u64,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    points: PathBuf,
    /// Weight exponents r for Σ h_q q^(−r).
    #[arg(long, value_delimiter = ',')]
    weight: Vec<f64>,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    matrix: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    v: String,
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    #[arg(long, default_value_t = 10)]
    size: usize,
    /// Exactly verify the band is avoided for |n| ≤ this bound.
    #[arg(long, default_value_t = 1000)]
    verify: i64,
    /// Write the witness points here in the point-set format.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Error carrying the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotCertifiedIrreducible => EXIT_UNCERTIFIED,
            Error::NotAViolation => EXIT_NEGATIVE,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: EXIT_INPUT, message: format!("{}: {e}", path.display()) }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn read_matrix(path: &Path) -> Result<PolyMat, Failure> {
    Ok(format::parse_polymat(&read(path)?)?)
}

type Outcome = Result<(Value, i32), Failure>;

fn cmd_check(args: &CheckArgs) -> Outcome {
    let a = read_matrix(&args.matrix)?;
    let report = check(&a, &args.opts.config());
    let code = if report.is_clear() { EXIT_OK } else { EXIT_NEGATIVE };
    let mut v = serde_json::to_value(&report).expect("serializable");
    v["clear"] = json!(report.is_clear());
    Ok((v, code))
}

fn cmd_construct(args: &ConstructArgs) -> Outcome {
    let sys = match (&args.fixture, &args.generators) {
        (Some(name), _) => generator_fixture(name).expect("validated by the parser"),
        (None, Some(path)) => UnipotentSystem::new(format::parse_generators(&read(path)?)?)?,
        (None, None) => unreachable!("required by the parser"),
    };
    let opts = ConstructOptions { force: args.force, check: args.opts.config() };
    let out = construct_polynomial(&sys, &opts)?;
    let a_json = format::polymat_json(&out.a);
    if let Some(path) = &args.out {
        write_file(path, &format!("{a_json}\n"))?;
    }
    let code = if out.report.is_clear() { EXIT_OK } else { EXIT_NEGATIVE };
    let v = json!({
        "d": sys.dim(),
        "m": sys.generators().len(),
        "N": out.plan.n,
        "R": out.plan.r,
        "exponents": out.plan.exponents,
        "degree": out.a.degree(),
        "forced": out.forced,
        "irreducibility": out.irreducibility,
        "verdict": out.report,
        "A": a_json,
    });
    Ok((v, code))
}

fn cmd_density(args: &DensityArgs) -> Outcome {
    let a = read_matrix(&args.matrix)?;
    let y = format::parse_points(&read(&args.points)?)?;
    let mesh = args.mesh.unwrap_or(args.epsilon / 4.0);
    let found = orbit_density_search(&a, &y, args.epsilon, Some(mesh), args.n_min, args.n_max)?;
    let report = match found {
        Some(n) => Some(eps_dense(&y.apply(&a.eval_i64(n)?)?, args.epsilon, mesh)?),
        None => None,
    };
    let v = json!({
        "epsilon": args.epsilon,
        "mesh": mesh,
        "n_min": args.n_min,
        "n_max": args.n_max,
        "k": y.len(),
        "found": found,
        "report": report,
    });
    Ok((v, if found.is_some() { EXIT_OK } else { EXIT_NEGATIVE }))
}

fn cmd_scaling(args: &ScalingArgs) -> Outcome {
    let a = read_matrix(&args.matrix)?;
    let cfg = ScalingConfig {
        epsilons: args.epsilon.clone(),
        samples: args.samples,
        seed: args.seed,
        n_min: args.n_min,
        n_max: args.n_max,
        k_max: args.k_max,
    };
    let rows = k_min_scaling(&a, &cfg)?;
    Ok((json!({ "d": a.dim(), "config": cfg, "rows": rows }), EXIT_OK))
}

fn cmd_expsum(cmd: &ExpsumCommand) -> Outcome {
    match cmd {
        ExpsumCommand::Complete { coeffs, q } => {
            let f = IntPoly::from_ints(coeffs);
            let s = complete_sum(&f, *q)?;
            Ok((json!({ "q": q, "coeffs": coeffs, "sum": s, "magnitude": s.norm() }), EXIT_OK))
        }
        ExpsumCommand::Hua { degree, delta, q_max, trials, seed } => {
            if *q_max < 2 {
                return Err(Error::InvalidInput("q_max must be at least 2".into()).into());
            }
            let qs: Vec<u64> = (2..=*q_max).collect();
            let report = hua_experiment(*degree, *delta, &qs, *trials, *seed)?;
            let v = json!({
                "degree": report.degree,
                "delta": report.delta,
                "q_max": q_max,
                "trials_per_q": trials,
                "samples": report.samples.len(),
                "empirical_c": report.empirical_c,
                "empirical_c_up_to_sqrt": report.empirical_c_up_to((*q_max as f64).sqrt() as u64),
            });
            Ok((v, EXIT_OK))
        }
    }
}

fn cmd_spectrum(args: &SpectrumArgs) -> Outcome {
    let y = format::parse_points(&read(&args.points)?)?;
    let s = pair_spectrum(&y)?;
    let weighted = args
        .weight
        .iter()
        .map(|&r| Ok(json!({ "r": r, "sum": weighted_spectrum_sum(&s, r)? })))
        .collect::<Result<Vec<Value>, Error>>()?;
    let violation = s.counting_bound_violation();
    let v = json!({
        "spectrum": s,
        "counting_bound_holds": violation.is_none(),
        "weighted": weighted,
    });
    Ok((v, if violation.is_none() { EXIT_OK } else { EXIT_NEGATIVE }))
}

fn cmd_witness(args: &WitnessArgs) -> Outcome {
    let a = read_matrix(&args.matrix)?;
    let v: Vec<BigInt> = format::parse_int_vector(&args.v)?;
    let w: Vec<BigInt> = format::parse_int_vector(&args.w)?;
    let wit = non_glasner_witness(&a, &v, &w, args.size)?;
    if args.verify < 0 {
        return Err(Error::InvalidInput("verification bound must be nonnegative".into()).into());
    }
    let entry = wit.first_entry(&a, -args.verify, args.verify)?;
    if let Some(path) = &args.out {
        write_file(path, &format::format_points(&wit.points))?;
    }
    let out = json!({
        "points": format::format_points(&wit.points).lines().collect::<Vec<_>>(),
        "band": wit.band,
        "c": crate::serde_big::int_to_json(&wit.c),
        "verified_range": [-args.verify, args.verify],
        "verified": entry.is_none(),
        "entry": entry,
    });
    Ok((out, if entry.is_none() { EXIT_OK } else { EXIT_NEGATIVE }))
}

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check(a) => cmd_check(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Density(a) => cmd_density(a),
        Command::Scaling(a) => cmd_scaling(a),
        Command::Expsum(c) => cmd_expsum(c),
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Witness(a) => cmd_witness(a),
    }
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((value, code)) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"));
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
