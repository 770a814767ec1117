use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_complex::Complex64;
use permchow::chow::{
    build_glynn, build_ryser, decompose_bivariate_quadratic, AnyDecomposition, QuadraticCoefficients, TargetSpec,
};
use permchow::monoid::{enumerate_classes, hardy_ramanujan_estimate, partition_count, partitions, SignPattern};
use permchow::orbital::{solve, SolveField, SolverConfig};
use permchow::permanent::{permanent_any, Algorithm};
use permchow::{guard, AnyMatrix, Limits, PermError, SquareMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

/// `println!` that reports write failures instead of panicking, so piping
/// into `head` does not abort.
macro_rules! say {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout(), $($arg)*)?
    };
}

const EXIT_VERIFY_FAILED: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_MALFORMED: u8 = 4;

const AFTER_HELP: &str = "\
Exit codes: 0 success, 2 verification failed, 3 dimension guard exceeded, 4 malformed input.

Environment:
  PERMCHOW_GUARD_OVERRIDE  Set to any value other than 0 to lift every dimension guard.
                           This is a footgun: guarded operations grow like n!, 2^n or n^n
                           and will happily run for hours or exhaust memory.";

#[derive(Debug, Parser)]
#[command(name = "permchow", version, about = "Matrix permanents and their Chow decompositions", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate or benchmark permanents.
    #[command(subcommand)]
    Perm(PermCommand),
    /// InDegIso classes of the transformation monoid on {0..n-1}.
    #[command(subcommand)]
    Classes(ClassesCommand),
    /// Print the number of integer partitions of n.
    Partition(PartitionArgs),
    /// Build, verify and search for Chow decompositions.
    #[command(subcommand)]
    Chow(ChowCommand),
}

#[derive(Debug, Subcommand)]
enum PermCommand {
    /// Print the permanent of a matrix file.
    Eval(EvalArgs),
    /// Time algorithms on random integer matrices; prints CSV n,algo,wall_ms,checksum.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// JSON matrix file: {"n": int, "field": "int"|"rational"|"complex", "entries": [[...]]}.
    #[arg(long)]
    matrix: PathBuf,
    /// naive, ryser, glynn, hadamard-ryser or hadamard-glynn.
    #[arg(long, default_value = "ryser")]
    algo: String,
    /// Sample step for the Hadamard algorithms, in the matrix's field (default 1).
    #[arg(long)]
    h: Option<String>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    n_from: usize,
    #[arg(long)]
    n_to: usize,
    /// Comma-separated algorithm names.
    #[arg(long, default_value = "naive,ryser")]
    algo: String,
    /// Timed runs per (n, algorithm).
    #[arg(long, default_value_t = 1)]
    reps: usize,
    /// Seed for the random matrices (entries in [-5, 5]).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum ClassesCommand {
    /// One row per class: partition, representative, orbit size, stabilizer order.
    List(ClassesArgs),
}

#[derive(Debug, Args)]
struct ClassesArgs {
    #[arg(long)]
    n: usize,
    /// Print a JSON array instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct PartitionArgs {
    #[arg(long)]
    n: usize,
    /// Also print every partition, one per line (n <= 30).
    #[arg(long)]
    list: bool,
    /// Print {"n", "count", "estimate"} as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum ChowCommand {
    /// Write the Ryser or Glynn certificate for the n x n permanent.
    Build(BuildArgs),
    /// Check every coefficient of a decomposition file against a target.
    Verify(VerifyArgs),
    /// Rank <= 2 decomposition of a bivariate quadratic.
    Quad(QuadArgs),
    /// Numerical search for a rank-rho row-structured decomposition.
    Solve(SolveArgs),
}

#[derive(Debug, Args)]
struct BuildArgs {
    /// ryser or glynn.
    #[arg(long)]
    method: String,
    #[arg(long)]
    n: usize,
    /// Output file; stdout when omitted.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Decomposition file: {"n", "rho", "field", "B": [rho][n][n]}.
    #[arg(long)]
    decomp: PathBuf,
    /// per, signed-default, or signed:FILE with a sign-pattern file.
    #[arg(long, default_value = "per")]
    target: String,
    /// Absolute tolerance for complex decompositions; exact fields ignore it.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Debug, Args)]
struct QuadArgs {
    /// a,b0,b1,c00,c01,c10,c11 for a + b0 x0 + b1 x1 + c00 x0^2 + (c01+c10) x0 x1 + c11 x1^2.
    /// Each value is real or complex, e.g. 2, -1.5 or 1+2i.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    rho: usize,
    /// per or signed-default.
    #[arg(long, default_value = "signed-default")]
    target: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    restarts: usize,
    /// real or complex.
    #[arg(long, default_value = "real")]
    field: String,
    /// Minimise the orbit-reduced system instead of the full one.
    #[arg(long)]
    reduced_only: bool,
    #[arg(long, default_value_t = 500)]
    max_iters: usize,
    /// Report file; stdout when omitted.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_MALFORMED)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let guard = e.chain().any(|c| c.downcast_ref::<PermError>().is_some_and(PermError::is_guard));
            ExitCode::from(if guard { EXIT_GUARD } else { EXIT_MALFORMED })
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .any(|c| c.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe))
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Perm(PermCommand::Eval(args)) => perm_eval(args),
        Command::Perm(PermCommand::Bench(args)) => perm_bench(args),
        Command::Classes(ClassesCommand::List(args)) => classes_list(args),
        Command::Partition(args) => partition(args),
        Command::Chow(ChowCommand::Build(args)) => chow_build(args),
        Command::Chow(ChowCommand::Verify(args)) => chow_verify(args),
        Command::Chow(ChowCommand::Quad(args)) => chow_quad(args),
        Command::Chow(ChowCommand::Solve(args)) => chow_solve(args),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display())),
        None => {
            say!("{text}");
            Ok(())
        }
    }
}

fn perm_eval(args: EvalArgs) -> anyhow::Result<u8> {
    let algo = Algorithm::from_str(&args.algo)?;
    let matrix = AnyMatrix::from_json_str(&read(&args.matrix)?)?;
    let h = args.h.as_deref().map(|text| matrix.parse_scalar(text)).transpose()?;
    say!("{}", permanent_any(&matrix, algo, h.as_ref())?);
    Ok(0)
}

fn perm_bench(args: BenchArgs) -> anyhow::Result<u8> {
    let algos = args
        .algo
        .split(',')
        .map(|name| Algorithm::from_str(name.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    if args.n_from == 0 || args.n_from > args.n_to {
        bail!(PermError::Malformed(format!("empty range {}..={}", args.n_from, args.n_to)));
    }
    if args.reps == 0 {
        bail!(PermError::Malformed("reps must be at least 1".into()));
    }
    let limits = Limits::current();
    for &algo in &algos {
        guard(algo.name(), args.n_to, algo.limit(limits))?;
    }

    let mut stdout = std::io::stdout().lock();
    writeln!(stdout, "n,algo,wall_ms,checksum")?;
    let mut mismatch = false;
    for n in args.n_from..=args.n_to {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed.wrapping_add(n as u64));
        let a = SquareMatrix::from_fn(n, |_, _| BigInt::from(rng.random_range(-5i64..=5)))?;
        let mut first: Option<BigInt> = None;
        for &algo in &algos {
            for _ in 0..args.reps {
                let start = Instant::now();
                let value = algo.run(&a)?;
                let ms = start.elapsed().as_secs_f64() * 1e3;
                writeln!(stdout, "{n},{algo},{ms:.3},{value}")?;
                match &first {
                    Some(v) if *v != value => mismatch = true,
                    Some(_) => {}
                    None => first = Some(value),
                }
            }
        }
    }
    if mismatch {
        eprintln!("checksum mismatch between algorithms");
        return Ok(EXIT_VERIFY_FAILED);
    }
    Ok(0)
}

fn classes_list(args: ClassesArgs) -> anyhow::Result<u8> {
    let classes = enumerate_classes(args.n)?;
    if args.json {
        let records: Vec<_> = classes
            .iter()
            .map(|c| {
                json!({
                    "partition": c.partition.parts(),
                    "representative": c.representative.digit_string(),
                    "orbit_size": c.orbit_size.to_string(),
                    "stabilizer_order": c.stabilizer_order.to_string(),
                })
            })
            .collect();
        say!("{}", serde_json::to_string_pretty(&records)?);
    } else {
        say!("partition\trepresentative\torbit_size\tstabilizer_order");
        for c in &classes {
            say!(
                "{}\t{}\t{}\t{}",
                c.partition,
                c.representative.digit_string(),
                c.orbit_size,
                c.stabilizer_order
            );
        }
    }
    Ok(0)
}

fn partition(args: PartitionArgs) -> anyhow::Result<u8> {
    let count = partition_count(args.n);
    if args.list && args.n > 30 {
        bail!(PermError::Malformed("--list is limited to n <= 30".into()));
    }
    if args.json {
        let mut doc = json!({
            "n": args.n,
            "count": count.to_string(),
            "estimate": (args.n > 0).then(|| hardy_ramanujan_estimate(args.n)),
        });
        if args.list {
            doc["partitions"] = json!(partitions(args.n).iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>());
        }
        say!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        say!("{count}");
        if args.list {
            for p in partitions(args.n) {
                say!("{p}");
            }
        }
    }
    Ok(0)
}

fn chow_build(args: BuildArgs) -> anyhow::Result<u8> {
    if args.n == 0 {
        bail!(PermError::EmptyDimension);
    }
    guard("chow build", args.n, Limits::current().certificates)?;
    let doc = match args.method.as_str() {
        "ryser" => build_ryser(args.n).to_json_value(),
        "glynn" => build_glynn(args.n).to_json_value(),
        other => bail!(PermError::Malformed(format!("unknown method {other:?}; expected ryser or glynn"))),
    };
    emit(args.output.as_deref(), &serde_json::to_string(&doc)?)?;
    Ok(0)
}

fn parse_target(spec: &str, n: usize) -> anyhow::Result<TargetSpec> {
    Ok(match spec {
        "per" => TargetSpec::permanent(n),
        "signed-default" => TargetSpec::signed_default(n),
        other => match other.strip_prefix("signed:") {
            Some(path) => {
                let pattern = SignPattern::from_json_str(&read(Path::new(path))?)?;
                if pattern.n() != n {
                    bail!(PermError::DimensionMismatch { expected: n, found: pattern.n() });
                }
                TargetSpec::signed(pattern)
            }
            None => bail!(PermError::Malformed(format!(
                "unknown target {other:?}; expected per, signed-default or signed:FILE"
            ))),
        },
    })
}

fn chow_verify(args: VerifyArgs) -> anyhow::Result<u8> {
    if args.tol.is_nan() || args.tol < 0.0 {
        bail!(PermError::Malformed("tolerance must be non-negative".into()));
    }
    let decomposition = AnyDecomposition::from_json_str(&read(&args.decomp)?)?;
    let target = parse_target(&args.target, decomposition.n())?;
    let report = decomposition.verify(&target, args.tol)?;
    say!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if report.violations == 0 { 0 } else { EXIT_VERIFY_FAILED })
}

fn chow_quad(args: QuadArgs) -> anyhow::Result<u8> {
    let values = args
        .coeffs
        .split(',')
        .map(|s| {
            Complex64::from_str(s.trim()).map_err(|_| PermError::Malformed(format!("not a number: {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let q = QuadraticCoefficients::from_slice(&values)?;
    let decomposition = decompose_bivariate_quadratic(&q);
    say!("{}", serde_json::to_string_pretty(&decomposition.to_json_value())?);
    Ok(0)
}

fn chow_solve(args: SolveArgs) -> anyhow::Result<u8> {
    let target = match args.target.as_str() {
        "per" | "signed-default" => parse_target(&args.target, args.n)?,
        other => bail!(PermError::Malformed(format!("unknown target {other:?}; expected per or signed-default"))),
    };
    let mut cfg = SolverConfig::new(args.rho);
    cfg.field = SolveField::from_str(&args.field)?;
    cfg.seed = args.seed;
    cfg.restarts = args.restarts;
    cfg.reduced_only = args.reduced_only;
    cfg.max_iters = args.max_iters;
    let report = solve(args.n, &target, &cfg)?;
    emit(args.output.as_deref(), &serde_json::to_string_pretty(&report.to_json_value())?)?;
    if args.output.is_some() {
        say!(
            "converged={} best_residual={:e} restart={}",
            report.converged, report.best_residual, report.restart_index
        );
    }
    Ok(0)
}
