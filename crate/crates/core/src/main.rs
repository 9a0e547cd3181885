use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use katzlab::output::{self, ConvergeTarget, DEFAULT_CONVERGE_NS, DEFAULT_SCATTER_ALPHAS};
use katzlab::verify::{Level, Verifier, SUITES};
use katzlab::{Family, GraphSpec};

/// Katz, resistance and distance rankings on paths and cycles.
#[derive(Parser)]
#[command(name = "katzlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write distance, resistance and Katz values for every vertex pair.
    Scatter(ScatterArgs),
    /// Locate the cut-off roots of the path gap polynomial.
    Cutoff(CutoffArgs),
    /// Tabulate Katz entries against their large-n limit.
    Converge(ConvergeArgs),
    /// Run the built-in property sweeps.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Path => Family::Path,
            FamilyArg::Cycle => Family::Cycle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Args)]
struct ScatterArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    /// Comma-separated attenuation factors.
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_SCATTER_ALPHAS)]
    alpha: Vec<f64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct CutoffArgs {
    #[arg(long, default_value_t = 1)]
    j: usize,
    #[arg(long)]
    n_lo: usize,
    #[arg(long)]
    n_hi: usize,
    #[arg(long, default_value_t = 1e-15)]
    tol: f64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ConvergeArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Path vertex pair (path only).
    #[arg(long, requires = "j", conflicts_with = "offset")]
    i: Option<usize>,
    #[arg(long, requires = "i")]
    j: Option<usize>,
    /// Cyclic offset (cycle only).
    #[arg(long)]
    offset: Option<usize>,
    #[arg(long)]
    alpha: f64,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_CONVERGE_NS)]
    n_list: Vec<usize>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
    level: LevelArg,
    /// Run a single suite by id.
    #[arg(long)]
    suite: Option<String>,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<katzlab::Error> for Failure {
    fn from(e: katzlab::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn write_out(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn scatter(args: ScatterArgs) -> Result<(), Failure> {
    let g = GraphSpec::new(args.family.into(), args.n)?;
    let csv = output::scatter_csv(&g, &args.alpha)?;
    write_out(&args.out, &csv)?;
    println!(
        "wrote {} rows for {g} to {}",
        csv.lines().count() - 1,
        args.out.display()
    );
    Ok(())
}

fn cutoff(args: CutoffArgs) -> Result<(), Failure> {
    let table = output::cutoff_csv(args.j, args.n_lo, args.n_hi, args.tol)?;
    write_out(&args.out, &table.csv)?;
    println!(
        "j = {}, n = {}..={}: monotone_decreasing = {}, failures = {}",
        args.j, args.n_lo, args.n_hi, table.monotone_decreasing, table.failures
    );
    Ok(())
}

fn converge(args: ConvergeArgs) -> Result<(), Failure> {
    let target = match (args.family, args.i, args.j, args.offset) {
        (FamilyArg::Path, Some(i), Some(j), None) => ConvergeTarget::Path { i, j },
        (FamilyArg::Cycle, None, None, Some(offset)) => ConvergeTarget::Cycle { offset },
        (FamilyArg::Path, ..) => {
            return Err(Failure::Usage("path targets need --i and --j".into()))
        }
        (FamilyArg::Cycle, ..) => return Err(Failure::Usage("cycle targets need --offset".into())),
    };
    let csv = output::converge_csv(target, args.alpha, &args.n_list)?;
    write_out(&args.out, &csv)?;
    println!(
        "wrote {} rows to {}",
        csv.lines().count() - 1,
        args.out.display()
    );
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let (level, flag) = match args.level {
        LevelArg::Quick => (Level::Quick, "quick"),
        LevelArg::Full => (Level::Full, "full"),
    };
    let v = Verifier::new(level);
    let start = Instant::now();
    let reports = match &args.suite {
        Some(id) => match v.run_suite(id) {
            Some(r) => vec![r],
            None => {
                let ids: Vec<&str> = SUITES.iter().map(|(s, _)| *s).collect();
                return Err(Failure::Usage(format!(
                    "unknown suite '{id}'; known: {}",
                    ids.join(", ")
                )));
            }
        },
        None => v.run_all(),
    };
    let mut failed = 0;
    for r in &reports {
        println!("{r}");
        if !r.passed {
            failed += 1;
            println!(
                "       reproduce: katzlab verify --level {flag} --suite {}",
                r.id
            );
        }
    }
    println!(
        "{} of {} suites passed at level {level} in {:.2} s",
        reports.len() - failed,
        reports.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Scatter(a) => scatter(a),
        Command::Cutoff(a) => cutoff(a),
        Command::Converge(a) => converge(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
