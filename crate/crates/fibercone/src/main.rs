use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use fibercone::report::Report;
use fibercone::{casefile, exit_code, selftest, sweep};
use fibercone_core::corpus::CorpusSpec;
use fibercone_core::{analyze, Options};

#[derive(Parser)]
#[command(name = "fibercone", version, about = "Fiber cones of monomial ideals in numerical semigroup rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one case file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        seed: Option<u64>,
        /// Random reductions compared with the primary one.
        #[arg(long)]
        comparisons: Option<usize>,
        /// Fixed reporting degree N instead of the automatic choice.
        #[arg(long)]
        truncation: Option<u32>,
    },
    /// Analyze every `*.case` file in a directory, or a random corpus.
    Sweep(SweepArgs),
    /// Check the built-in fixtures.
    Selftest,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    dir: Option<PathBuf>,
    /// Corpus spec such as `count=200,seed=1,two-generated`.
    #[arg(long)]
    random: Option<String>,
    #[arg(long)]
    json: bool,
    /// Print the per-property tallies.
    #[arg(long)]
    properties: bool,
    /// Master seed for directory sweeps.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    Input(String),
    Core(fibercone_core::Error),
}

impl From<fibercone_core::Error> for Failure {
    fn from(e: fibercone_core::Error) -> Self {
        Failure::Core(e)
    }
}

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            file,
            json,
            seed,
            comparisons,
            truncation,
        } => run_analyze(&file, json, seed, comparisons, truncation),
        Command::Sweep(args) => run_sweep(&args),
        Command::Selftest => run_selftest(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error (input): {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error ({}): {e}", sweep::category_name(e.category()));
            ExitCode::from(exit_code(e.category()) as u8)
        }
    }
}

fn run_analyze(
    file: &Path,
    json: bool,
    seed: Option<u64>,
    comparisons: Option<usize>,
    truncation: Option<u32>,
) -> Result<u8, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| input(format!("{}: {e}", file.display())))?;
    let default_char = casefile::default_characteristic().map_err(input)?;
    let parsed = casefile::parse(&text, default_char).map_err(|e| input(format!("{}: {e}", file.display())))?;
    let mut options: Options = parsed.options;
    if let Some(s) = seed {
        options.seed = s;
    }
    if let Some(k) = comparisons {
        options.comparisons = k;
    }
    if truncation.is_some() {
        options.truncation = truncation;
    }
    let start = Instant::now();
    let analysis = analyze(&parsed.case, &options)?;
    let report = Report::from_analysis(&analysis);
    emit(&if json { report.to_json() + "\n" } else { report.to_text() });
    eprintln!("time {:.3}s", start.elapsed().as_secs_f64());
    Ok(0)
}

fn run_sweep(args: &SweepArgs) -> Result<u8, Failure> {
    let cases = match (&args.random, &args.dir) {
        (Some(spec), _) => {
            let spec = CorpusSpec::parse(spec).map_err(input)?;
            sweep::cases_from_corpus(&spec, &Options::default())
        }
        (None, Some(dir)) => {
            let default_char = casefile::default_characteristic().map_err(input)?;
            sweep::cases_from_dir(dir, args.seed, default_char).map_err(|e| input(format!("{e:#}")))?
        }
        (None, None) => return Err(input("sweep needs a directory or --random")),
    };
    let start = Instant::now();
    let outcomes = sweep::run(&cases);
    let summary = sweep::summarize(&outcomes);
    if args.json {
        let lines: Vec<serde_json::Value> = outcomes
            .iter()
            .map(|o| match &o.result {
                Ok((r, _)) => serde_json::json!({"name": o.name, "report": r}),
                Err(f) => serde_json::json!({"name": o.name, "error": f}),
            })
            .collect();
        let doc = serde_json::json!({"cases": lines, "summary": summary});
        emit(&(serde_json::to_string_pretty(&doc).expect("summary serializes") + "\n"));
    } else {
        let mut out = String::new();
        for o in &outcomes {
            out.push_str(&sweep::case_line(o));
            out.push('\n');
        }
        out.push_str(&sweep::summary_text(&summary, args.properties));
        emit(&out);
    }
    eprintln!("time {:.3}s", start.elapsed().as_secs_f64());
    Ok(0)
}

fn run_selftest() -> Result<u8, Failure> {
    let checks = selftest::run_all();
    let mut out = String::new();
    let mut failed = 0;
    for c in &checks {
        let status = match (c.passed(), c.known_discrepancy) {
            (true, _) => "PASS",
            (false, false) => {
                failed += 1;
                "FAIL"
            }
            (false, true) => "DIFFERS",
        };
        out.push_str(&format!("{status:<8}{}: expected {}, got {}\n", c.name, c.expected, c.got));
    }
    let differs = checks.iter().filter(|c| c.known_discrepancy && !c.passed()).count();
    out.push_str(&format!(
        "{} checks, {} failed, {} differ from the reference values\n",
        checks.len(),
        failed,
        differs
    ));
    emit(&out);
    Ok(if failed == 0 { 0 } else { 5 })
}

fn emit(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    let _ = stdout.flush();
}
