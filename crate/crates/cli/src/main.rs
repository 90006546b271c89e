mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nakayama::harness::{sweep, Check, SweepConfig};
use nakayama::schema::{analysis_report, parse_algebra, reduction_report, step_report};
use nakayama::{
    reduce_fully, unamalgamate, AlgebraClass, CyclicComplex, NakayamaAlgebra, ResolutionQuiver, SimplicialComplex,
};
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "nakayama", version, about = "Homological invariants of Nakayama algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report: Kupisch series, resolution quiver, relation complex, HC, gl.dim, verdicts.
    Analyze(Input),
    /// Resolution quiver, optionally written as Graphviz DOT.
    Quiver {
        #[command(flatten)]
        input: Input,
        /// Write DOT here (`-` for stdout).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Relation complex; `--out` writes the simplex list.
    Complex(Input),
    /// Degree-n cyclic homology of the radical.
    Hc(Input),
    /// Projective dimensions of the simples and the global dimension.
    Gldim(Input),
    /// One unamalgamation step at a leaf of the resolution quiver.
    Unamalgamate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        leaf: usize,
    },
    /// Unamalgamate repeatedly (smallest leaf first) until no leaf remains.
    Reduce(Input),
    /// Check every algebra up to the bounds; exit 2 on any counterexample.
    Sweep(SweepArgs),
}

#[derive(clap::Args, Debug)]
struct Input {
    /// Algebra JSON (`-` for stdin).
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct SweepArgs {
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long)]
    c_max: usize,
    /// Restrict to these classes (cyclic, linear, product).
    #[arg(long, value_delimiter = ',')]
    class: Vec<AlgebraClass>,
    /// Subset of A, B, Bprime, C, HCvsBetti, UnamalgamationProps, SameWeight.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<Check>,
    /// Resume strictly after this Kupisch series, e.g. `3,3,2`.
    #[arg(long, value_delimiter = ',')]
    start_after: Option<Vec<usize>>,
    /// Directory receiving `sweep.csv` and `sweep.json`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Input(#[from] nakayama::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Input(e) => e.code(),
            CliError::Io { .. } => "IO",
            CliError::Usage(_) => "USAGE",
        }
    }
}

enum Outcome {
    Ok,
    Counterexample,
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn load(path: &Path) -> Result<NakayamaAlgebra, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err(path))?;
        s
    } else {
        fs::read_to_string(path).map_err(io_err(path))?
    };
    Ok(parse_algebra(&text)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) if path.as_os_str() != "-" => fs::write(path, text).map_err(io_err(path)),
        _ => io::stdout()
            .write_all(text.as_bytes())
            .map_err(io_err(Path::new("<stdout>"))),
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Analyze(input) => {
            let alg = load(&input.file)?;
            let text = match input.format {
                Format::Json => pretty(&analysis_report(&alg)),
                Format::Text => render::analysis(&alg),
                Format::Csv => return Err(CliError::Usage("analyze supports json and text".into())),
            };
            emit(input.out.as_deref(), &text)?;
        }
        Command::Quiver { input, dot } => {
            let alg = load(&input.file)?;
            let rq = ResolutionQuiver::build(&alg);
            if let Some(path) = dot {
                emit(Some(&path), &rq.to_dot())?;
                if path.as_os_str() == "-" {
                    return Ok(Outcome::Ok);
                }
            }
            let text = match input.format {
                Format::Json => pretty(&serde_json::to_value(&rq).expect("serializable")),
                _ => render::quiver(&rq),
            };
            emit(input.out.as_deref(), &text)?;
        }
        Command::Complex(input) => {
            let alg = load(&input.file)?;
            let l = SimplicialComplex::build(&alg);
            if let Some(path) = &input.out {
                emit(Some(path), &l.to_off())?;
            }
            let text = match input.format {
                Format::Json => pretty(&serde_json::to_value(l.report()).expect("serializable")),
                _ => render::complex(&alg, &l),
            };
            emit(None, &text)?;
        }
        Command::Hc(input) => {
            let alg = load(&input.file)?;
            let cx = CyclicComplex::build(&alg);
            let text = match input.format {
                Format::Json => pretty(&serde_json::to_value(cx.report()).expect("serializable")),
                _ => render::hc(&cx),
            };
            emit(input.out.as_deref(), &text)?;
        }
        Command::Gldim(input) => {
            let alg = load(&input.file)?;
            let text = match input.format {
                Format::Json => pretty(&serde_json::json!({
                    "simple_projective_dimensions": alg.simple_projective_dimensions(),
                    "gldim": alg.global_dimension(),
                })),
                _ => render::gldim(&alg),
            };
            emit(input.out.as_deref(), &text)?;
        }
        Command::Unamalgamate { input, leaf } => {
            let alg = load(&input.file)?;
            let step = unamalgamate(&alg, leaf)?;
            let text = match input.format {
                Format::Text => render::step(&step),
                _ => pretty(&step_report(&step)),
            };
            emit(input.out.as_deref(), &text)?;
        }
        Command::Reduce(input) => {
            let alg = load(&input.file)?;
            let reduction = reduce_fully(&alg);
            let text = match input.format {
                Format::Text => render::reduction(&alg, &reduction),
                _ => pretty(&reduction_report(&alg, &reduction)),
            };
            emit(input.out.as_deref(), &text)?;
        }
        Command::Sweep(args) => return run_sweep(args),
    }
    Ok(Outcome::Ok)
}

fn run_sweep(args: SweepArgs) -> Result<Outcome, CliError> {
    let mut config = SweepConfig::new(args.n_min, args.n_max, args.c_max);
    if !args.class.is_empty() {
        config = config.with_classes(args.class);
    }
    if !args.checks.is_empty() {
        config = config.with_checks(args.checks);
    }
    config.start_after = args.start_after;
    config.threads = match std::env::var("NAKAYAMA_THREADS") {
        Ok(v) => Some(
            v.parse()
                .ok()
                .filter(|&t: &usize| t > 0)
                .ok_or_else(|| CliError::Usage(format!("NAKAYAMA_THREADS must be a positive integer, got `{v}`")))?,
        ),
        Err(_) => None,
    };
    let report = sweep(&config).map_err(CliError::Usage)?;

    let mut csv = Vec::new();
    report.write_csv(&mut csv).map_err(|e| CliError::Usage(e.to_string()))?;
    let csv = String::from_utf8(csv).expect("CSV is UTF-8");
    let json = pretty(&serde_json::to_value(&report).expect("serializable"));

    match &args.out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(io_err(dir))?;
            let csv_path = dir.join("sweep.csv");
            let json_path = dir.join("sweep.json");
            fs::write(&csv_path, &csv).map_err(io_err(&csv_path))?;
            fs::write(&json_path, &json).map_err(io_err(&json_path))?;
            emit(None, &render::sweep_summary(&report))?;
        }
        None => {
            let text = match args.format {
                Format::Json => json,
                Format::Csv => csv,
                Format::Text => render::sweep_summary(&report),
            };
            emit(None, &text)?;
        }
    }
    Ok(if report.is_clean() {
        Outcome::Ok
    } else {
        Outcome::Counterexample
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Counterexample) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(1)
        }
    }
}
