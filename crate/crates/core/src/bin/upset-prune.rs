use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use upset_prune::ci::{interleaving_distance_bruteforce, Field, DEFAULT_MAX_R};
use upset_prune::distances::{bottleneck_distance, pruning_distance, Mode};
use upset_prune::io::{module_to_json, parse_module};
use upset_prune::pruning::{build_graph, prune};
use upset_prune::render::{shift_graph_dot, shift_graph_text, staircase_svg};
use upset_prune::verify::run_checks;
use upset_prune::{random_module, Error, Module, Rational};

#[derive(Parser)]
#[command(
    name = "upset-prune",
    version,
    about = "Prunings and distances of upset-decomposable persistence modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the alpha-pruning of a module.
    Prune {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Rational,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Pruning distance.
    Dp {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value = "1/1000000000")]
        tol: Rational,
        /// Snap the bisection bracket to an exact critical value.
        #[arg(long)]
        exact: bool,
    },
    /// Bottleneck distance.
    Db { first: PathBuf, second: PathBuf },
    /// Interleaving distance by exhaustive search over a small field.
    Di {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value = "f2")]
        field: Field,
        #[arg(long, default_value_t = DEFAULT_MAX_R)]
        max_r: usize,
    },
    /// Describe the shift graph at alpha.
    Graph {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Rational,
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Write a deterministic random module.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, default_value_t = 3)]
        gens: usize,
        #[arg(long, default_value_t = 16)]
        coord_bound: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw planar modules as SVG staircases.
    Plot {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the built-in verification corpus.
    Verify,
}

enum Failure {
    Core(Error),
    Read(PathBuf, std::io::Error),
    Write(PathBuf, std::io::Error),
    Checks(usize),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(Error::Parse(_)) | Failure::Read(..) => 2,
            Failure::Core(_) => 3,
            Failure::Write(..) | Failure::Checks(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn load(path: &Path) -> Result<Module, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Read(path.to_owned(), e))?;
    parse_module(&text)
        .map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
        .map_err(Failure::Core)
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Write(path.to_owned(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Prune {
            input,
            alpha,
            output,
        } => {
            let m = load(&input)?;
            emit(output.as_deref(), &module_to_json(&prune(&m, &alpha)?))
        }
        Command::Dp {
            first,
            second,
            tol,
            exact,
        } => {
            let (m, n) = (load(&first)?, load(&second)?);
            let mode = if exact { Mode::Exact } else { Mode::Bisect };
            println!("{}", pruning_distance(&m, &n, &tol, mode)?);
            Ok(())
        }
        Command::Db { first, second } => {
            let (m, n) = (load(&first)?, load(&second)?);
            println!("{}", bottleneck_distance(&m, &n)?);
            Ok(())
        }
        Command::Di {
            first,
            second,
            field,
            max_r,
        } => {
            let (m, n) = (load(&first)?, load(&second)?);
            println!(
                "{}",
                interleaving_distance_bruteforce(&m, &n, field, max_r)?
            );
            Ok(())
        }
        Command::Graph { input, alpha, dot } => {
            let m = load(&input)?;
            let graph = build_graph(&m, &alpha)?;
            let text = if dot {
                shift_graph_dot(&graph)
            } else {
                shift_graph_text(&graph)
            };
            emit(None, &text)
        }
        Command::Gen {
            seed,
            dim,
            r,
            gens,
            coord_bound,
            output,
        } => {
            let m = random_module(seed, r, dim, gens, coord_bound)?;
            emit(output.as_deref(), &module_to_json(&m))
        }
        Command::Plot { inputs, output } => {
            let modules = inputs
                .iter()
                .map(|p| load(p))
                .collect::<Result<Vec<_>, _>>()?;
            emit(output.as_deref(), &staircase_svg(&modules)?)
        }
        Command::Verify => {
            let checks = run_checks();
            let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let mut failed = 0;
            for c in &checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                failed += usize::from(!c.passed);
                println!("{status}  {:width$}  {}", c.name, c.detail);
            }
            println!("{} checks, {} failed", checks.len(), failed);
            if failed > 0 {
                Err(Failure::Checks(failed))
            } else {
                Ok(())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Read(p, e) => eprintln!("error: cannot read {}: {e}", p.display()),
                Failure::Write(p, e) => eprintln!("error: cannot write {}: {e}", p.display()),
                Failure::Checks(n) => eprintln!("error: {n} verification checks failed"),
            }
            ExitCode::from(f.code())
        }
    }
}
