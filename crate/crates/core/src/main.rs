use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nczeta::cli::{budget_from_env, run, Command, JobSpec, OutputFormat, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "nczeta", version, about = "Numerical Grothendieck groups, Witt vectors and zeta functions")]
struct Cli {
    #[command(subcommand)]
    command: Top,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Series precision, or number of counted terms for schemes.
    #[arg(long, global = true, visible_alias = "terms")]
    precision: Option<usize>,
    /// Maximum representatives per point count (default: $ZETA_BUDGET or 10^8).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Counting threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Top {
    /// Kernels and numerical quotient of a Gram matrix or quiver.
    Lattice { file: PathBuf },
    /// Witt ring operation described by a JSON job.
    Witt { file: PathBuf },
    #[command(subcommand)]
    Zeta(Zeta),
    /// Compare a realization's zeta with a scheme's point-count zeta.
    Check { realization: PathBuf, scheme: PathBuf },
    #[command(name = "zeta-realize", hide = true)]
    ZetaRealize { file: PathBuf },
    #[command(name = "zeta-scheme", hide = true)]
    ZetaScheme { file: PathBuf },
}

#[derive(Subcommand)]
enum Zeta {
    /// Zeta function of a super realization (t_plus, t_minus).
    Realize { file: PathBuf },
    /// Check the inverse functional equation of a realization.
    CheckFunctional { file: PathBuf },
    /// Determinant of semisimple block data.
    Det { file: PathBuf },
    /// Hasse–Weil zeta function of a projective scheme by point counting.
    Scheme { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let (command, input) = match cli.command {
        Top::Lattice { file } => (Command::Lattice, file),
        Top::Witt { file } => (Command::Witt, file),
        Top::Zeta(Zeta::Realize { file }) | Top::ZetaRealize { file } => (Command::ZetaRealize, file),
        Top::Zeta(Zeta::CheckFunctional { file }) => (Command::ZetaFunctional, file),
        Top::Zeta(Zeta::Det { file }) => (Command::ZetaDet, file),
        Top::Zeta(Zeta::Scheme { file }) | Top::ZetaScheme { file } => (Command::ZetaScheme, file),
        Top::Check { realization, scheme } => (Command::Check { scheme_path: scheme }, realization),
    };
    let job = JobSpec {
        command,
        input_path: input,
        precision: cli.opts.precision,
        budget: cli.opts.budget.unwrap_or_else(budget_from_env),
        workers: cli.opts.workers,
        output: match cli.opts.output {
            Format::Json => OutputFormat::Json,
            Format::Table => OutputFormat::Table,
        },
    };
    if job.precision == Some(0) || job.budget == 0 {
        eprintln!("error: --precision and --budget must be at least 1");
        return ExitCode::from(EXIT_INPUT as u8);
    }
    let outcome = run(&job);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
