//! `typeii`: reproduction recipes for harmonic weight enumerators and support
//! designs of extremal Type II codes. Every command prints one JSON report.

mod commands;
mod recipes;

use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "typeii", version, about)]
struct Cli {
    /// Worker threads for parallel sweeps (defaults to available parallelism)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Pretty-print the JSON report
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    Q,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SearchMethod {
    Closed,
    Expanded,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DesignMethod {
    Delsarte,
    Brute,
    Both,
}

#[derive(Args, Clone, Debug)]
#[group(required = true, multiple = false)]
pub struct CodeSource {
    /// Generator matrix file: one row per line of '0'/'1'
    #[arg(long)]
    gen: Option<PathBuf>,
    /// Built-in code: golay24 or hamming8
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Zero coefficients of (x^4-y^4)^α P8^β or (x^4-y^4)^α (x^4+y^4)(x^8-34x^4y^4+y^8)
    SearchZeros {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// P8 exponent for the q family
        #[arg(long, default_value_t = 1)]
        beta: u32,
        #[arg(long, default_value_t = 652)]
        alpha_max: u32,
        #[arg(long, value_enum, default_value = "both")]
        method: SearchMethod,
        /// Accepted for compatibility; output is always JSON
        #[arg(long)]
        json: bool,
    },
    /// Solutions of X^2 - 3Y^2 = 1 and the α values they produce
    Pell {
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Harmonic weight enumerator of the extremal class for degree t
    Henum {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        weights_only: bool,
    },
    /// Design strengths of the support design at weight w
    Classify {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        w: u32,
        /// Hypothetical extra design, written t@w
        #[arg(long)]
        assume: Option<String>,
    },
    /// m values for which λ_1..λ_through of D_{4m+4} are integers
    LambdaFilter {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        through: u32,
    },
    /// Checks whether the weight-w supports of a code form a t-design
    VerifyCode {
        #[command(flatten)]
        source: CodeSource,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value = "both")]
        method: DesignMethod,
    },
    /// Code utilities
    Code {
        #[command(subcommand)]
        command: CodeCommand,
    },
    /// Gleason ring utilities
    Gleason {
        #[command(subcommand)]
        command: GleasonCommand,
    },
    /// Named end-to-end checks; exit 1 when a check fails
    Reproduce {
        #[arg(value_enum)]
        recipe: recipes::Recipe,
    },
}

#[derive(Subcommand)]
enum CodeCommand {
    /// Length, dimension, self-duality and weight distribution
    Profile {
        #[command(flatten)]
        source: CodeSource,
    },
}

#[derive(Subcommand)]
enum GleasonCommand {
    /// Weight enumerator of an extremal code of length 24m + 8r
    Enum {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
    },
}

/// Result of one command before it is wrapped in the report envelope.
pub struct Outcome {
    pub params: Value,
    pub results: Value,
    pub passed: bool,
    pub summary: String,
}

#[derive(Debug)]
pub struct CliError(pub String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::SearchZeros { .. } => "search-zeros",
        Command::Pell { .. } => "pell",
        Command::Henum { .. } => "henum",
        Command::Classify { .. } => "classify",
        Command::LambdaFilter { .. } => "lambda-filter",
        Command::VerifyCode { .. } => "verify-code",
        Command::Code { .. } => "code profile",
        Command::Gleason { .. } => "gleason enum",
        Command::Reproduce { .. } => "reproduce",
    }
}

fn dispatch(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::SearchZeros {
            family,
            beta,
            alpha_max,
            method,
            json: _,
        } => commands::search_zeros(*family, *beta, *alpha_max, *method),
        Command::Pell { count } => Ok(commands::pell(*count)),
        Command::Henum {
            m,
            r,
            t,
            weights_only,
        } => commands::henum(*m, *r, *t, *weights_only),
        Command::Classify { m, r, w, assume } => commands::classify(*m, *r, *w, assume.as_deref()),
        Command::LambdaFilter { r, t, through } => commands::lambda_filter(*r, *t, *through),
        Command::VerifyCode {
            source,
            w,
            t,
            method,
        } => commands::verify_code(source, *w, *t, *method),
        Command::Code {
            command: CodeCommand::Profile { source },
        } => commands::code_profile(source),
        Command::Gleason {
            command: GleasonCommand::Enum { m, r },
        } => commands::gleason_enum(*m, *r),
        Command::Reproduce { recipe } => recipes::run(*recipe),
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
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        pool = pool.num_threads(jobs);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let start = Instant::now();
    let outcome = match pool.install(|| dispatch(&cli.command)) {
        Ok(o) => o,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let report = json!({
        "command": command_name(&cli.command),
        "params": outcome.params,
        "results": outcome.results,
        "elapsed_ms": start.elapsed().as_millis() as u64,
        "tool_version": env!("CARGO_PKG_VERSION"),
    });
    let text = if cli.pretty {
        serde_json::to_string_pretty(&report)
    } else {
        serde_json::to_string(&report)
    }
    .expect("report serialises");
    println!("{text}");
    if std::io::stderr().is_terminal() {
        eprintln!("{}", outcome.summary);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
