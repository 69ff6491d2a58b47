//! Command-line front end for `ctrace`.
//!
//! Exit codes: 0 success, 2 parse error, 3 validation error, 4 a case with
//! no established answer (nonzero Dixmier-Douady class away from `S³`).

pub mod report;

use std::ffi::OsString;
use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ctrace::{
    induced_endomorphism, parse_endomorphism, AlgebraSpec, BuiltinSpace, CohomologyProfile,
    SpaceDescription,
};

use crate::report::{
    cohomology_json, endomorphism_json, render_cohomology, render_endomorphism, Report, Style,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_UNSUPPORTED: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "ctrace",
    version,
    about = "Rational homotopy of unitary groups of continuous trace C*-algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rational cohomology of a space
    Cohomology {
        #[command(flatten)]
        space: SpaceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bigraded rational homotopy groups of the unitary group
    Pi {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Based/free split along evaluation at the basepoint
    Split {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Z+-graded rational K-theory dimensions
    Ktheory {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// K-degrees hit by the stabilization map
    Sigma {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Endomorphism f* ⊗ 1 induced by a cohomology endomorphism
    Endo {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Endomorphism file: {"degree_blocks": {"3": [[2]]}}
        #[arg(long, value_name = "PATH")]
        endo: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct SpaceArgs {
    /// Builtin space: point | sphere K | cp M | product A.. B..
    #[arg(
        long,
        num_args = 1..,
        value_name = "NAME [PARAMS]",
        required_unless_present = "file",
        conflicts_with = "file"
    )]
    builtin: Option<Vec<String>>,
    /// Space description file (JSON)
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Matrix size of the fibers
    #[arg(short = 'n', value_name = "SIZE", default_value_t = 1)]
    n: usize,
    /// Dixmier-Douady class of the bundle
    #[arg(long, value_enum, default_value_t = Dd::Trivial)]
    dd: Dd,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Emit canonical JSON
    #[arg(long)]
    json: bool,
    /// Write to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Dd {
    Trivial,
    Nonzero,
}

#[derive(Debug)]
enum Failure {
    Core(ctrace::Error),
    Io(String),
}

impl From<ctrace::Error> for Failure {
    fn from(e: ctrace::Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(ctrace::Error::Parse(_)) => EXIT_PARSE,
            Failure::Core(ctrace::Error::Shape(_) | ctrace::Error::InvalidInput(_)) => EXIT_INVALID,
            Failure::Core(ctrace::Error::Unsupported(_)) => EXIT_UNSUPPORTED,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io(e) => e.clone(),
        }
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the process exit code. Errors go to stderr.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("ctrace: {}", f.message());
            f.exit_code()
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Cohomology { space, output } => {
            let profile = load_space(&space)?;
            let text = if output.json {
                pretty_json(&cohomology_json(&profile))
            } else {
                render_cohomology(&profile, style_for(&output))
            };
            emit(&output, &text, stdout)
        }
        Command::Pi { algebra, output } => {
            report_command(&algebra, &output, stdout, Report::render_pi)
        }
        Command::Split { algebra, output } => {
            report_command(&algebra, &output, stdout, Report::render_split)
        }
        Command::Ktheory { algebra, output } => {
            report_command(&algebra, &output, stdout, Report::render_k)
        }
        Command::Sigma { algebra, output } => {
            report_command(&algebra, &output, stdout, Report::render_sigma)
        }
        Command::Endo {
            algebra,
            endo,
            output,
        } => {
            let spec = load_spec(&algebra)?;
            let f = parse_endomorphism(&read_file(&endo)?, spec.space())?;
            let phi = induced_endomorphism(&f, &spec)?;
            let text = if output.json {
                pretty_json(&endomorphism_json(&spec, &phi))
            } else {
                render_endomorphism(&spec, &phi, style_for(&output))
            };
            emit(&output, &text, stdout)
        }
    }
}

fn report_command(
    algebra: &AlgebraArgs,
    output: &OutputArgs,
    stdout: &mut dyn Write,
    render: fn(&Report, Style) -> String,
) -> Result<(), Failure> {
    let report = Report::build(&load_spec(algebra)?)?;
    let text = if output.json {
        pretty_json(&report.to_json())
    } else {
        render(&report, style_for(output))
    };
    emit(output, &text, stdout)
}

fn load_space(args: &SpaceArgs) -> Result<CohomologyProfile, Failure> {
    match (&args.builtin, &args.file) {
        (Some(tokens), _) => Ok(BuiltinSpace::parse(tokens)?.profile()),
        (None, Some(path)) => Ok(SpaceDescription::from_json(&read_file(path)?)?.profile()),
        (None, None) => Err(Failure::Core(ctrace::Error::Parse(
            "one of --builtin or --file is required".into(),
        ))),
    }
}

fn load_spec(args: &AlgebraArgs) -> Result<AlgebraSpec, Failure> {
    let profile = load_space(&args.space)?;
    Ok(AlgebraSpec::new(profile, args.n, args.dd == Dd::Trivial)?)
}

/// Unreadable input files count as parse failures.
fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| {
        Failure::Core(ctrace::Error::Parse(format!(
            "cannot read {}: {e}",
            path.display()
        )))
    })
}

fn pretty_json(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    text.push('\n');
    text
}

fn style_for(output: &OutputArgs) -> Style {
    let enabled = std::env::var("CTRACE_COLOR").map_or(true, |v| v != "0");
    Style {
        color: enabled && output.output.is_none() && std::io::stdout().is_terminal(),
    }
}

fn emit(output: &OutputArgs, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &output.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}
