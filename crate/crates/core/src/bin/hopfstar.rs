//! Command-line front end: exit 0 when every check passes, 1 when a check
//! fails, 2 on malformed input or usage errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hopfstar::report::Report;
use hopfstar::shell::io::{report_from_json, report_to_json};
use hopfstar::shell::{
    construct, export_fixtures, load_with_siblings, open_workspace, run_suite, validate, write_file, ShellError,
    EXIT_FAIL, EXIT_INPUT, EXIT_PASS,
};

#[derive(Parser)]
#[command(
    name = "hopfstar",
    version,
    about = "Exact checks for Hopf *-algebras and their modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct Source {
    /// Directory of definition files.
    #[arg(long)]
    workspace: Option<PathBuf>,
    /// Built-in fixture, e.g. `group_z2` or `sweedler(1)`.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verifier matching the file's object kind.
    Validate {
        file: PathBuf,
        /// Where references are resolved; defaults to the file's directory.
        #[arg(long)]
        workspace: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build an object from named inputs and write it to a file.
    Construct {
        construction: String,
        /// Comma-separated input names.
        #[arg(long = "in", value_delimiter = ',', required = true)]
        inputs: Vec<String>,
        #[arg(long)]
        out: PathBuf,
        /// Name of the produced object.
        #[arg(long)]
        name: Option<String>,
        /// Truncation degree for `tensor-algebra`.
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a named suite.
    Check {
        suite: String,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Emit a report document, from a suite run or a saved report file.
    Report {
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, default_value = "all")]
        suite: String,
        /// Re-render a saved JSON report instead of running a suite.
        #[arg(long)]
        from: Option<PathBuf>,
        #[command(flatten)]
        source: Source,
    },
    /// Write the shipped fixtures as definition files.
    ExportFixtures { dir: PathBuf },
}

/// Writes to stdout, ignoring a closed pipe.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(r: &Report, format: Format) {
    match format {
        Format::Text => out(&r.to_string()),
        Format::Json => out(&report_to_json(r)),
    }
}

fn verdict(r: &Report) -> i32 {
    if r.all_pass() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn run(cli: Cli) -> Result<i32, ShellError> {
    match cli.command {
        Command::Validate {
            file,
            workspace,
            format,
        } => {
            let (ws, name) = load_with_siblings(&file, workspace.as_deref())?;
            let r = validate(&ws, &name)?;
            emit(&r, format);
            Ok(verdict(&r))
        }
        Command::Construct {
            construction,
            inputs,
            out,
            name,
            degree,
            source,
            format,
        } => {
            let ws = open_workspace(source.workspace.as_deref(), source.fixture.as_deref())?;
            let (doc, r) = construct(&ws, &construction, &inputs, name.as_deref(), degree)?;
            write_file(&out, &doc.to_json())?;
            emit(&r, format);
            Ok(verdict(&r))
        }
        Command::Check { suite, source, format } => {
            let ws = open_workspace(source.workspace.as_deref(), source.fixture.as_deref())?;
            let r = run_suite(&ws, &suite)?;
            emit(&r, format);
            Ok(verdict(&r))
        }
        Command::Report {
            format,
            suite,
            from,
            source,
        } => {
            let r = match from {
                Some(p) => {
                    let text = std::fs::read_to_string(&p).map_err(|source| ShellError::Io {
                        path: p.display().to_string(),
                        source,
                    })?;
                    report_from_json(&text).map_err(|source| ShellError::Parse {
                        path: p.display().to_string(),
                        source,
                    })?
                }
                None => {
                    let ws = open_workspace(source.workspace.as_deref(), source.fixture.as_deref())?;
                    run_suite(&ws, &suite)?
                }
            };
            emit(&r, format);
            Ok(verdict(&r))
        }
        Command::ExportFixtures { dir } => {
            for p in export_fixtures(&dir)? {
                out(&format!("{}\n", p.display()));
            }
            Ok(EXIT_PASS)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, matching the input-error code.
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    };
    ExitCode::from(code as u8)
}
