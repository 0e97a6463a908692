use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use symvar_cli::document::{parse_spec, resolve, SpecDocument};
use symvar_cli::{render, run_command, CliError, Command, Options, EXIT_USAGE};
use symvar_core::rootcore::DEFAULT_ENUMERATION_LIMIT;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "symvar", version, about = "Combinatorial invariants of symmetric varieties and their GIT quotients")]
struct Args {
    /// One of: restricted-roots, lattices, component-group, fan-check, positivity, sections,
    /// invariants-wonderful, basis, flag-invariants, strata, witness, quotient, closed-orbits
    command: String,
    /// Job document (JSON, schema "1")
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    out: Format,
    /// Highest degree for the quotient Hilbert function
    #[arg(long)]
    grading_bound: Option<usize>,
    /// Catalog fixture; replaces the datum of the document
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, hide = true)]
    inject_support_violation: bool,
}

fn weyl_limit() -> Result<usize, CliError> {
    match std::env::var("SYMVAR_MAX_WEYL") {
        Err(_) => Ok(DEFAULT_ENUMERATION_LIMIT),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("SYMVAR_MAX_WEYL={v:?} is not a positive integer"))),
    }
}

fn load(args: &Args) -> Result<SpecDocument, CliError> {
    let mut doc = match &args.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Spec(format!("{}: {e}", path.display())))?;
            parse_spec(&text)?
        }
        None => match &args.fixture {
            Some(_) => SpecDocument::for_fixture(""),
            None => return Err(CliError::Usage("--spec is required unless --fixture is given".into())),
        },
    };
    if let Some(f) = &args.fixture {
        doc.fixture = Some(f.clone());
        doc.cartan = None;
        doc.involution = None;
        doc = parse_spec(&serde_json::to_string(&doc).expect("documents serialize"))?;
    }
    Ok(doc)
}

fn run(args: &Args) -> Result<String, CliError> {
    let cmd: Command = args.command.parse().map_err(CliError::Usage)?;
    let opts = Options {
        weyl_limit: weyl_limit()?,
        grading_bound: args.grading_bound,
        inject_support_violation: args.inject_support_violation,
    };
    let job = resolve(load(args)?)?;
    log::debug!("running {cmd}");
    let report = run_command(&job, cmd, &opts)?;
    Ok(match args.out {
        Format::Json => render::json(&report),
        Format::Text => render::text(&report),
    })
}

fn main() -> ExitCode {
    env_logger::init();
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&args) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
