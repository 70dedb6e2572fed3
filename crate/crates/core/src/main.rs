//! `euclid`: run construction scripts and propositions, verify suites,
//! compare strategies, and draw figures.
//!
//! Exit codes: 0 success, 1 an assertion, postcondition or construction
//! failed, 2 usage or parse error.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use euclid_elements::dsl::{self, Diagnostic};
use euclid_elements::elements::{self, Instance, PropositionResult};
use euclid_elements::geom::Side;
use euclid_elements::render::{render_result, RenderOptions};
use euclid_elements::verify::{self, all_ids};
use euclid_elements::Error;

#[derive(Parser)]
#[command(name = "euclid", version, about = "Exact straightedge-and-compass constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse, check and run a script; succeeds iff every assertion holds.
    Run {
        script: PathBuf,
        /// Print the construction trace.
        #[arg(long)]
        trace: bool,
        /// Write the figure as SVG.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Run one proposition on an instance file, or on a random instance.
    Prop {
        id: String,
        #[arg(long)]
        strategy: Option<String>,
        /// Instance file: one declaration per line, in argument order.
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        /// Side of the given line on which new figures lie.
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        /// Seed for the random instance used without `--input`.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        trace: bool,
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Run verification suites on random instances.
    Suite {
        /// A proposition, `I.44.chester` for one strategy, or `all`.
        id: String,
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Print key=value records instead of the report.
        #[arg(long)]
        records: bool,
    },
    /// Run several strategies on one instance and compare their costs.
    Compare {
        id: String,
        #[arg(long, value_delimiter = ',', required = true)]
        strategies: Vec<String>,
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[arg(long)]
        records: bool,
    },
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn failed(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    /// Unknown names are usage errors; everything else is a failed run.
    fn from_error(e: Error) -> Failure {
        match e {
            Error::UnknownProposition(_) | Error::UnknownStrategy(_) | Error::Parse(_) => {
                Failure::usage(e.to_string())
            }
            _ => Failure::failed(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn diagnostics(path: &Path, diags: &[Diagnostic]) -> Failure {
    let lines: Vec<String> = diags.iter().map(|d| format!("{}:{d}", path.display())).collect();
    Failure::usage(lines.join("\n"))
}

fn write_svg(path: &Path, r: &PropositionResult) -> Result<(), Failure> {
    let opts = RenderOptions {
        title: Some(r.id.clone()),
        ..RenderOptions::default()
    };
    let svg = render_result(r, &opts).map_err(Failure::from_error)?;
    std::fs::write(path, svg).map_err(|e| Failure::failed(format!("{}: {e}", path.display())))
}

/// `EUCLID_SEED` wins over the flag.
fn seed(flag: u64) -> Result<u64, Failure> {
    match std::env::var("EUCLID_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("EUCLID_SEED is not a seed: `{s}`"))),
        Err(_) => Ok(flag),
    }
}

fn instance(input: &Path, side: Side) -> Result<Instance, Failure> {
    dsl::parse_instance(&read(input)?, side).map_err(|d| diagnostics(input, &d))
}

fn run(cmd: Command, out: &mut String) -> Outcome {
    match cmd {
        Command::Run { script, trace, svg } => {
            let src = read(&script)?;
            let parsed = dsl::parse(&src).map_err(|d| diagnostics(&script, &d))?;
            let diags = dsl::check(&parsed);
            if !diags.is_empty() {
                return Err(diagnostics(&script, &diags));
            }
            let done = dsl::interpret(&parsed)
                .map_err(|e| Failure::failed(format!("{}:{e}", script.display())))?;
            if trace {
                out.push_str(&done.trace.to_text());
            }
            out.push_str(&done.report());
            if let Some(path) = svg {
                write_svg(&path, &done.to_result())?;
            }
            Ok(done.passed())
        }
        Command::Prop {
            id,
            strategy,
            input,
            side,
            seed: flag,
            trace,
            svg,
        } => {
            let inst = match input {
                Some(path) => instance(&path, side.into())?,
                None => {
                    let s = strategy.as_deref().unwrap_or("euclid");
                    verify::suite_instance(&id, s, seed(flag)?, 0).map_err(Failure::from_error)?
                }
            };
            let r = elements::run(&id, strategy.as_deref(), &inst).map_err(Failure::from_error)?;
            if trace {
                out.push_str(&r.trace.to_text());
            }
            out.push_str(&r.report());
            if let Some(path) = svg {
                write_svg(&path, &r)?;
            }
            Ok(r.passed())
        }
        Command::Suite {
            id,
            n,
            seed: flag,
            records,
        } => {
            let seed = seed(flag)?;
            let ids: Vec<String> = if id == "all" {
                all_ids().into_iter().map(String::from).collect()
            } else {
                vec![id]
            };
            let mut passed = true;
            for id in ids {
                let r = verify::run_suite(&id, n, seed).map_err(Failure::from_error)?;
                if records {
                    out.push_str(&r.records());
                } else {
                    out.push_str(&r.to_string());
                }
                passed &= r.passed();
            }
            Ok(passed)
        }
        Command::Compare {
            id,
            strategies,
            input,
            side,
            records,
        } => {
            let inst = instance(&input, side.into())?;
            let names: Vec<&str> = strategies.iter().map(String::as_str).collect();
            let r = verify::compare(&id, &names, &inst).map_err(Failure::from_error)?;
            if records {
                out.push_str(&r.records());
            } else {
                out.push_str(&r.to_string());
            }
            Ok(r.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
