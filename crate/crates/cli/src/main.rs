//! `opal`: run the law suites and inspect hom-sets, `Y`-objects and
//! canonical isomorphisms from the command line.
//!
//! Exit status is 0 when everything passes, 1 when a law fails and 2 on a
//! usage or parse error.

mod config;
mod inspect;
mod verify;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use opal_core::mutation::Mutation;

use config::{KappaChoice, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "opal",
    version,
    about = "Law suites for underlying multicategories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every law suite and report.
    Verify(VerifyArgs),
    /// List a hom-set as JSON lines.
    Hom(HomArgs),
    /// Evaluate a Y-object on H-objects, or the canonical isomorphism
    /// between two Y-objects.
    Eval(EvalArgs),
    /// Dump the H-objects up to a width with all their hom-sets.
    Export(ExportArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    max_tuple_length: Option<usize>,
    #[arg(long)]
    max_width: Option<usize>,
    #[arg(long)]
    max_arity: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// default, exotic, right-nested or file:PATH; repeat for several.
    #[arg(long)]
    kappa: Vec<KappaChoice>,
    /// TOML file with any of the bounds above.
    #[arg(long, env = "OPAL_SUITE_CONFIG")]
    config: Option<PathBuf>,
    /// Print the full report as JSON.
    #[arg(long)]
    json: bool,
    /// Run against a deliberately corrupted construction.
    #[arg(long, value_parser = parse_mutation)]
    mutate: Option<Mutation>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Category {
    /// The free symmetric monoidal category on one object.
    H,
    /// The underlying multicategory of H.
    U,
    /// The free permutative category on U H.
    L,
}

#[derive(Args)]
struct HomArgs {
    #[arg(value_enum)]
    category: Category,
    /// Source as JSON: an object for h, a tuple for u, a list for l.
    source: String,
    /// Target as JSON: an object for h and u, a list for l.
    target: String,
    #[arg(long, default_value = "default")]
    kappa: KappaChoice,
    /// Print a Graphviz graph instead (h only).
    #[arg(long)]
    dot: bool,
}

#[derive(Args)]
struct EvalArgs {
    y: String,
    /// JSON array of H-objects.
    objects: String,
    /// A second Y-object: print the canonical isomorphism instead.
    other: Option<String>,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long, default_value_t = 2)]
    max_width: usize,
    #[arg(long)]
    dot: bool,
}

fn parse_mutation(s: &str) -> Result<Mutation, String> {
    s.parse().map_err(|e: opal_core::Error| e.to_string())
}

enum Failure {
    Usage(anyhow::Error),
    Laws,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.into())
    }
}

fn config_for(args: &VerifyArgs) -> anyhow::Result<SuiteConfig> {
    let mut config = match &args.config {
        Some(path) => SuiteConfig::load(path)?,
        None => SuiteConfig::default(),
    };
    if let Some(v) = args.max_tuple_length {
        config.max_tuple_length = v;
    }
    if let Some(v) = args.max_width {
        config.max_width = v;
    }
    if let Some(v) = args.max_arity {
        config.max_arity = v;
    }
    if let Some(v) = args.seed {
        config.seed = v;
    }
    if !args.kappa.is_empty() {
        config.kappa = args.kappa.clone();
    }
    config.check()?;
    Ok(config)
}

fn run_verify(args: &VerifyArgs, out: &mut impl Write) -> Result<(), Failure> {
    let config = config_for(args)?;
    for kappa in &config.kappa {
        kappa.build()?;
    }
    let report = verify::run(config, args.mutate)?;
    if args.json {
        let value = serde_json::to_value(&report)?;
        writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
    } else {
        for suite in &report.suites {
            let status = if suite.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{status} {} ({} checks)", suite.suite, suite.checked())?;
            for law in suite.failures() {
                writeln!(
                    out,
                    "  {}: {} of {} failed",
                    law.law, law.failed, law.checked
                )?;
                if let Some(c) = &law.counterexample {
                    writeln!(out, "    instance: {}", c.instance)?;
                    writeln!(out, "    lhs: {}", c.lhs)?;
                    writeln!(out, "    rhs: {}", c.rhs)?;
                }
            }
        }
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Laws)
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Verify(args) => run_verify(&args, out),
        Command::Hom(args) => {
            if args.dot && !matches!(args.category, Category::H) {
                return Err(Failure::Usage(anyhow::anyhow!(
                    "--dot is only available for h"
                )));
            }
            match args.category {
                Category::H => inspect::hom_h(out, &args.source, &args.target, args.dot)?,
                Category::U => inspect::hom_u(out, &args.source, &args.target, &args.kappa)?,
                Category::L => inspect::hom_l(out, &args.source, &args.target)?,
            }
            Ok(())
        }
        Command::Eval(args) => Ok(inspect::eval(
            out,
            &args.y,
            &args.objects,
            args.other.as_deref(),
        )?),
        Command::Export(args) => Ok(inspect::export(out, args.max_width, args.dot)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Laws) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
