//! Command-line front end: invariant evaluation, series printing, invariant
//! tables, resolution of singular diagrams, and the verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
//! or parse errors.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use skeinlab::diagram::{parse_diagram, render_diagram, resolve, NamedDiagram};
use skeinlab::higher::NablaTable;
use skeinlab::series::SkeinSeries;
use skeinlab::skein::{Invariant, SkeinContext};
use skeinlab::verify::{run_suite, Suite, VerifyConfig};

#[derive(Parser)]
#[command(name = "skeinlab", version, about = "Exact skein-theoretic link invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an invariant of a link diagram.
    Eval {
        #[command(flatten)]
        input: DiagramInput,
        /// One of: conway, homfly, p
        #[arg(long)]
        invariant: String,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Print the series entering the two-variable skein relation.
    Series {
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Emit the table of higher invariants as JSON.
    Table {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long)]
        lmax: usize,
        #[arg(long)]
        mmax: usize,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Print the resolution of a singular diagram as a formal combination.
    Resolve {
        #[command(flatten)]
        input: DiagramInput,
    },
    /// Run a verification suite.
    Verify {
        /// One of: series, skein, higher, eightt, chord, all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Output format: text or json
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Args)]
struct DiagramInput {
    /// Path to a diagram file.
    #[arg(long)]
    pd: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Eval {
            input,
            invariant,
            order,
        } => {
            let nd = load(&input)?;
            let inv = Invariant::from_name(&invariant)
                .ok_or_else(|| format!("unknown invariant `{invariant}`"))?;
            // A singular diagram is evaluated through its resolution (for a
            // classical diagram the resolution is the diagram itself).
            let ctx = SkeinContext::new(order);
            let combination = resolve(&nd.diagram);
            let rendered = match inv {
                Invariant::Conway => ctx.eval_conway(&combination).to_string(),
                Invariant::Homfly => ctx.eval_homfly(&combination).to_string(),
                Invariant::P => ctx.eval_p(&combination).to_string(),
            };
            println!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Series { order } => {
            if order < 2 {
                return Err("order must be at least 2".to_string());
            }
            let s = SkeinSeries::new(order);
            println!("gamma = {}", s.gamma);
            println!("alpha = {}", s.alpha);
            println!("beta = {}", s.beta);
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            input,
            lmax,
            mmax,
            order,
        } => {
            if order < 4 {
                return Err("order must be at least 4 for invariant tables".to_string());
            }
            let nd = load(&input)?;
            let ctx = SkeinContext::new(order);
            let table = NablaTable::compute(&ctx, &nd.name, &nd.diagram, lmax, mmax)
                .map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string(&table).expect("table serializes"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Resolve { input } => {
            let nd = load(&input)?;
            let combination = resolve(&nd.diagram);
            println!(
                "# resolution of {}: {} merged terms",
                nd.name,
                combination.len()
            );
            for (i, (d, coeff)) in combination.iter().enumerate() {
                println!("term {coeff}");
                print!("{}", render_diagram(&format!("{}_{}", nd.name, i), d));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            seed,
            order,
            format,
        } => {
            let suite =
                Suite::from_name(&suite).ok_or_else(|| format!("unknown suite `{suite}`"))?;
            if order < 4 {
                return Err("order must be at least 4 for the suites".to_string());
            }
            let config = VerifyConfig { order, seed };
            let reports = run_suite(suite, &config);
            let all_ok = reports.iter().all(|r| r.passed());
            match format.as_str() {
                "text" => {
                    for report in &reports {
                        for item in &report.items {
                            println!(
                                "[{}] {}: {} ({})",
                                if item.passed { "PASS" } else { "FAIL" },
                                report.suite,
                                item.name,
                                item.detail
                            );
                        }
                    }
                }
                "json" => {
                    let json: Vec<serde_json::Value> = reports
                        .iter()
                        .flat_map(|r| {
                            r.items.iter().map(|i| {
                                serde_json::json!({
                                    "suite": r.suite,
                                    "name": i.name,
                                    "passed": i.passed,
                                    "detail": i.detail,
                                })
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json).expect("report serializes")
                    );
                }
                other => return Err(format!("unknown format `{other}`")),
            }
            Ok(if all_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn load(input: &DiagramInput) -> Result<NamedDiagram, String> {
    let text =
        fs::read_to_string(&input.pd).map_err(|e| format!("cannot read {}: {e}", input.pd))?;
    parse_diagram(&text).map_err(|e| format!("{}: {e}", input.pd))
}
