//! `raag`: analyze a graph, run invariant suites, draw diagrams.
//!
//! Exit status: 0 on success, 3 when the graph file cannot be read or parsed,
//! 4 when a verification suite reports violations, 1 on any other error.
//! Usage errors exit with 2.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use raag_core::dot::{dot, DotKind};
use raag_core::graph::{load_graph, Graph};
use raag_core::report::analyze;
use raag_core::suites::{random_connected_graphs, run_suite, Suite, SuiteConfig};

const EXIT_OTHER: u8 = 1;
const EXIT_PARSE: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "raag", version, about = "Outer automorphisms of right-angled Artin groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the analysis report of a graph as JSON.
    Analyze {
        graph: PathBuf,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run an invariant suite on a graph file or on seeded random graphs.
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        graph: Option<PathBuf>,
        /// Random connected graphs: max vertex count, edge probability, count.
        #[arg(long, num_args = 3, value_names = ["N", "P", "COUNT"])]
        random: Option<Vec<String>>,
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Ball radius for the brute-force centralizer oracle.
        #[arg(long, default_value_t = 6)]
        radius: usize,
        /// Random samples per graph for suites that draw them.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Print a DOT diagram.
    Dot {
        graph: PathBuf,
        #[arg(long)]
        which: DotKind,
    },
}

enum Failure {
    Parse(anyhow::Error),
    Verify(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn load(path: &PathBuf) -> Result<Graph, Failure> {
    load_graph(path).map_err(|e| Failure::Parse(anyhow::Error::new(e).context(format!("{}", path.display()))))
}

fn parse_random(spec: &[String]) -> anyhow::Result<(usize, f64, usize)> {
    let [n, p, count] = spec else {
        bail!("--random takes N P COUNT");
    };
    let n: usize = n.parse().context("N must be a vertex count")?;
    let p: f64 = p.parse().context("P must be a probability")?;
    let count: usize = count.parse().context("COUNT must be a number")?;
    if !(1..=raag_core::graph::MAX_VERTICES).contains(&n) {
        bail!("N must be between 1 and {}", raag_core::graph::MAX_VERTICES);
    }
    if !(0.0..=1.0).contains(&p) {
        bail!("P must lie in [0, 1]");
    }
    Ok((n, p, count))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { graph, output } => {
            let g = load(&graph)?;
            let text = analyze(&g).map_err(anyhow::Error::new)?.to_json();
            match output {
                Some(path) => fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Verify {
            graph,
            random,
            suite,
            seed,
            radius,
            samples,
        } => {
            let graphs = match (graph, random) {
                (Some(path), _) => load(&path)?.free_product_factors().1,
                (None, Some(spec)) => {
                    let (n, p, count) = parse_random(&spec)?;
                    random_connected_graphs(count, n, p, seed)
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            let cfg = SuiteConfig {
                seed,
                radius,
                samples,
                ..SuiteConfig::default()
            };
            let report = run_suite(suite, &graphs, &cfg);
            for v in &report.violations {
                println!("violation: {v}");
            }
            let verdict = if report.passed() { "PASS" } else { "FAIL" };
            println!(
                "{verdict} {suite}: {} graphs, {} checks, {} violations (seed {seed}, radius {radius})",
                report.graphs,
                report.checks,
                report.violations.len()
            );
            if !report.passed() {
                return Err(Failure::Verify(format!(
                    "{suite} found {} violations",
                    report.violations.len()
                )));
            }
        }
        Command::Dot { graph, which } => {
            let g = load(&graph)?;
            print!("{}", dot(&g, which).map_err(anyhow::Error::new)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_OTHER)
        }
    }
}
