use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use walkwl_core::constructions::{gallery, gallery_all, paulus_2502, paulus_2512};
use walkwl_core::graph::{emit_graph6, parse_graph6, rook4x4, shrikhande};
use walkwl_core::hierarchy::{
    compare_pair, invariant_code, mine_corpus, run_separation_suite, suite_passed, Corpus, InvariantId, DEFAULT_R_MAX,
};
use walkwl_core::spectral::char_poly;
use walkwl_core::Graph;

/// Exact walk-count, Weisfeiler-Leman and spectral graph invariants.
#[derive(Parser)]
#[command(name = "walkwl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the code of one invariant for one graph.
    Compute {
        invariant: InvariantId,
        /// A graph6 string, a named graph, or `<gallery entry>:g|h`.
        graph: String,
    },
    /// Compare two graphs and print the JSON report.
    Compare {
        g: String,
        h: String,
        /// Comma-separated invariant names; default is every invariant of the diagram.
        #[arg(long, value_delimiter = ',')]
        invariants: Vec<InvariantId>,
        #[arg(long, default_value_t = DEFAULT_R_MAX)]
        r_max: u32,
    },
    /// Run the separation suite; exits nonzero if any item fails.
    Suite {
        /// Also write the full report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_R_MAX)]
        r_max: u32,
    },
    /// Find pairs equal under one invariant and unequal under another.
    Mine {
        /// `trees:N`, `all:N` or `random:COUNT:N:P:SEED`.
        #[arg(long)]
        corpus: Corpus,
        #[arg(long)]
        equal: InvariantId,
        #[arg(long)]
        differ: InvariantId,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List the gallery, or print one entry as graph6.
    Gallery { name: Option<String> },
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

fn graph6(g: &Graph) -> String {
    String::from_utf8(emit_graph6(g)).expect("graph6 is ASCII")
}

/// graph6 never uses `:`, so `entry:g` is unambiguous.
fn resolve(arg: &str) -> CliResult<Graph> {
    if let Some((entry, side)) = arg.split_once(':') {
        let e = gallery(entry)?;
        return match side {
            "g" => Ok(e.g),
            "h" => Ok(e.h),
            other => Err(format!("gallery side must be g or h, got {other:?}").into()),
        };
    }
    Ok(match arg {
        "shrikhande" => shrikhande(),
        "rook4x4" => rook4x4(),
        "p25.12" => paulus_2512()?,
        "p25.02" => paulus_2502()?,
        g6 => parse_graph6(g6.as_bytes())?,
    })
}

fn write_json(path: &PathBuf, value: &impl serde::Serialize) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Compute { invariant, graph } => {
            let g = resolve(&graph)?;
            println!("graph {} (n = {})", graph6(&g), g.n());
            if invariant == InvariantId::Spec {
                println!("charpoly {}", char_poly(&g)?);
            }
            println!("{invariant} {}", invariant_code(invariant, &g)?.digest_hex());
        }
        Command::Compare { g, h, invariants, r_max } => {
            let ids = if invariants.is_empty() { InvariantId::diagram_set(r_max) } else { invariants };
            let cert = compare_pair(&format!("{g} {h}"), &resolve(&g)?, &resolve(&h)?, &ids);
            println!("{}", serde_json::to_string_pretty(&cert)?);
        }
        Command::Suite { json, r_max } => {
            let items = run_separation_suite(r_max)?;
            for it in &items {
                let status = if it.passed() { "pass" } else { "FAIL" };
                let tag = if it.supplementary { " (supplementary)" } else { "" };
                println!("{status} {:>3} {:<24} {}{tag}", it.item, it.entry, it.claim);
                for d in it.certificate.deltas.iter().chain(it.certificate.violations.iter().map(|v| &v.detail)) {
                    println!("         {d}");
                }
            }
            if let Some(path) = json {
                write_json(&path, &items)?;
            }
            if !suite_passed(&items) {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Mine { corpus, equal, differ, json } => {
            let graphs = corpus.graphs()?;
            let found = mine_corpus(&graphs, equal, differ)?;
            println!("{corpus}: {} graphs, {} pairs with {equal} equal and {differ} unequal", graphs.len(), found.len());
            for c in &found {
                println!("{}", c.pair);
            }
            if let Some(path) = json {
                write_json(&path, &found)?;
            }
        }
        Command::Gallery { name: None } => {
            for e in gallery_all()? {
                println!("{:<24} n = {:<3} {}", e.name, e.g.n(), e.description);
            }
        }
        Command::Gallery { name: Some(name) } => {
            let e = gallery(&name)?;
            println!("{}: {}", e.name, e.description);
            println!("g {}", graph6(&e.g));
            println!("h {}", graph6(&e.h));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("walkwl: {e}");
            ExitCode::from(2)
        }
    }
}
