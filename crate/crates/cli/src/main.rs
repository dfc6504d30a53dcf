use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cyclemap::graph::{
    enumerate_circuits, generate_construction_window, generate_named, hamiltonian_circuit, is_almost_hamiltonian,
    vertex_connectivity, Graph,
};
use cyclemap::maps::{classify_map, decompose, fiber_partition, fibers, induced_vertex_isomorphism, EdgeMap};
use cyclemap::selftest::run_suite;
use cyclemap::witness::decide_no_nontrivial_map;
use cyclemap::{Error, ErrorKind, Limits};
use serde_json::{json, Value};

/// Circuit-preserving edge maps: analysis, map verification and self-tests.
#[derive(Parser)]
#[command(name = "cyclemap", version)]
struct Cli {
    /// Maximum number of circuits enumerated per graph.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_circuits: Option<u64>,
    /// Maximum number of nodes per backtracking search.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_search: Option<u64>,
    /// Largest GF(2) span dimension that is enumerated.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    span_cap: Option<u64>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Structure, Hamiltonicity and the binary-extension verdict of a graph.
    Analyze { graph: PathBuf },
    /// Classify an edge map and, where applicable, decompose it.
    VerifyMap { map: PathBuf },
    /// Run a named suite of exhaustive checks.
    Selftest {
        /// thm12, lemma11, thm22-oracle, remark-k5, construction-window or matroid-axioms
        suite: String,
    },
    /// Print a named graph (or `window N DEPTH`) as JSON.
    Generate { name: String, params: Vec<usize> },
}

impl Cli {
    fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(n) = self.budget_circuits {
            l.circuits = n as usize;
        }
        if let Some(n) = self.budget_search {
            l.search_nodes = n;
        }
        if let Some(n) = self.span_cap {
            l.span_dim = n as usize;
        }
        l
    }
}

enum Outcome {
    Report(Value),
    /// Report plus a failing check (exit code 1).
    Failed(Value),
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn analyze(path: &Path, l: &Limits) -> Result<Outcome, Error> {
    let g = Graph::from_json_str(&read(path)?)?;
    let ham = if g.order() >= 3 { hamiltonian_circuit(&g, l)? } else { None };
    let almost = if g.order() >= 3 { Some(is_almost_hamiltonian(&g, l)?) } else { None };
    let report = decide_no_nontrivial_map(&g, l)?;
    let names = |set: &cyclemap::EdgeSet| set.iter().map(|e| g.edge_name(e).to_owned()).collect::<Vec<_>>();
    Ok(Outcome::Report(json!({
        "almost_hamiltonian": almost,
        "circuits": enumerate_circuits(&g, l)?.len(),
        "connected": g.is_connected(),
        "edges": g.size(),
        "hamiltonian": ham.is_some(),
        "hamiltonian_circuit": ham.as_ref().map(names),
        "vertex_connectivity": vertex_connectivity(&g),
        "vertices": g.order(),
        "witness": report.to_json(&g),
    })))
}

fn verify_map(path: &Path, l: &Limits) -> Result<Outcome, Error> {
    let f = EdgeMap::from_json_str(&read(path)?)?;
    let class = classify_map(&f, l)?;
    let fiber_report = match fibers(&f, l) {
        Ok(parts) => json!({ "audit": "passed", "sizes": parts.sizes() }),
        Err(Error::PreconditionUnmet(why)) => {
            json!({ "precondition_unmet": why, "sizes": fiber_partition(&f).sizes() })
        }
        Err(e) => return Err(e),
    };
    let decomposition = match decompose(&f, l) {
        Ok(d) => d.summary_json(),
        Err(Error::PreconditionUnmet(_)) => Value::Null,
        Err(e) => return Err(e),
    };
    let iso = match induced_vertex_isomorphism(&f) {
        Ok(Some(phi)) => json!(phi
            .iter()
            .enumerate()
            .map(|(v, &w)| json!([f.source().vertex_id(v), f.target().vertex_id(w)]))
            .collect::<Vec<_>>()),
        Ok(None) => json!("none"),
        Err(Error::NotBijective) => json!("not_bijective"),
        Err(e) => return Err(e),
    };
    Ok(Outcome::Report(json!({
        "classification": class,
        "decomposition": decomposition,
        "fibers": fiber_report,
        "vertex_isomorphism": iso,
    })))
}

fn selftest(suite: &str, l: &Limits) -> Result<Outcome, Error> {
    let report = run_suite(suite, l)?;
    for case in &report.cases {
        eprintln!(
            "{} {} ({:.3}s)",
            if case.passed { "pass" } else { "FAIL" },
            case.name,
            case.elapsed.as_secs_f64()
        );
    }
    let value = serde_json::to_value(&report)?;
    Ok(if report.all_passed() { Outcome::Report(value) } else { Outcome::Failed(value) })
}

fn generate(name: &str, params: &[usize], l: &Limits) -> Result<Outcome, Error> {
    if name == "window" {
        let [n, depth] = params else {
            return Err(Error::BadParams("window needs N and DEPTH".into()));
        };
        let w = generate_construction_window(*n, *depth, l)?;
        return Ok(Outcome::Report(json!({ "graph": w.graph.to_json(), "labels": w.labels })));
    }
    Ok(Outcome::Report(generate_named(name, params)?.to_json()))
}

/// Indented `key: value` rendering of a report.
fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(inner) if !inner.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(v, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            out.push_str(&format!("{pad}  -\n"));
                            render_text(item, indent + 2, out);
                        }
                    }
                    Value::String(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    _ => out.push_str(&format!("{pad}{k}: {v}\n")),
                }
            }
        }
        other => out.push_str(&format!("{pad}{other}\n")),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e.kind() {
        ErrorKind::Input => 2,
        ErrorKind::Budget => 3,
        ErrorKind::Contradiction => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let l = cli.limits();
    let result = match &cli.command {
        Command::Analyze { graph } => analyze(graph, &l),
        Command::VerifyMap { map } => verify_map(map, &l),
        Command::Selftest { suite } => selftest(suite, &l),
        Command::Generate { name, params } => generate(name, params, &l),
    };
    let (value, code) = match result {
        Ok(Outcome::Report(v)) => (v, 0),
        Ok(Outcome::Failed(v)) => (v, 1),
        Err(e) => {
            eprintln!("error: {e}");
            if e.kind() == ErrorKind::Contradiction {
                eprintln!("reproduce with: {}", std::env::args().collect::<Vec<_>>().join(" "));
            }
            return ExitCode::from(exit_code(&e));
        }
    };
    let rendered = match cli.format {
        Format::Json => serde_json::to_string_pretty(&value).expect("report serializes") + "\n",
        Format::Text => {
            let mut out = String::new();
            render_text(&value, 0, &mut out);
            out
        }
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(rendered.as_bytes());
    ExitCode::from(code)
}

