use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use covreg_cli::harness;
use covreg_cli::{load_graph, CliError, GraphDocument, Report, Result, Verification};
use covreg_core::ideal::{cover_ideal, ordinary_power};
use covreg_core::oracle::reg_oracle;
use covreg_core::polyhedron::symbolic_polyhedron;
use covreg_core::reduction::{reducible_to_cycle, LemmaId};
use covreg_core::regularity::{reg_symbolic, EngineConfig};
use covreg_core::{Field, SimplicialComplex};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "covreg", version, about = "Regularity of symbolic powers of cover ideals")]
struct Cli {
    /// Coefficient field: q (rationals) or a prime p.
    #[arg(long, global = true, default_value = "q")]
    field: Field,
    /// Seed for generated instances.
    #[arg(long, global = true, env = "COVREG_SEED", default_value_t = 0)]
    seed: u64,
    /// Add wall-clock timing to reports (makes them non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    /// Single-line JSON.
    #[arg(long, global = true)]
    compact: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Limits {
    #[arg(long, default_value_t = 14)]
    max_vertices: usize,
    #[arg(long, default_value_t = 4)]
    max_power: u32,
    /// Disable degree-bound pruning and report violations instead.
    #[arg(long)]
    no_prune: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Regularity of J(G)^(t) or J(G)^t.
    Reg {
        graph: String,
        #[arg(long, short = 't', default_value_t = 1)]
        power: u32,
        #[arg(long, conflicts_with = "ordinary")]
        symbolic: bool,
        #[arg(long)]
        ordinary: bool,
        /// Include the critical pair attaining the maximum.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Largest minimal vertex cover.
    TauMax { graph: String },
    /// Maximal coordinate sum over the vertices of the symbolic polyhedron.
    Delta {
        graph: String,
        #[arg(long)]
        vertices: bool,
    },
    /// Reduced homology of the cover complex.
    Hdim { graph: String },
    /// Minimal vertex covers.
    Covers { graph: String },
    /// Decide reducibility to the unique cycle.
    Reduce {
        graph: String,
        #[arg(long)]
        trace: bool,
    },
    #[command(subcommand)]
    Verify(Verify),
    /// Print a graph document for a built-in family.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Cover-ideal regularity of random unicyclic graphs.
    Theorem1 {
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
        #[arg(long, default_value_t = 100)]
        instances: usize,
    },
    /// Powers of cover ideals of random bipartite unicyclic graphs.
    Theorem2 {
        #[arg(long, default_value_t = 9)]
        max_vertices: usize,
        #[arg(long, default_value_t = 20)]
        instances: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        powers: Vec<u32>,
    },
    /// One reduction lemma on generated instances.
    Lemma {
        id: String,
        #[arg(long, default_value_t = 25)]
        instances: usize,
    },
    /// Symbolic powers of cycles.
    Cycles {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_t: u32,
    },
    /// tau-max and homological dimension of cycles.
    CycleInvariants {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Engine against the Betti-number oracle.
    Oracle {
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[arg(long, default_value_t = 10)]
        sample: usize,
    },
    /// Degree bound on critical pairs and the scaling property.
    DegreeBound {
        #[arg(long, default_value_t = 3)]
        max_t: u32,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 2)]
        scale: u32,
    },
    /// Symbolic polyhedron checks.
    Polyhedron {
        #[arg(long, default_value_t = 11)]
        max_odd_n: usize,
    },
    /// Homological identities on seeded random hypergraphs.
    Properties {
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
    /// The reducible and non-reducible example graphs.
    Figures,
}

fn engine(field: Field, limits: &Limits) -> EngineConfig {
    EngineConfig {
        field,
        max_vertices: limits.max_vertices,
        max_power: limits.max_power,
        degree_prune: !limits.no_prune,
        ..EngineConfig::default()
    }
}

fn run_verify(cmd: &Verify, field: Field, seed: u64) -> Result<Verification> {
    match cmd {
        Verify::Theorem1 { max_vertices, instances } => {
            if *max_vertices < 3 {
                return Err(CliError::input("--max-vertices must be at least 3"));
            }
            harness::theorem1(*instances, *max_vertices, seed, field)
        }
        Verify::Theorem2 { max_vertices, instances, powers } => {
            if *max_vertices < 4 {
                return Err(CliError::input("--max-vertices must be at least 4"));
            }
            if powers.contains(&0) {
                return Err(CliError::input("powers must be positive"));
            }
            harness::theorem2(*instances, *max_vertices, powers, seed, field)
        }
        Verify::Lemma { id, instances } => {
            let id: LemmaId = id.parse()?;
            harness::lemma(id, *instances, seed, field)
        }
        Verify::Cycles { max_n, max_t } => harness::cycles(*max_n, *max_t, field),
        Verify::CycleInvariants { max_n } => harness::cycle_invariants(*max_n, field),
        Verify::Oracle { max_vertices, sample } => {
            if !(2..=7).contains(max_vertices) {
                return Err(CliError::input("--max-vertices must be in 2..=7"));
            }
            harness::oracle(*max_vertices, *sample, seed, field)
        }
        Verify::DegreeBound { max_t, samples, scale } => {
            harness::degree_bound(*max_t, *samples, *scale, seed, field)
        }
        Verify::Polyhedron { max_odd_n } => harness::polyhedron(*max_odd_n),
        Verify::Properties { cases } => harness::properties(*cases, seed, field),
        Verify::Figures => harness::figures(field),
    }
}

/// Returns the JSON to print and whether the command passed.
fn run(cli: &Cli, argv: Vec<String>) -> Result<(Value, bool)> {
    let field = cli.field;
    let out = match &cli.command {
        Command::Reg { graph, power, symbolic: _, ordinary, witness, limits } => {
            let (name, g) = load_graph(graph)?;
            let cfg = engine(field, limits);
            if *ordinary && !g.is_bipartite()? {
                let value = reg_oracle(&ordinary_power(&cover_ideal(&g), *power)?, field)?;
                json!({
                    "graph": name, "power": power, "kind": "ordinary", "field": field,
                    "value": value, "method": "betti-oracle",
                })
            } else {
                let r = reg_symbolic(&g, *power, &cfg)?;
                let mut out = json!({
                    "graph": name, "power": power,
                    "kind": if *ordinary { "ordinary" } else { "symbolic" },
                    "field": field, "value": r.value,
                    "pairsExplored": r.pairs_explored, "pruned": r.pruned,
                    "degreeBound": r.degree_bound,
                });
                if *ordinary {
                    out["method"] = json!("bipartite: ordinary and symbolic powers coincide");
                }
                if *witness {
                    out["witness"] = serde_json::to_value(&r.witness).expect("serializable");
                }
                if limits.no_prune {
                    out["degreeBoundViolations"] = json!(r.stats.degree_bound_violations);
                }
                out
            }
        }
        Command::TauMax { graph } => {
            let (name, g) = load_graph(graph)?;
            json!({"graph": name, "tauMax": g.tau_max()})
        }
        Command::Delta { graph, vertices } => {
            let (name, g) = load_graph(graph)?;
            let sp = symbolic_polyhedron(&g)?;
            let vs = sp.vertices()?;
            let delta = vs.iter().map(|v| v.coordinate_sum).max().expect("nonempty polyhedron");
            let mut out = json!({"graph": name, "delta": delta.to_string(), "vertexCount": vs.len()});
            if *vertices {
                out["labels"] = json!(sp.labels());
                out["vertices"] = serde_json::to_value(&vs).expect("serializable");
            }
            out
        }
        Command::Hdim { graph } => {
            let (name, g) = load_graph(graph)?;
            let profile = SimplicialComplex::cover_complex(&g).reduced_homology(field)?;
            json!({"graph": name, "field": field, "hdim": profile.hdim(), "homology": profile.dims})
        }
        Command::Covers { graph } => {
            let (name, g) = load_graph(graph)?;
            json!({"graph": name, "covers": g.minimal_covers()})
        }
        Command::Reduce { graph, trace } => {
            let (name, g) = load_graph(graph)?;
            let found = reducible_to_cycle(&g)?;
            let mut out = json!({
                "graph": name,
                "verdict": if found.is_some() { "reducible" } else { "not reducible" },
                "reducible": found.is_some(),
            });
            if *trace {
                out["trace"] = serde_json::to_value(&found).expect("serializable");
            }
            out
        }
        Command::Gen { family, params, name } => {
            let random = family.starts_with("random-");
            let mut parts = vec![family.clone()];
            parts.extend(params.iter().cloned());
            let arity = match family.as_str() {
                "random-tree" => 2,
                "random-unicyclic" => 3,
                _ => 0,
            };
            if random && parts.len() == arity {
                parts.push(cli.seed.to_string());
            }
            let spec = parts.join(":");
            let g = covreg_cli::graph_io::builtin(&spec)?
                .ok_or_else(|| CliError::input(format!("unknown family {family:?}")))?;
            let doc = GraphDocument::from_graph(name.clone().unwrap_or(spec), &g);
            serde_json::to_value(doc).expect("serializable")
        }
        Command::Verify(cmd) => {
            let start = Instant::now();
            let v = run_verify(cmd, field, cli.seed)?;
            let mut report = Report::new(argv, field.to_string(), v);
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis());
            }
            let passed = report.passed;
            return Ok((serde_json::to_value(report).expect("serializable"), passed));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    match run(&cli, argv) {
        Ok((value, passed)) => {
            let text = if cli.compact {
                serde_json::to_string(&value)
            } else {
                serde_json::to_string_pretty(&value)
            };
            println!("{}", text.expect("serializable"));
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("covreg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
