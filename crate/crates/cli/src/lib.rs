//! `contract-lab` command-line front end. [`run`] is the whole program;
//! `main` only wires it to the process streams.

pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use contract_lab::budget::BUDGET_ENV;
use contract_lab::class_c::{
    compute_c_h, decompose, find_c_obstruction, smallest_triangulated_grid_index, CMode, DEFAULT_GRID_MAX,
};
use contract_lab::embedding::{dual, enumerate_embeddings, planar_embed, PlaneMultigraph};
use contract_lab::generators::{self, enumerate_connected_graphs};
use contract_lab::pipeline::{decide, sample_planar_graph, verify_suite_with, DecideConfig, StandardFamilies, Verdict, CHECKS};
use contract_lab::relations::{
    is_contraction_with, is_minor_with, is_topological_minor_with, MinorWitness, TmWitness, WitnessPartition,
};
use contract_lab::treewidth::{exact_treewidth, treewidth_bounds, EXACT_TW_CAP};
use contract_lab::{Budget, Error, Graph, Multigraph, Outcome};

use format::{parse_embedding, parse_graph, serialize_embedding, serialize_graph};

pub const EXIT_DECIDED: i32 = 0;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Parser, Debug)]
#[command(name = "contract-lab", version, about = "Contraction, minor and treewidth tools for small planar graphs")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Node cap for each exponential search.
    #[arg(long, global = true, env = BUDGET_ENV)]
    budget: Option<u64>,
    /// Print graphs as Graphviz DOT instead of GraphFile text.
    #[arg(long, global = true)]
    dot: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print a named graph.
    Gen {
        #[arg(long)]
        pattern: Pattern,
        /// Side length, or the number of extra edges for k33-plus.
        #[arg(long)]
        k: Option<usize>,
        /// Vertex count (complete, cycle, path, random-planar) or leaf count (star).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
    },
    /// Plane embedding of a planar graph.
    Embed {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Faces of an embedding.
    Faces {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Dual of a connected embedding.
    Dual {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Is H a contraction of G?
    ContractTest(PairArgs),
    /// Is H a minor of G?
    MinorTest(PairArgs),
    /// Is H a topological minor of G?
    TmTest(PairArgs),
    /// Membership in class C.
    MemberC {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Route::Forbidden)]
        route: Route,
    },
    /// Cut-vertex and adjacent-2-cut decomposition tree.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Treewidth, exact up to 18 vertices.
    Treewidth {
        #[arg(long = "in")]
        input: PathBuf,
        /// Only the greedy bounds.
        #[arg(long)]
        bounds: bool,
    },
    /// Treewidth threshold c_H of a pattern in class C.
    CConst {
        #[arg(long)]
        h: PathBuf,
        /// Least grid side instead of the dual size bound.
        #[arg(long)]
        exact: bool,
    },
    /// Decide H ≤_c G through the treewidth threshold and witness search.
    Decide {
        #[command(flatten)]
        pair: PairArgs,
        /// Compute c_H in exact mode.
        #[arg(long)]
        exact_c: bool,
    },
    /// Run the verification suite.
    Verify {
        /// Check ids to run (default: all).
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
    /// Connected graphs on --n vertices, or embeddings of --in.
    Enumerate {
        #[arg(long = "in", conflicts_with = "n")]
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(clap::Args, Debug)]
struct PairArgs {
    #[arg(long)]
    h: PathBuf,
    #[arg(long)]
    g: PathBuf,
    /// Validate the witness in this JSON file instead of searching.
    #[arg(long)]
    check_witness: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Pattern {
    Grid,
    TriangulatedGrid,
    Wall,
    Complete,
    CompleteBipartite,
    Cycle,
    Path,
    Star,
    Wheel4,
    K33Plus,
    Petersen,
    RandomPlanar,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    Forbidden,
    Decomposition,
    Grid,
}

enum Failure {
    Usage(String),
    Parse(String),
    NoInput(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

enum Output {
    Text(String),
    Json { exit: i32, value: Value },
}

fn report(answer: Value, witness: Value, certificate: Value, log: Vec<String>) -> Output {
    Output::Json { exit: EXIT_DECIDED, value: json!({"answer": answer, "witness": witness, "certificate": certificate, "log": log}) }
}

fn exhausted(budget: &Budget) -> Output {
    Output::Json {
        exit: EXIT_BUDGET,
        value: json!({"answer": null, "witness": null, "certificate": null, "log": [format!("budget of {} nodes exhausted", budget.limit())]}),
    }
}

/// Parses `argv` (program name first), runs the command, and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_DECIDED };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    if let Some(t) = cli.threads {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    if let Some(b) = cli.budget {
        std::env::set_var(BUDGET_ENV, b.to_string());
    }
    match execute(&cli) {
        Ok(Output::Text(s)) => {
            let _ = write!(out, "{s}");
            EXIT_DECIDED
        }
        Ok(Output::Json { exit, value }) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("JSON values serialize"));
            exit
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Parse(m) => (EXIT_PARSE, m),
                Failure::NoInput(m) => (EXIT_NO_INPUT, m),
                Failure::Lib(Error::BudgetExhausted(n)) => (EXIT_BUDGET, format!("budget of {n} nodes exhausted")),
                Failure::Lib(e @ Error::Inconsistent(_)) => (EXIT_INTERNAL, e.to_string()),
                Failure::Lib(e) => (EXIT_PARSE, e.to_string()),
            };
            let _ = writeln!(err, "contract-lab: {msg}");
            code
        }
    }
}

fn budget(cli: &Cli) -> Budget {
    cli.budget.map(Budget::new).unwrap_or_else(Budget::from_env)
}

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::NoInput(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Res<Graph> {
    parse_graph(&read(path)?).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load_embedding(path: &Path) -> Res<PlaneMultigraph> {
    parse_embedding(&read(path)?).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

/// The `witness` field of a previous report, or the file itself.
fn load_witness<W: serde::de::DeserializeOwned>(path: &Path) -> Res<W> {
    let v: Value = serde_json::from_str(&read(path)?).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let v = match v {
        Value::Object(ref m) if m.contains_key("witness") => m["witness"].clone(),
        other => other,
    };
    serde_json::from_value(v).map_err(|e| Failure::Parse(format!("{}: witness: {e}", path.display())))
}

fn checked(result: contract_lab::Result<()>) -> Output {
    match result {
        Ok(()) => report(json!(true), Value::Null, Value::Null, vec!["witness is valid".into()]),
        Err(e) => report(json!(false), Value::Null, Value::Null, vec![format!("witness rejected: {e}")]),
    }
}

fn graph_text(cli: &Cli, g: &Graph) -> String {
    if cli.dot {
        g.to_dot()
    } else {
        serialize_graph(g)
    }
}

fn multigraph_dot(mg: &Multigraph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..mg.vertex_count() {
        s.push_str(&format!("  {v};\n"));
    }
    for &(a, b) in mg.edges() {
        s.push_str(&format!("  {a} -- {b};\n"));
    }
    s.push_str("}\n");
    s
}

fn embedding_text(cli: &Cli, pg: &PlaneMultigraph) -> String {
    if cli.dot {
        multigraph_dot(pg.multigraph())
    } else {
        serialize_embedding(pg)
    }
}

fn need(v: Option<usize>, flag: &str, pattern: Pattern) -> Res<usize> {
    v.ok_or_else(|| Failure::Usage(format!("--pattern {pattern:?} needs --{flag}")))
}

fn generate(cli: &Cli, pattern: Pattern, k: Option<usize>, n: Option<usize>, p: Option<usize>, q: Option<usize>) -> Res<Graph> {
    use generators::*;
    Ok(match pattern {
        Pattern::Grid => grid(need(k, "k", pattern)?)?,
        Pattern::TriangulatedGrid => triangulated_grid(need(k, "k", pattern)?)?,
        Pattern::Wall => wall(need(k, "k", pattern)?)?,
        Pattern::Complete => named(PatternName::Complete(need(n, "n", pattern)?))?,
        Pattern::CompleteBipartite => named(PatternName::CompleteBipartite(need(p, "p", pattern)?, need(q, "q", pattern)?))?,
        Pattern::Cycle => named(PatternName::Cycle(need(n, "n", pattern)?))?,
        Pattern::Path => named(PatternName::Path(need(n, "n", pattern)?))?,
        Pattern::Star => named(PatternName::Star(need(n, "n", pattern)?))?,
        Pattern::Wheel4 => wheel4(),
        Pattern::K33Plus => named(PatternName::K33Plus(need(k, "k", pattern)?))?,
        Pattern::Petersen => petersen(),
        Pattern::RandomPlanar => sample_planar_graph(need(n, "n", pattern)?, cli.seed)?,
    })
}

fn execute(cli: &Cli) -> Res<Output> {
    match &cli.cmd {
        Cmd::Gen { pattern, k, n, p, q } => Ok(Output::Text(graph_text(cli, &generate(cli, *pattern, *k, *n, *p, *q)?))),
        Cmd::Embed { input } => {
            let g = load_graph(input)?;
            match planar_embed(&g) {
                Some(pg) => Ok(Output::Text(embedding_text(cli, &pg))),
                None => Ok(report(json!(false), Value::Null, Value::Null, vec!["graph is not planar".into()])),
            }
        }
        Cmd::Faces { input } => {
            let pg = load_embedding(input)?;
            let faces: Vec<Vec<usize>> =
                pg.faces().iter().map(|f| if f.is_empty() { vec![f.anchor] } else { f.darts.iter().map(|&d| pg.tail(d)).collect() }).collect();
            let euler = pg.vertex_count() as i64 - pg.edge_count() as i64 + faces.len() as i64;
            Ok(report(
                json!(faces.len()),
                json!(faces),
                json!({"euler_characteristic": euler, "components": pg.component_count()}),
                Vec::new(),
            ))
        }
        Cmd::Dual { input } => {
            let pg = load_embedding(input)?;
            Ok(Output::Text(embedding_text(cli, &dual(&pg)?.dual)))
        }
        Cmd::ContractTest(a) => {
            let (h, g) = (load_graph(&a.h)?, load_graph(&a.g)?);
            if let Some(w) = &a.check_witness {
                return Ok(checked(load_witness::<WitnessPartition>(w)?.validate(&h, &g)));
            }
            let b = budget(cli);
            Ok(match is_contraction_with(&h, &g, &b)? {
                Outcome::Found(w) => {
                    let seq = w.contraction_sequence(&g, h.vertex_count());
                    report(json!(true), json!(w), json!({"contraction_sequence": seq}), vec!["witness validated".into()])
                }
                Outcome::Absent => report(json!(false), Value::Null, Value::Null, vec!["search space exhausted".into()]),
                Outcome::Exhausted => exhausted(&b),
            })
        }
        Cmd::MinorTest(a) => {
            let (h, g) = (load_graph(&a.h)?, load_graph(&a.g)?);
            if let Some(w) = &a.check_witness {
                return Ok(checked(load_witness::<MinorWitness>(w)?.validate(&h, &g)));
            }
            let b = budget(cli);
            Ok(match is_minor_with(&h, &g, &b)? {
                Outcome::Found(w) => report(json!(true), json!(w), Value::Null, Vec::new()),
                Outcome::Absent => report(json!(false), Value::Null, Value::Null, Vec::new()),
                Outcome::Exhausted => exhausted(&b),
            })
        }
        Cmd::TmTest(a) => {
            let (h, g) = (load_graph(&a.h)?, load_graph(&a.g)?);
            let (hm, gm) = (Multigraph::from_graph(&h), Multigraph::from_graph(&g));
            if let Some(w) = &a.check_witness {
                return Ok(checked(load_witness::<TmWitness>(w)?.validate(&hm, &gm)));
            }
            let b = budget(cli);
            Ok(match is_topological_minor_with(&hm, &gm, &b)? {
                Outcome::Found(w) => report(json!(true), json!(w), Value::Null, Vec::new()),
                Outcome::Absent => report(json!(false), Value::Null, Value::Null, Vec::new()),
                Outcome::Exhausted => exhausted(&b),
            })
        }
        Cmd::MemberC { input, route } => {
            let g = load_graph(input)?;
            match route {
                Route::Forbidden => Ok(match find_c_obstruction(&g)? {
                    Some((name, w)) => report(json!(false), json!(w), json!({"offender": name}), Vec::new()),
                    None => report(json!(true), Value::Null, Value::Null, vec!["no forbidden contraction".into()]),
                }),
                Route::Decomposition => {
                    let tree = decompose(&g)?;
                    Ok(report(json!(tree.accepted()), Value::Null, json!(tree), Vec::new()))
                }
                Route::Grid => {
                    let b = budget(cli);
                    Ok(match smallest_triangulated_grid_index(&g, DEFAULT_GRID_MAX, &b)? {
                        Outcome::Found(k) => {
                            let grid = generators::triangulated_grid(k)?;
                            let w = is_contraction_with(&g, &grid, &b.fresh())?.found();
                            report(json!(true), json!(w), json!({"grid_index": k}), Vec::new())
                        }
                        Outcome::Absent => report(
                            json!(false),
                            Value::Null,
                            Value::Null,
                            vec![format!("no triangulated grid with k <= {DEFAULT_GRID_MAX} contracts to G")],
                        ),
                        Outcome::Exhausted => exhausted(&b),
                    })
                }
            }
        }
        Cmd::Decompose { input } => {
            let g = load_graph(input)?;
            let tree = decompose(&g)?;
            Ok(report(json!(tree.accepted()), Value::Null, json!(tree), Vec::new()))
        }
        Cmd::Treewidth { input, bounds } => {
            let g = load_graph(input)?;
            let r = if *bounds || g.vertex_count() > EXACT_TW_CAP { treewidth_bounds(&g) } else { exact_treewidth(&g)? };
            let answer = if r.exact { json!(r.upper) } else { Value::Null };
            Ok(report(answer, json!(r.order), json!(r), Vec::new()))
        }
        Cmd::CConst { h, exact } => {
            let h = load_graph(h)?;
            let mode = if *exact { CMode::Exact } else { CMode::Bound };
            let c = compute_c_h(&h, mode, &budget(cli))?;
            Ok(report(
                json!(c.c_h),
                Value::Null,
                json!({
                    "m": c.m,
                    "exact": c.exact,
                    "bound_m": c.bound_m,
                    "grid_index": c.grid_index,
                    "dual_vertex_count": c.dual_vertex_count,
                    "dual_edge_count": c.dual_edge_count,
                    "triangulation": serialize_graph(&c.triangulation),
                }),
                Vec::new(),
            ))
        }
        Cmd::Decide { pair, exact_c } => {
            let (h, g) = (load_graph(&pair.h)?, load_graph(&pair.g)?);
            if let Some(w) = &pair.check_witness {
                return Ok(checked(load_witness::<WitnessPartition>(w)?.validate(&h, &g)));
            }
            let config = DecideConfig {
                c_mode: if *exact_c { CMode::Exact } else { CMode::Bound },
                budget_limit: budget(cli).limit(),
                ..DecideConfig::default()
            };
            let d = decide(&g, &h, &config)?;
            let threshold = d.threshold.as_ref().map(|c| json!({"c_h": c.c_h, "m": c.m, "exact": c.exact}));
            let (witness, certificate) = match &d.verdict {
                Verdict::YesWithWitness { witness } => (json!(witness), json!({"threshold": threshold})),
                Verdict::YesByTreewidth { c_h, tw_lower } => {
                    (Value::Null, json!({"threshold": threshold, "c_h": c_h, "tw_lower": tw_lower}))
                }
                _ => (Value::Null, json!({"threshold": threshold})),
            };
            let exit = if d.verdict == Verdict::BudgetExhausted { EXIT_BUDGET } else { EXIT_DECIDED };
            Ok(Output::Json {
                exit,
                value: json!({"answer": d.answer(), "witness": witness, "certificate": certificate, "log": d.log}),
            })
        }
        Cmd::Verify { only } => {
            let ids: Vec<usize> = if only.is_empty() { CHECKS.iter().map(|c| c.0).collect() } else { only.clone() };
            if let Some(bad) = ids.iter().find(|i| !CHECKS.iter().any(|c| c.0 == **i)) {
                return Err(Failure::Usage(format!("unknown check id {bad}")));
            }
            let r = verify_suite_with(budget(cli).limit(), &StandardFamilies, &ids);
            let log = r.checks.iter().map(|c| format!("{} {:?} {}", c.id, c.status, c.name)).collect();
            Ok(report(json!(r.all_passed()), Value::Null, json!(r), log))
        }
        Cmd::Enumerate { input, n } => match (input, n) {
            (Some(path), _) => {
                let g = load_graph(path)?;
                let embs = enumerate_embeddings(&g, &budget(cli))?;
                let texts: Vec<String> = embs.iter().map(serialize_embedding).collect();
                Ok(report(json!(texts.len()), json!(texts), Value::Null, Vec::new()))
            }
            (None, Some(n)) => {
                let gs = enumerate_connected_graphs(*n)?;
                let texts: Vec<String> = gs.iter().map(serialize_graph).collect();
                Ok(report(json!(texts.len()), json!(texts), Value::Null, Vec::new()))
            }
            (None, None) => Err(Failure::Usage("enumerate needs --in or --n".into())),
        },
    }
}
