use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use brush_core::centre::brush_centre;
use brush_core::cleaning::{clean, clean_directed, reverse_clean, BrushAllocation, CleaningTrace, Policy};
use brush_core::graph::{SimpleGraph, VertexId};
use brush_core::harness::{self, render_table, SuiteReport, VerifyCaps, DEFAULT_SEED};
use brush_core::io::{self, GraphFile, LoadedGraph};
use brush_core::jaco::JacoGraph;
use brush_core::mycielski::mycielskian;
use brush_core::solvers::{
    brush_number_exact_capped, brush_number_formula_mycielski_jaco, brush_number_permutation_check,
    evaluate_jaco_formula, verify_witness, Claim, SUBSET_DP_CAP,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "brushkit", version, about = "Brush cleaning on graphs: Jaco graphs, Mycielskians, brush numbers and centres")]
struct Cli {
    /// Output format; json by default, text for `verify`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Jaco graphs J_n(1).
    #[command(subcommand)]
    Jaco(JacoCmd),
    /// Mycielskian of a Jaco graph or of a graph file.
    Mycielski(MycielskiArgs),
    /// Brush numbers, simulation and centres.
    #[command(subcommand)]
    Brush(BrushCmd),
    /// Claim-verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum JacoCmd {
    /// The canonically oriented J_n(1).
    Build {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Degrees, Jaconian vertices and the Hope subgraph.
    Info {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MycielskiSource {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jaco: Option<u64>,
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct MycielskiArgs {
    #[command(flatten)]
    source: MycielskiSource,
    #[arg(long)]
    cap_vertices: Option<usize>,
}

#[derive(Clone, Debug)]
enum Method {
    Dp,
    Perm,
    FormulaJaco(usize),
    FormulaMycielski(usize),
}

fn parse_method(s: &str) -> Result<Method, String> {
    let formula_n = |rest: &str| -> Result<usize, String> {
        rest.parse::<usize>()
            .ok()
            .filter(|&n| n >= 2)
            .ok_or_else(|| format!("expected an integer n >= 2 after the colon, got {rest:?}"))
    };
    match s.split_once(':') {
        None if s == "dp" => Ok(Method::Dp),
        None if s == "perm" => Ok(Method::Perm),
        Some(("formula-jaco", n)) => formula_n(n).map(Method::FormulaJaco),
        Some(("formula-mycielski", n)) => formula_n(n).map(Method::FormulaMycielski),
        _ => Err("expected dp, perm, formula-jaco:<n> or formula-mycielski:<n>".into()),
    }
}

#[derive(Clone, Debug)]
enum PolicyArg {
    Greedy,
    Exhaustive,
    Order(Vec<usize>),
}

fn parse_policy(s: &str) -> Result<PolicyArg, String> {
    match s {
        "greedy" => Ok(PolicyArg::Greedy),
        "exhaustive" => Ok(PolicyArg::Exhaustive),
        _ => {
            let list = s
                .strip_prefix("order:")
                .ok_or("expected greedy, exhaustive or order:<v,v,...>")?;
            list.split(',')
                .map(|t| t.trim().trim_start_matches('v').parse::<usize>().ok().filter(|&v| v >= 1))
                .collect::<Option<Vec<_>>>()
                .map(PolicyArg::Order)
                .ok_or_else(|| format!("bad vertex list {list:?}"))
        }
    }
}

#[derive(Subcommand)]
enum BrushCmd {
    /// Brush number by exact oracle or closed formula.
    Solve {
        /// Required for dp and perm.
        #[arg(long)]
        input: Option<PathBuf>,
        /// dp | perm | formula-jaco:<n> | formula-mycielski:<n>
        #[arg(long, default_value = "dp", value_parser = parse_method)]
        method: Method,
        #[arg(long)]
        cap_vertices: Option<usize>,
    },
    /// Run the cleaning process from an allocation file.
    Simulate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        allocation: PathBuf,
        /// greedy | exhaustive | order:<v,v,...>
        #[arg(long, default_value = "greedy", value_parser = parse_policy)]
        policy: PolicyArg,
        /// Also run the second cleaning along the reversed orientation.
        #[arg(long)]
        reverse: bool,
        #[arg(long)]
        cap_vertices: Option<usize>,
    },
    /// Brush centre: smallest supports of b_r brushes, then least spread.
    Centre {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_support: Option<u64>,
        #[arg(long)]
        cap_vertices: Option<usize>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Closed form for b_r(J_n) against the exact oracle.
    Thm21 {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(2..))]
        n_max: u64,
    },
    /// Doubling formula for b_r(mu(J_n)) against the exact oracle.
    Thm22 {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(2..))]
        n_max: u64,
    },
    /// End configuration of the canonical cleaning of J_n against its brush centre.
    Thm31 {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(5..))]
        n_max: u64,
    },
    /// Paths, cycles, stars and complete graphs.
    Classics,
    /// Greedy against exhaustive firing orders on random graphs.
    Confluence {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Reversed second cleanings.
    Reversibility {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Every suite with default limits.
    All {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Infra(String),
    Core(brush_core::Error),
}

impl From<brush_core::Error> for Failure {
    fn from(e: brush_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Core(e.into())
    }
}

type Out = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Infra(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Out {
    let format = cli.format;
    match cli.command {
        Command::Jaco(JacoCmd::Build { n }) => jaco_build(n as usize, format.unwrap_or(Format::Json)),
        Command::Jaco(JacoCmd::Info { n }) => jaco_info(n as usize, format.unwrap_or(Format::Json)),
        Command::Mycielski(args) => mycielski(args, format.unwrap_or(Format::Json)),
        Command::Brush(BrushCmd::Solve { input, method, cap_vertices }) => {
            solve(input.as_deref(), method, cap_vertices, no_dot(format, Format::Json)?)
        }
        Command::Brush(BrushCmd::Simulate { input, allocation, policy, reverse, cap_vertices }) => simulate(
            &input,
            &allocation,
            policy,
            reverse,
            cap_vertices,
            no_dot(format, Format::Json)?,
        ),
        Command::Brush(BrushCmd::Centre { input, max_support, cap_vertices }) => centre(
            &input,
            max_support.map(|k| k as usize),
            cap_vertices,
            no_dot(format, Format::Json)?,
        ),
        Command::Verify(cmd) => verify(cmd, no_dot(format, Format::Text)?),
    }
}

fn no_dot(format: Option<Format>, default: Format) -> Result<Format, Failure> {
    match format.unwrap_or(default) {
        Format::Dot => Err(Failure::Usage("--format dot only applies to graph output".into())),
        f => Ok(f),
    }
}

fn load(path: &Path, cap: Option<usize>) -> Result<LoadedGraph, Failure> {
    let loaded = io::load_graph(path).map_err(|e| match e {
        brush_core::Error::Io(e) => Failure::Infra(format!("{}: {e}", path.display())),
        e => e.into(),
    })?;
    if let Some(cap) = cap {
        let size = loaded.graph.order();
        if size > cap {
            return Err(brush_core::Error::CapExceeded { what: "input vertices", size, cap }.into());
        }
    }
    Ok(loaded)
}

fn pretty(v: &impl serde::Serialize) -> Out {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn fmt_ids(vs: &[VertexId]) -> String {
    vs.iter().map(VertexId::to_string).collect::<Vec<_>>().join(" ")
}

fn fmt_allocation(beta: &BrushAllocation) -> String {
    beta.support()
        .iter()
        .map(|&v| format!("{v}={}", beta.get(v)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn jaco_build(n: usize, format: Format) -> Out {
    let j = JacoGraph::build(n)?;
    match format {
        Format::Json => pretty(&GraphFile::from_orientation(j.orientation())),
        Format::Dot => Ok(io::orientation_to_dot(j.orientation(), None)),
        Format::Text => Ok(io::to_edge_list(j.graph())),
    }
}

fn jaco_info(n: usize, format: Format) -> Out {
    let j = JacoGraph::build(n)?;
    let degrees: Vec<usize> = j.graph().degrees();
    let mut info = json!({
        "n": n,
        "edges": j.graph().size(),
        "out_degrees": j.out_degrees(),
        "in_degrees": j.in_degrees(),
        "degrees": degrees,
    });
    if let Ok(data) = j.jaconian_data() {
        info["max_degree"] = json!(data.max_degree);
        info["jaconian_set"] = json!(data.jaconian_set);
        info["prime_jaconian"] = json!(data.prime_jaconian);
        info["hope_vertices"] = json!(data.hope_vertices);
        info["hope"] = io::graph_to_json(&data.hope);
    }
    match format {
        Format::Json => pretty(&info),
        Format::Dot => Err(Failure::Usage("--format dot only applies to graph output".into())),
        Format::Text => {
            let list = |key: &str| -> String {
                info[key]
                    .as_array()
                    .map(|a| a.iter().map(Value::to_string).collect::<Vec<_>>().join(" "))
                    .unwrap_or_default()
            };
            let mut out = String::new();
            let _ = writeln!(out, "J_{n}(1): {} vertices, {} edges", n, info["edges"]);
            let _ = writeln!(out, "out-degrees: {}", list("out_degrees"));
            let _ = writeln!(out, "in-degrees:  {}", list("in_degrees"));
            if let Ok(data) = j.jaconian_data() {
                let _ = writeln!(out, "max degree: {}", data.max_degree);
                let _ = writeln!(out, "jaconian set: {}", fmt_ids(&data.jaconian_set));
                let _ = writeln!(out, "prime jaconian: {}", data.prime_jaconian);
                let _ = writeln!(out, "hope: {} ({} edges)", fmt_ids(&data.hope_vertices), data.hope.size());
            }
            Ok(out)
        }
    }
}

fn mycielski(args: MycielskiArgs, format: Format) -> Out {
    let base = match (args.source.jaco, args.source.input) {
        (Some(n), _) => JacoGraph::build(n as usize)?.graph().clone(),
        (None, Some(path)) => load(&path, args.cap_vertices)?.graph,
        (None, None) => unreachable!("clap enforces one source"),
    };
    let m = mycielskian(&base);
    match format {
        Format::Json => pretty(&GraphFile::from_mycielski(&m)),
        Format::Dot => Ok(io::to_dot(&m.graph, Some(&m.partition))),
        Format::Text => {
            let p = &m.partition;
            let mut out = format!(
                "# {} vertices, {} edges, connected: {}\n# v: {}\n# x: {}\n# w: {}\n",
                m.graph.order(),
                m.graph.size(),
                m.graph.is_connected(),
                fmt_ids(&p.originals()),
                fmt_ids(&p.shadows()),
                p.apex(),
            );
            out.push_str(&io::to_edge_list(&m.graph));
            Ok(out)
        }
    }
}

fn solve(input: Option<&Path>, method: Method, cap: Option<usize>, format: Format) -> Out {
    let graph = |method: &str| -> Result<SimpleGraph, Failure> {
        let path = input.ok_or_else(|| Failure::Usage(format!("--method {method} needs --input")))?;
        Ok(load(path, cap)?.graph)
    };
    let report = match method {
        Method::Dp => {
            let g = graph("dp")?;
            let r = brush_number_exact_capped(&g, cap.unwrap_or(SUBSET_DP_CAP))?;
            let w = verify_witness(&g, &r)?;
            json!({
                "method": "dp",
                "value": r.value,
                "ordering": r.witness_ordering,
                "allocation": r.witness_allocation,
                "witness_cleans": w.cleans,
            })
        }
        Method::Perm => {
            let g = graph("perm")?;
            json!({"method": "perm", "value": brush_number_permutation_check(&g)?})
        }
        Method::FormulaJaco(n) => {
            let f = evaluate_jaco_formula(n)?;
            json!({
                "method": format!("formula-jaco:{n}"),
                "value": f.value,
                "prime_jaconian": f.prime_jaconian,
                "negative_terms": f.negative_terms,
            })
        }
        Method::FormulaMycielski(n) => json!({
            "method": format!("formula-mycielski:{n}"),
            "value": brush_number_formula_mycielski_jaco(n)?,
        }),
    };
    match format {
        Format::Text => {
            let mut out = format!("{}: b_r = {}\n", report["method"].as_str().unwrap_or(""), report["value"]);
            if let Method::Dp = method {
                let ordering: Vec<String> = report["ordering"]
                    .as_array()
                    .map(|a| a.iter().map(|v| format!("v{v}")).collect())
                    .unwrap_or_default();
                let _ = writeln!(out, "ordering: {}", ordering.join(" "));
                let allocation: Vec<String> = report["allocation"]
                    .as_object()
                    .map(|m| m.iter().map(|(k, c)| format!("v{k}={c}")).collect())
                    .unwrap_or_default();
                let _ = writeln!(out, "allocation: {}", allocation.join(" "));
            }
            Ok(out)
        }
        _ => pretty(&report),
    }
}

fn simulate(graph_path: &Path, alloc_path: &Path, policy: PolicyArg, reverse: bool, cap: Option<usize>, format: Format) -> Out {
    let loaded = load(graph_path, cap)?;
    let g = &loaded.graph;
    let text = std::fs::read_to_string(alloc_path)
        .map_err(|e| Failure::Infra(format!("{}: {e}", alloc_path.display())))?;
    let beta = io::parse_allocation(g.order(), &text)?;
    let first = match (&loaded.orientation, policy) {
        (Some(o), PolicyArg::Greedy) => clean_directed(o, &beta)?,
        (Some(_), _) => return Err(Failure::Usage("directed inputs only support --policy greedy".into())),
        (None, PolicyArg::Greedy) => clean(g, &beta, &Policy::Greedy)?,
        (None, PolicyArg::Exhaustive) => clean(g, &beta, &Policy::exhaustive())?,
        (None, PolicyArg::Order(order)) => {
            let order = order.into_iter().map(VertexId::new).collect();
            clean(g, &beta, &Policy::Explicit(order)).map_err(|e| match e {
                brush_core::Error::NotPermutation(_) | brush_core::Error::VertexOutOfRange { .. } => {
                    Failure::Usage(format!("--policy order: {e}"))
                }
                e => e.into(),
            })?
        }
    };
    let second = if reverse && first.is_cleaned() { Some(reverse_clean(g, &first)?) } else { None };
    match format {
        Format::Text => {
            let mut out = render_trace(&first);
            if reverse {
                out.push_str("reverse:\n");
                match &second {
                    Some(t) => out.push_str(&render_trace(t)),
                    None => out.push_str("  not run: first cleaning is stuck\n"),
                }
            }
            Ok(out)
        }
        _ => {
            let mut report = io::trace_to_json(&first);
            if reverse {
                report["reverse"] = second.as_ref().map_or(Value::Null, io::trace_to_json);
            }
            pretty(&report)
        }
    }
}

fn render_trace(t: &CleaningTrace) -> String {
    let mut out = format!("initial: {}\n", fmt_allocation(&t.initial));
    for e in &t.events {
        let cleaned: Vec<String> = e.dispatched.iter().map(|r| format!("{}-{}", e.vertex, r)).collect();
        let _ = writeln!(out, "  fire {}: {} (surplus {})", e.vertex, cleaned.join(" "), e.surplus_retained);
    }
    let _ = writeln!(out, "outcome: {}", if t.is_cleaned() { "cleaned" } else { "stuck" });
    let _ = writeln!(out, "end: {}", fmt_allocation(&t.end));
    out
}

fn centre(path: &Path, max_support: Option<usize>, cap: Option<usize>, format: Format) -> Out {
    let g = load(path, cap)?.graph;
    let c = brush_centre(&g, max_support)?;
    match format {
        Format::Text => {
            let spread = c.spread.map_or("disconnected".to_string(), |s| s.to_string());
            let mut out = format!("b_r = {}, cardinality {}, spread {}\n", c.b_r, c.cardinality, spread);
            for s in &c.supports {
                let _ = writeln!(
                    out,
                    "  {{{}}}: {}{}",
                    fmt_ids(&s.vertices).replace(' ', ","),
                    fmt_allocation(&s.allocation),
                    if s.reachable_as_end { "" } else { " (not reachable as an end state)" }
                );
            }
            Ok(out)
        }
        _ => pretty(&c),
    }
}

fn verify(cmd: VerifyCmd, format: Format) -> Out {
    let caps = VerifyCaps::default();
    let suites = match cmd {
        VerifyCmd::Thm21 { n_max } => vec![harness::claim_suite(Claim::Thm21, n_max as usize)?],
        VerifyCmd::Thm22 { n_max } => vec![harness::claim_suite(Claim::Thm22, n_max as usize)?],
        VerifyCmd::Thm31 { n_max } => vec![harness::theorem31_suite(n_max as usize)?],
        VerifyCmd::Classics => vec![harness::classics_suite()?],
        VerifyCmd::Confluence { seed } => vec![harness::confluence_suite(seed, caps.samples, 6)?],
        VerifyCmd::Reversibility { seed } => vec![harness::reversibility_suite(seed, caps.samples, 12, 10)?],
        VerifyCmd::All { seed } => harness::verify_all(&VerifyCaps { seed, ..caps })?.suites,
    };
    match format {
        Format::Text => {
            let disagreements: usize = suites.iter().map(SuiteReport::disagreements).sum();
            Ok(format!("{}{} disagreement(s)\n", render_table(&suites), disagreements))
        }
        _ => match &suites[..] {
            [single] if single.suite.starts_with("thm2") => pretty(&single.detail),
            [single] => pretty(single),
            all => pretty(&json!({"suites": all})),
        },
    }
}
