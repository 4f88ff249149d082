use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use bicritical::criticality::{
    bicritical_witness, classify_brick, deletable_edges, is_minimal_bicritical, two_separations,
};
use bicritical::decomposition::{brick_decomposition, SeparationPolicy, TreeCounts};
use bicritical::graph6::read_graph6_stream;
use bicritical::matching::{maximum_matching, removable_edges};
use bicritical::scan::{census, census_stream, hunt_counterexample, CensusConfig, CensusReport};
use bicritical::verify::{run_checks, Check, CheckConfig, Status, VerdictReport};
use bicritical::{emit_graph6, BrickKind, Edge, Error, Graph, VertexSet};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "bicrit",
    version,
    about = "Bicritical graphs, brick decompositions and exhaustive checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report for each input graph.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Brick decomposition of each input graph.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "lex")]
        policy: PolicyArg,
        /// Required with `--policy random`.
        #[arg(long)]
        seed: Option<u64>,
        /// Write the tree of the first input graph as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Census over every connected graph in an order range, or over a graph6 stream.
    Scan {
        #[command(flatten)]
        input: OptionalInput,
        /// Orders to enumerate, `MIN..MAX` or a single order.
        #[arg(long = "n", value_parser = parse_range, default_value = "4..8")]
        orders: RangeInclusive<usize>,
        #[command(flatten)]
        census: CensusArgs,
        /// Write one witness per line as `kind<TAB>order<TAB>graph6`.
        #[arg(long)]
        witnesses: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run checks on the input graphs, or on every connected graph up to `--n-max`.
    Verify {
        #[command(flatten)]
        input: OptionalInput,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[command(flatten)]
        census: CensusArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search for the smallest graph failing a check or probe.
    Hunt {
        /// A check name, `every_bicritical_is_brick` or `always_true`.
        #[arg(long)]
        predicate: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    g6: Option<String>,
    #[arg(long)]
    stdin: bool,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct MaybeSource {
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    g6: Option<String>,
    #[arg(long)]
    stdin: bool,
}

#[derive(Args)]
struct InputArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "g6")]
    format: FormatArg,
}

#[derive(Args)]
struct OptionalInput {
    #[command(flatten)]
    source: MaybeSource,
    #[arg(long, value_enum, default_value = "g6")]
    format: FormatArg,
}

impl OptionalInput {
    fn given(&self) -> Option<InputArgs> {
        let s = &self.source;
        (s.input.is_some() || s.g6.is_some() || s.stdin).then(|| InputArgs {
            source: Source {
                input: s.input.clone(),
                g6: s.g6.clone(),
                stdin: s.stdin,
            },
            format: self.format,
        })
    }
}

#[derive(Args)]
struct CensusArgs {
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Worker threads; 0 uses the available parallelism.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Seeded-random decompositions compared against the lexicographic one.
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl CensusArgs {
    fn config(&self, orders: impl IntoIterator<Item = usize>) -> Result<CensusConfig, Error> {
        let mut config = CensusConfig::new(orders, &Check::parse_suite(&self.suite)?);
        config.workers = self.workers;
        config.check_config = CheckConfig {
            trials: self.trials,
            seed: self.seed,
        };
        Ok(config)
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    G6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Lex,
    Random,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let range = match s.split_once("..") {
        Some((a, b)) => parse(a)?..=parse(b.trim_start_matches('='))?,
        None => parse(s)?..=parse(s)?,
    };
    if range.is_empty() {
        return Err(format!("empty range {s}"));
    }
    Ok(range)
}

enum Failure {
    Usage(String),
    Counterexample,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_text(input: &InputArgs) -> Result<String, Failure> {
    if let Some(g6) = &input.source.g6 {
        return Ok(g6.clone());
    }
    if let Some(path) = &input.source.input {
        return fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())));
    }
    let mut text = String::new();
    io::stdin().read_to_string(&mut text)?;
    Ok(text)
}

fn read_graphs(input: &InputArgs) -> Result<Vec<Graph>, Failure> {
    let text = read_text(input)?;
    let graphs = match input.format {
        FormatArg::Edgelist => vec![Graph::parse_edge_list_text(&text)?],
        FormatArg::G6 => read_graph6_stream(text.as_bytes()).collect::<Result<_, _>>()?,
    };
    if graphs.is_empty() {
        return Err(Failure::Usage("no graph in input".into()));
    }
    Ok(graphs)
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &output.report {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct Analysis {
    graph6: String,
    order: usize,
    size: usize,
    degrees: Vec<usize>,
    cubic_vertices: VertexSet,
    connected: bool,
    maximum_matching: usize,
    bicritical: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    bicritical_witness: Option<VertexSet>,
    minimal: bool,
    deletable_edges: Option<Vec<Edge>>,
    removable_edges: Option<Vec<Edge>>,
    separations: Option<Vec<VertexSet>>,
    brick: BrickKind,
}

fn analyze(g: &Graph) -> Analysis {
    let witness = bicritical_witness(g);
    let bicritical = witness.is_none();
    Analysis {
        graph6: emit_graph6(g),
        order: g.order(),
        size: g.size(),
        degrees: g.degrees(),
        cubic_vertices: g.cubic_vertices(),
        connected: g.is_connected(),
        maximum_matching: maximum_matching(g).size(),
        bicritical,
        bicritical_witness: witness,
        minimal: is_minimal_bicritical(g),
        deletable_edges: deletable_edges(g).ok(),
        removable_edges: removable_edges(g).ok(),
        separations: two_separations(g).ok(),
        brick: classify_brick(g),
    }
}

#[derive(Serialize)]
struct Leaf {
    graph6: String,
    /// Original vertex of each leaf vertex.
    origin: Vec<usize>,
    markers: Vec<Edge>,
}

#[derive(Serialize)]
struct Decomposition {
    graph6: String,
    #[serde(flatten)]
    counts: TreeCounts,
    brick_codes: Vec<String>,
    leaves: Vec<Leaf>,
}

fn lines<T: Serialize>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| serde_json::to_string(x).expect("serializable") + "\n")
        .collect()
}

fn census_verdict(report: &CensusReport) -> Result<(), Failure> {
    if report.failure_count() > 0 {
        Err(Failure::Counterexample)
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { input, output } => {
            let reports: Vec<Analysis> = read_graphs(&input)?.iter().map(analyze).collect();
            emit(&output, &lines(&reports))
        }
        Command::Decompose {
            input,
            policy,
            seed,
            dot,
            output,
        } => {
            let policy = match (policy, seed) {
                (PolicyArg::Lex, None) => SeparationPolicy::Lexicographic,
                (PolicyArg::Random, Some(seed)) => SeparationPolicy::SeededRandom(seed),
                (PolicyArg::Lex, Some(_)) => {
                    return Err(Failure::Usage("--seed requires --policy random".into()))
                }
                (PolicyArg::Random, None) => {
                    return Err(Failure::Usage("--policy random requires --seed".into()))
                }
            };
            let mut out = Vec::new();
            for (i, g) in read_graphs(&input)?.iter().enumerate() {
                let tree = brick_decomposition(g, policy)?;
                if i == 0 {
                    if let Some(path) = &dot {
                        fs::write(path, tree.to_dot(true))?;
                    }
                }
                out.push(Decomposition {
                    graph6: emit_graph6(g),
                    counts: tree.counts(),
                    brick_codes: tree
                        .brick_multiset()?
                        .iter()
                        .map(|c| c.to_string())
                        .collect(),
                    leaves: tree
                        .leaves()
                        .map(|(_, n)| Leaf {
                            graph6: emit_graph6(n.graph.graph()),
                            origin: n.graph.origin().to_vec(),
                            markers: n.graph.original_markers().into_iter().collect(),
                        })
                        .collect(),
                });
            }
            emit(&output, &lines(&out))
        }
        Command::Scan {
            input,
            orders,
            census: args,
            witnesses,
            output,
        } => {
            let report = match input.given() {
                Some(input) => {
                    let text: String = read_graphs(&input)?
                        .iter()
                        .map(|g| emit_graph6(g) + "\n")
                        .collect();
                    census_stream(text.as_bytes(), &args.config([])?)?
                }
                None => census(&args.config(orders)?)?,
            };
            if let Some(path) = witnesses {
                fs::write(path, report.witness_sidecar())?;
            }
            emit(&output, &(report.to_json() + "\n"))?;
            census_verdict(&report)
        }
        Command::Verify {
            input,
            n_max,
            census: args,
            output,
        } => match input.given() {
            Some(input) => {
                let config = args.config([])?;
                let mut verdicts: Vec<VerdictReport> = Vec::new();
                for g in read_graphs(&input)? {
                    verdicts.extend(run_checks(&g, &config.checks, config.check_config));
                }
                let text: String = verdicts.iter().map(|v| v.to_line() + "\n").collect();
                emit(&output, &text)?;
                if verdicts.iter().any(|v| v.status == Status::Fail) {
                    return Err(Failure::Counterexample);
                }
                Ok(())
            }
            None => {
                let report = census(&args.config(1..=n_max)?)?;
                let mut text = String::new();
                for o in &report.orders {
                    for (check, t) in &o.checks {
                        let line = serde_json::json!({
                            "order": o.order,
                            "check": check,
                            "pass": t.pass,
                            "vacuous": t.vacuous,
                            "fail": t.fail,
                        });
                        text.push_str(&format!("{line}\n"));
                    }
                    for f in &o.failures {
                        text.push_str(&(f.to_line() + "\n"));
                    }
                }
                emit(&output, &text)?;
                census_verdict(&report)
            }
        },
        Command::Hunt {
            predicate,
            n_max,
            trials,
            seed,
            output,
        } => {
            let found = hunt_counterexample(&predicate, n_max, CheckConfig { trials, seed })?;
            let text = match &found {
                Some(r) => r.to_line(),
                None => "null".to_string(),
            };
            emit(&output, &(text + "\n"))?;
            match found {
                Some(_) => Err(Failure::Counterexample),
                None => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Counterexample) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("bicrit: {message}");
            ExitCode::from(2)
        }
    }
}
