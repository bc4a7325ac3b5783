//! Command-line surface over the core analyses. graph6 is the universal
//! pipe format: every graph-taking subcommand accepts a graph6 string, `-`
//! for standard input, or `--edges <file>` with an `n m` edge list, and the
//! generators emit graph6 lines, so subcommands compose in a shell.
//!
//! Exit codes: 0 success, 1 claims failed (or budget verdicts left a run
//! unestablished), 2 usage or parse errors.

use clap::{Args, Parser, Subcommand};
use colorfix_core::{
    build_chain, chromatic_number, close_chain, criticality, default_chain_set,
    enumerate_connected_graphs, identity, is_planar, odd_wheel, parse_edge_list, parse_graph6,
    to_graph6, verify_claims, write_report_to_path, ChainSpec, ClaimId, CorpusSpec, Error, Graph,
    VerifyOptions, ALL_CLAIMS,
};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "colorfix", version, about = "Exact coloring, criticality and fixation analysis for small graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GraphArg {
    /// graph6 string, or `-` to read one from standard input
    #[arg(value_name = "GRAPH")]
    graph: Option<String>,
    /// Read an edge list (`n m` header, then `u v` lines) from this file
    #[arg(long, value_name = "FILE", conflicts_with = "graph")]
    edges: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Chromatic number plus a witness coloring
    Chi(GraphArg),
    /// k-criticality verdict with a certificate summary
    Critical {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Are two vertices color-identical?
    Identity {
        /// `<graph> <u> <v>`, or `<u> <v>` with --edges
        #[arg(value_name = "ARG", num_args = 2..=3)]
        args: Vec<String>,
        #[arg(long, value_name = "FILE")]
        edges: Option<PathBuf>,
    },
    /// The full color-identity partition
    Partition(GraphArg),
    /// Syntactic and semantic fixation verdicts for one vertex
    Fixed {
        /// `<graph> <v>`, or `<v>` with --edges
        #[arg(value_name = "ARG", num_args = 1..=2)]
        args: Vec<String>,
        #[arg(long, value_name = "FILE")]
        edges: Option<PathBuf>,
    },
    /// Emit an odd wheel as graph6
    Wheel {
        #[arg(value_name = "LEN")]
        len: usize,
    },
    /// Emit a fixation chain as graph6 (comma-separated odd lengths)
    Chain {
        #[arg(value_name = "LENGTHS")]
        lengths: String,
    },
    /// Emit a closed chain (end hubs joined) as graph6
    Close {
        #[arg(value_name = "LENGTHS")]
        lengths: String,
    },
    /// Planarity verdict
    Planar(GraphArg),
    /// Stream connected graphs on n vertices as graph6
    Enumerate {
        #[arg(short)]
        n: usize,
        /// Keep only k-critical graphs
        #[arg(long, value_name = "K")]
        critical: Option<usize>,
    },
    /// Run the claim-verification harness and write a report
    Verify {
        /// Built-in corpus: all connected graphs on 1..=n vertices
        #[arg(short, conflicts_with = "corpus", required_unless_present = "corpus")]
        n: Option<usize>,
        /// External corpus: newline-separated graph6 file
        #[arg(long, value_name = "FILE")]
        corpus: Option<PathBuf>,
        /// Claims to run, e.g. `C1,C2` or `C1..C7`
        #[arg(long, value_name = "CLAIMS")]
        claims: String,
        /// Worker count (wall time only; reports are identical)
        #[arg(long, value_name = "J", default_value_t = 1)]
        jobs: usize,
        /// Node-expansion budget per instance
        #[arg(long, value_name = "B")]
        budget: Option<u64>,
        /// Report destination (newline-delimited JSON)
        #[arg(short, value_name = "REPORT")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(arg: &GraphArg) -> Result<Graph, Error> {
    match (&arg.graph, &arg.edges) {
        (Some(text), None) => graph_from_token(text),
        (None, Some(path)) => edge_list_from_file(path),
        (None, None) => Err(Error::Precondition(
            "expected a graph6 string, `-`, or --edges <file>".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
    }
}

fn graph_from_token(token: &str) -> Result<Graph, Error> {
    if token == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Io {
            path: "<stdin>".into(),
            reason: e.to_string(),
        })?;
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| Error::Precondition("standard input carried no graph6 line".into()))?;
        parse_graph6(line.trim())
    } else {
        parse_graph6(token)
    }
}

fn edge_list_from_file(path: &PathBuf) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_edge_list(&text)
}

fn parse_vertex(tok: &str) -> Result<usize, Error> {
    tok.parse()
        .map_err(|_| Error::Precondition(format!("invalid vertex index `{tok}`")))
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), Error> {
    if v < g.n() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n: g.n() })
    }
}

/// Claims syntax: comma-separated items, each `Cx` or an inclusive range
/// `Cx..Cy`.
fn parse_claims(text: &str) -> Result<Vec<ClaimId>, Error> {
    let mut out = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        if let Some((lo, hi)) = item.split_once("..") {
            let lo: ClaimId = lo.parse()?;
            let hi: ClaimId = hi.trim_start_matches('=').parse()?;
            if hi < lo {
                return Err(Error::Precondition(format!("empty claim range `{item}`")));
            }
            out.extend(ALL_CLAIMS.iter().copied().filter(|c| (lo..=hi).contains(c)));
        } else {
            out.push(item.parse()?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Chi(arg) => {
            let g = load_graph(&arg)?;
            let (chi, witness) = chromatic_number(&g);
            println!("{chi}");
            println!("witness: {}", join(witness.colors()));
        }
        Cmd::Critical { k, graph } => {
            let g = load_graph(&graph)?;
            match criticality::check_k_critical(&g, k) {
                Ok(cert) => {
                    println!("critical");
                    println!("k: {k}");
                    println!("edges verified: {}", cert.per_edge.len());
                }
                Err(reason) => {
                    println!("not critical");
                    println!("reason: {}", describe_non_criticality(&reason));
                }
            }
        }
        Cmd::Identity { args, edges } => {
            let (g, rest) = graph_and_rest(args, edges, 2)?;
            let (u, v) = (parse_vertex(&rest[0])?, parse_vertex(&rest[1])?);
            check_vertex(&g, u)?;
            check_vertex(&g, v)?;
            if u == v {
                return Err(Error::Precondition("vertices must differ".into()));
            }
            if identity::is_color_identical_pair(&g, u, v) {
                println!("identical");
            } else {
                println!("not identical");
                if let Some(w) = identity::separating_coloring(&g, u, v) {
                    println!("separating coloring: {}", join(w.colors()));
                }
            }
        }
        Cmd::Partition(arg) => {
            let g = load_graph(&arg)?;
            let p = identity::identity_partition(&g);
            println!("chi: {}", p.chi);
            for class in &p.classes {
                println!("class: {class}");
            }
        }
        Cmd::Fixed { args, edges } => {
            let (g, rest) = graph_and_rest(args, edges, 1)?;
            let v = parse_vertex(&rest[0])?;
            check_vertex(&g, v)?;
            match identity::is_color_fixed_by_odd_cycle(&g, v) {
                Some(cycle) => println!("syntactic: yes (cycle: {cycle})"),
                None => println!("syntactic: no"),
            }
            let sem = identity::semantically_fixed_vertices(&g).contains(v);
            println!("semantic: {}", if sem { "yes" } else { "no" });
        }
        Cmd::Wheel { len } => {
            let wheel = odd_wheel(len)?;
            println!("{}", to_graph6(&wheel.graph));
        }
        Cmd::Chain { lengths } => {
            let chain = build_chain(&ChainSpec::parse(&lengths)?);
            println!("{}", to_graph6(&chain.graph));
        }
        Cmd::Close { lengths } => {
            let chain = build_chain(&ChainSpec::parse(&lengths)?);
            println!("{}", to_graph6(&close_chain(&chain)));
        }
        Cmd::Planar(arg) => {
            let g = load_graph(&arg)?;
            println!("{}", if is_planar(&g) { "planar" } else { "nonplanar" });
        }
        Cmd::Enumerate { n, critical } => {
            let graphs = enumerate_connected_graphs(n)?;
            match critical {
                None => {
                    for g in &graphs {
                        println!("{}", to_graph6(g));
                    }
                }
                Some(k) => {
                    for (g, _) in colorfix_core::enumerate::find_k_critical(graphs, k) {
                        println!("{}", to_graph6(&g));
                    }
                }
            }
        }
        Cmd::Verify {
            n,
            corpus,
            claims,
            jobs,
            budget,
            out,
        } => {
            let spec = match (n, corpus) {
                (Some(n), None) => CorpusSpec::builtin(n),
                (None, Some(path)) => CorpusSpec::graph6_file(path),
                _ => unreachable!("clap enforces exactly one source"),
            };
            let claims = parse_claims(&claims)?;
            if claims.is_empty() {
                return Err(Error::Precondition("no claims selected".into()));
            }
            let options = VerifyOptions {
                budget,
                jobs,
                chains: default_chain_set(),
            };
            let started = std::time::Instant::now();
            let reports = verify_claims(&spec, &claims, &options)?;
            let summary = write_report_to_path(&reports, &out)?;
            for (claim, counts) in &summary.per_claim {
                println!(
                    "{claim}: pass={} fail={} budget={}",
                    counts.pass, counts.fail, counts.budget_exceeded
                );
            }
            println!(
                "total: pass={} fail={} budget={} ({} reports in {:.1?})",
                summary.total.pass,
                summary.total.fail,
                summary.total.budget_exceeded,
                reports.len(),
                started.elapsed()
            );
            println!("report: {}", out.display());
            if !summary.all_pass() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Splits the mixed positional form: `<graph> <rest...>` without --edges,
/// plain `<rest...>` with it.
fn graph_and_rest(
    args: Vec<String>,
    edges: Option<PathBuf>,
    rest_len: usize,
) -> Result<(Graph, Vec<String>), Error> {
    match edges {
        Some(path) => {
            if args.len() != rest_len {
                return Err(Error::Precondition(format!(
                    "expected {rest_len} vertex argument(s) alongside --edges"
                )));
            }
            Ok((edge_list_from_file(&path)?, args))
        }
        None => {
            if args.len() != rest_len + 1 {
                return Err(Error::Precondition(format!(
                    "expected a graph and {rest_len} vertex argument(s)"
                )));
            }
            let g = graph_from_token(&args[0])?;
            Ok((g, args[1..].to_vec()))
        }
    }
}

fn describe_non_criticality(reason: &criticality::NonCriticality) -> String {
    use criticality::NonCriticality::*;
    match reason {
        Disconnected => "the graph is disconnected".into(),
        LowDegreeVertex { vertex, degree } => {
            format!("vertex {vertex} has degree {degree} < k-1")
        }
        CliqueExceedsTarget { clique } => {
            format!("a k-clique ({clique}) sits inside a larger graph")
        }
        WrongChromaticNumber { chi } => format!("chromatic number is {chi}, not k"),
        RedundantEdge { edge } => format!("deleting edge {edge} keeps the chromatic number at k"),
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
