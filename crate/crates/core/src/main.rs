//! Command-line surface: generate family graphs, solve for total-domination
//! invariants, apply graph operations, and run the verification suites.
//!
//! Graphs travel as edge-list text (`n m` header, then `u v` lines). All
//! commands read graphs from files or stdin (`-`) and write results to
//! stdout, keeping diagnostics on stderr. Exit codes: 0 success, 1
//! verification mismatch, 2 usage or input error.

use clap::{Args, Parser, Subcommand};
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use totaldom::families::FamilySpec;
use totaldom::graph::Graph;
use totaldom::verify::{self, SuiteOutcome, VerifyConfig, VerifyReport};
use totaldom::{constructs, families, solver};

#[derive(Parser)]
#[command(name = "totaldom", version, about = "Exact total-domination toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named family graph as edge-list text
    Gen(GenArgs),
    /// Solve a graph: compliance, per-vertex TDD, gamma_t, Gamma_t, TDI, TDR
    Solve(SolveArgs),
    /// Apply a graph operation to one or two graphs
    Ops(OpsArgs),
    /// Run a verification suite against the closed-form predictions
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Family name: path, cycle, complete, complete_bipartite, star, wheel,
    /// book, windmill, kragujevac, petersen, grotzsch, herschel
    family: String,
    /// Integer parameters (kragujevac takes one per branch)
    params: Vec<usize>,
    /// Write to a file instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// Input edge-list file, or `-` for stdin
    #[arg(default_value = "-")]
    input: String,
    /// Print the per-vertex TDD table
    #[arg(long)]
    per_vertex: bool,
    /// Include witness sets in the output
    #[arg(long)]
    witness: bool,
    /// Emit JSON instead of the human-readable report
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV (vertex,tdd,compliant,witness) instead of the report
    #[arg(long)]
    csv: bool,
    /// Solver order cap
    #[arg(long, default_value_t = solver::DEFAULT_MAX_N)]
    max_n: usize,
    /// Worker threads for the enumeration sweep (0 = automatic)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct OpsArgs {
    /// Operation: union, join, composition, corona, cartesian, subdivision,
    /// degree_splitting
    op: String,
    /// First input graph (`-` for stdin)
    input1: String,
    /// Second input graph, for the binary operations
    input2: Option<String>,
    /// Write to a file instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: families, constructs, propositions, conjectures, all
    suite: String,
    /// Path orders to sweep, inclusive, e.g. 2..14
    #[arg(long, default_value = "2..14", value_parser = parse_range)]
    paths: (usize, usize),
    /// Cycle orders to sweep, inclusive, e.g. 3..16
    #[arg(long, default_value = "3..16", value_parser = parse_range)]
    cycles: (usize, usize),
    /// Restrict the families suite to a comma-separated list of family names
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Seed for all randomized choices
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Directory for records.csv and report.json (stdout gets CSV otherwise)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Solver order cap; oversized instances are skipped with a record
    #[arg(long, default_value_t = solver::DEFAULT_MAX_N)]
    max_n: usize,
    /// Worker threads (0 = automatic)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo: usize = a.trim().parse().map_err(|_| format!("bad lower bound `{a}`"))?;
    let hi: usize = b.trim().parse().map_err(|_| format!("bad upper bound `{b}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
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
        Command::Gen(args) => cmd_gen(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Ops(args) => cmd_ops(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn read_graph(input: &str) -> Result<Graph, String> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("reading {input}: {e}"))?
    };
    Graph::parse(&text).map_err(|e| e.to_string())
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("writing {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, String> {
    let spec = FamilySpec::from_cli(&args.family, &args.params).map_err(|e| e.to_string())?;
    let g = families::generate(&spec).map_err(|e| e.to_string())?;
    eprintln!("{spec}: n={}, m={}", g.order(), g.size());
    write_out(args.output.as_deref(), &g.to_edge_list_text())?;
    Ok(ExitCode::SUCCESS)
}

fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool, String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| format!("building thread pool: {e}"))
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode, String> {
    let g = read_graph(&args.input)?;
    let pool = thread_pool(args.jobs)?;
    let result = pool
        .install(|| solver::sweep_minimal_tds(&g, args.max_n))
        .map_err(|e| e.to_string())?;
    if args.json {
        let value = solver::report_json(&result, args.witness);
        println!("{}", serde_json::to_string_pretty(&value).expect("report serializes"));
        return Ok(ExitCode::SUCCESS);
    }
    if args.csv {
        print!("{}", solver::report_csv(&result));
        return Ok(ExitCode::SUCCESS);
    }

    let r = &result.report;
    println!("order {}, size {}", g.order(), g.size());
    println!("gamma_t = {}", r.gamma_t);
    println!("Gamma_t = {}", r.upper_gamma_t);
    println!("delta_td = {}", r.min_tdd);
    println!("Delta_td = {}", r.max_tdd);
    println!("compliant = {}", r.compliant);
    match r.tdi {
        Some(tdi) => println!("TDI = {tdi}"),
        None => {
            let nc: Vec<String> = r
                .non_compliant_vertices()
                .iter()
                .map(|v| v.to_string())
                .collect();
            println!("TDI undefined (non-compliant vertices: {})", nc.join(", "));
        }
    }
    println!("TDR = {}", r.is_tdr);
    if args.per_vertex || args.witness {
        println!("vertex  tdd{}", if args.witness { "  witness" } else { "" });
        for (v, t) in r.per_vertex_tdd.iter().enumerate() {
            let tdd = t.map_or_else(|| "non_compliant".to_string(), |x| x.to_string());
            if args.witness {
                let w = result.certificates[v]
                    .as_ref()
                    .map(|c| c.witness.to_string())
                    .unwrap_or_else(|| "-".to_string());
                println!("{v:>6}  {tdd}  {w}");
            } else {
                println!("{v:>6}  {tdd}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ops(args: OpsArgs) -> Result<ExitCode, String> {
    let g1 = read_graph(&args.input1)?;
    let unary = matches!(args.op.as_str(), "subdivision" | "degree_splitting");
    let result = if unary {
        if args.input2.is_some() {
            return Err(format!("{} takes one input graph", args.op));
        }
        match args.op.as_str() {
            "subdivision" => constructs::subdivision(&g1),
            _ => constructs::degree_splitting(&g1),
        }
    } else {
        let input2 = args
            .input2
            .as_deref()
            .ok_or_else(|| format!("{} takes two input graphs", args.op))?;
        let g2 = read_graph(input2)?;
        match args.op.as_str() {
            "union" => constructs::disjoint_union(&g1, &g2),
            "join" => constructs::join(&g1, &g2),
            "composition" => constructs::composition(&g1, &g2),
            "corona" => constructs::corona(&g1, &g2),
            "cartesian" => constructs::cartesian_product(&g1, &g2),
            other => return Err(format!("unknown operation `{other}`")),
        }
    };
    eprintln!("{}: n={}, m={}", args.op, result.order(), result.size());
    write_out(args.output.as_deref(), &result.to_edge_list_text())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let cfg = VerifyConfig {
        max_n: args.max_n,
        seed: args.seed,
    };
    let paths = args.paths.0..=args.paths.1;
    let cycles = args.cycles.0..=args.cycles.1;
    let only = (!args.only.is_empty()).then_some(args.only.as_slice());
    let pool = thread_pool(args.jobs)?;
    let outcome: SuiteOutcome = pool.install(|| match args.suite.as_str() {
        "families" => Ok(verify::suite_families(paths, cycles, only, &cfg)),
        "constructs" => Ok(verify::suite_constructs(&cfg)),
        "propositions" => Ok(verify::suite_propositions(&cfg)),
        "conjectures" => Ok(verify::suite_conjectures(&cfg)),
        "all" => Ok(verify::suite_all(paths, cycles, &cfg)),
        other => Err(format!("unknown suite `{other}`")),
    })?;

    let csv = verify::records_csv(&outcome.records);
    let report = VerifyReport::new(&args.suite, &cfg, &outcome);
    match &args.out {
        Some(dir) => {
            std::fs::create_dir_all(dir)
                .map_err(|e| format!("creating {}: {e}", dir.display()))?;
            std::fs::write(dir.join("records.csv"), &csv)
                .map_err(|e| format!("writing records.csv: {e}"))?;
            std::fs::write(dir.join("report.json"), report.render_json())
                .map_err(|e| format!("writing report.json: {e}"))?;
            println!(
                "{} records, {} failures, {} counterexamples -> {}",
                outcome.records.len(),
                outcome.failures,
                outcome.counterexamples.len(),
                dir.display()
            );
        }
        None => print!("{csv}"),
    }
    for c in &outcome.counterexamples {
        eprintln!(
            "counterexample: {} {} sample {} ({} {} > {})",
            c.subject,
            c.quantity,
            c.sample,
            c.vertex.map_or_else(|| "graph".into(), |v| format!("vertex {v}")),
            c.graph_value,
            c.subgraph_value
        );
    }
    if outcome.failures > 0 {
        eprintln!("{} verification failure(s)", outcome.failures);
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
