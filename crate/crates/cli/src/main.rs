use clap::{Args, Parser, Subcommand, ValueEnum};
use rx3_core::decomposition::blocks;
use rx3_core::domination::DEFAULT_EXACT_DOMINATION_LIMIT;
use rx3_core::error::Error as CoreError;
use rx3_core::families::{generate, FamilySpec};
use rx3_core::graph::Graph;
use rx3_core::rainbow::{
    block_composite_coloring, bounds_report, dominating_extension_pipeline, is_k_rainbow,
    kst_coloring_for, rx3_exact, BoundsReport, EdgeColoring, ReportLimits, Rx3Budget, Rx3Result,
    Verdict,
};
use rx3_core::structure::{p5c5_pipeline_bound, structure_report, DEFAULT_PERFECT_LIMIT};
use serde::Serialize;
use std::fs;
use std::process::ExitCode;

/// Build, bound, color and verify 3-rainbow colorings of graphs.
#[derive(Parser)]
#[command(name = "rx3", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph family as an edge list
    Gen(GenArgs),
    /// Evaluate upper and lower bounds, pinning the exact value when free
    Bounds(BoundsArgs),
    /// Exact 3-rainbow index with a witness coloring
    Exact(ExactArgs),
    /// Construct a verified 3-rainbow coloring
    Color(ColorArgs),
    /// Check a coloring file against a graph
    Verify(VerifyArgs),
    /// Induced-pattern and domination-structure report
    Structure(StructureArgs),
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Family {
    Cycle,
    Complete,
    CompleteBipartite,
    ThreeSun,
    #[value(name = "k5_minus_e")]
    K5MinusE,
    Figure1,
    RandomMinDegree,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Vertex count (cycle, complete, random_min_degree)
    #[arg(long)]
    n: Option<usize>,
    /// Small side (complete_bipartite)
    #[arg(long)]
    s: Option<usize>,
    /// Large side (complete_bipartite)
    #[arg(long)]
    t: Option<usize>,
    /// Number of chained 4-cycles (figure1)
    #[arg(long)]
    r: Option<usize>,
    /// Number of bridge edges (figure1)
    #[arg(long)]
    b: Option<usize>,
    /// Minimum degree (random_min_degree)
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the edge list here instead of stdout
    #[arg(long)]
    output: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    input: String,
    #[arg(long)]
    json: bool,
    /// Candidate budget for the exact search
    #[arg(long)]
    budget: Option<u64>,
    /// Size limit for exact search (edges) and exhaustive scans (vertices)
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct ExactArgs {
    #[arg(long)]
    input: String,
    /// Write the witness coloring here instead of stdout
    #[arg(long)]
    output: Option<String>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Connected 2-dominating set extension
    Dominating,
    /// Per-block exact colorings with fresh palettes
    Blocks,
    /// Complete bipartite construction
    Kst,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long)]
    input: String,
    #[arg(long, value_enum)]
    method: Method,
    /// Write the coloring here instead of stdout
    #[arg(long)]
    output: Option<String>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: String,
    #[arg(long)]
    coloring: String,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct StructureArgs {
    #[arg(long)]
    input: String,
    #[arg(long)]
    json: bool,
    /// Vertex limit for the exponential perfect-dominance check
    #[arg(long)]
    limit: Option<usize>,
}

/// Exit codes: 0 success/PASS, 1 verification failure, 2 malformed input,
/// 3 budget or size limit exceeded.
fn exit_code_for(err: &CoreError) -> u8 {
    match err {
        CoreError::TooLarge { .. } | CoreError::BlockTooLarge { .. } => 3,
        CoreError::VerificationFailed(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => run_gen(&args),
        Command::Bounds(args) => run_bounds(&args),
        Command::Exact(args) => run_exact(&args),
        Command::Color(args) => run_color(&args),
        Command::Verify(args) => run_verify(&args),
        Command::Structure(args) => run_structure(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn read_graph(path: &str) -> Result<Graph, CoreError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CoreError::InvalidParameter(format!("cannot read {path}: {e}")))?;
    Graph::parse(&text)
}

fn write_out(path: &Option<String>, content: &str) -> Result<(), CoreError> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| CoreError::InvalidParameter(format!("cannot write {p}: {e}"))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn budget_from(budget: Option<u64>, limit: Option<usize>) -> Rx3Budget {
    let mut b = Rx3Budget::default();
    if let Some(candidates) = budget {
        b.max_candidates = candidates;
    }
    if let Some(edges) = limit {
        b.max_edges = edges;
    }
    b
}

fn limits_from(budget: Option<u64>, limit: Option<usize>) -> ReportLimits {
    ReportLimits {
        exact: budget_from(budget, limit),
        steiner_vertices: limit.unwrap_or(14),
        domination_vertices: limit.unwrap_or(DEFAULT_EXACT_DOMINATION_LIMIT),
    }
}

fn require(opt: Option<usize>, what: &str) -> Result<usize, CoreError> {
    opt.ok_or_else(|| CoreError::InvalidParameter(format!("missing --{what} for this family")))
}

#[derive(Serialize)]
struct GenOutput {
    schema: u32,
    command: &'static str,
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
}

fn run_gen(args: &GenArgs) -> Result<u8, CoreError> {
    let spec = match args.family {
        Family::Cycle => FamilySpec::Cycle {
            n: require(args.n, "n")?,
        },
        Family::Complete => FamilySpec::Complete {
            n: require(args.n, "n")?,
        },
        Family::CompleteBipartite => FamilySpec::CompleteBipartite {
            s: require(args.s, "s")?,
            t: require(args.t, "t")?,
        },
        Family::ThreeSun => FamilySpec::ThreeSun,
        Family::K5MinusE => FamilySpec::K5MinusE,
        Family::Figure1 => FamilySpec::Figure1 {
            r: require(args.r, "r")?,
            b: require(args.b, "b")?,
        },
        Family::RandomMinDegree => FamilySpec::RandomMinDegree {
            n: require(args.n, "n")?,
            delta: require(args.delta, "delta")?,
            seed: args.seed,
        },
    };
    let g = generate(&spec)?;
    if args.json {
        let out = GenOutput {
            schema: 1,
            command: "gen",
            n: g.n(),
            m: g.m(),
            edges: g.edges().to_vec(),
        };
        println!("{}", serde_json::to_string(&out).unwrap());
        if let Some(path) = &args.output {
            write_out(&Some(path.clone()), &g.to_edge_list())?;
        }
    } else {
        write_out(&args.output, &g.to_edge_list())?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct BoundsOutput {
    schema: u32,
    command: &'static str,
    #[serde(flatten)]
    report: BoundsReport,
}

fn run_bounds(args: &BoundsArgs) -> Result<u8, CoreError> {
    let g = read_graph(&args.input)?;
    let report = bounds_report(&g, &limits_from(args.budget, args.limit))?;
    if args.json {
        let out = BoundsOutput {
            schema: 1,
            command: "bounds",
            report,
        };
        println!("{}", serde_json::to_string(&out).unwrap());
    } else {
        println!(
            "graph: n = {}, m = {}, min degree {}",
            report.n, report.m, report.delta
        );
        for b in &report.bounds {
            match b.value {
                Some(v) => println!("  {:<24} <= {:<4} ({})", b.name, v, b.reason),
                None => println!("  {:<24} not applicable ({})", b.name, b.reason),
            }
        }
        println!(
            "  steiner lower bound      >= {} ({})",
            report.steiner_lower, report.steiner_mode
        );
        match report.exact.value {
            Some(v) => println!("  exact rx3 = {} ({})", v, report.exact.status),
            None => println!("  exact rx3 unknown ({})", report.exact.status),
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct ExactOutput {
    schema: u32,
    command: &'static str,
    n: usize,
    m: usize,
    status: String,
    value: Option<u32>,
    lower_bound: u32,
    candidates: u64,
    coloring: Option<Vec<(usize, usize, u32)>>,
}

fn coloring_triples(g: &Graph, c: &EdgeColoring) -> Vec<(usize, usize, u32)> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| (u, v, c.color(e)))
        .collect()
}

fn run_exact(args: &ExactArgs) -> Result<u8, CoreError> {
    let g = read_graph(&args.input)?;
    let budget = budget_from(args.budget, args.limit);
    match rx3_exact(&g, &budget)? {
        Rx3Result::Proved {
            value,
            coloring,
            candidates,
        } => {
            if args.json {
                let out = ExactOutput {
                    schema: 1,
                    command: "exact",
                    n: g.n(),
                    m: g.m(),
                    status: "proved".into(),
                    value: Some(value),
                    lower_bound: value,
                    candidates,
                    coloring: Some(coloring_triples(&g, &coloring)),
                };
                println!("{}", serde_json::to_string(&out).unwrap());
                if let Some(path) = &args.output {
                    write_out(&Some(path.clone()), &coloring.to_file(&g))?;
                }
            } else {
                println!("rx3 = {value} (proved, {candidates} candidate colorings examined)");
                write_out(&args.output, &coloring.to_file(&g))?;
            }
            Ok(0)
        }
        Rx3Result::Unknown {
            lower_bound,
            candidates,
        } => {
            if args.json {
                let out = ExactOutput {
                    schema: 1,
                    command: "exact",
                    n: g.n(),
                    m: g.m(),
                    status: "unknown".into(),
                    value: None,
                    lower_bound,
                    candidates,
                    coloring: None,
                };
                println!("{}", serde_json::to_string(&out).unwrap());
            } else {
                println!("unknown: rx3 >= {lower_bound} (budget exhausted after {candidates} candidates)");
            }
            Ok(3)
        }
    }
}

#[derive(Serialize)]
struct ColorOutput {
    schema: u32,
    command: &'static str,
    method: String,
    colors: u32,
    verified: bool,
    coloring: Vec<(usize, usize, u32)>,
}

fn run_color(args: &ColorArgs) -> Result<u8, CoreError> {
    let g = read_graph(&args.input)?;
    let budget = budget_from(args.budget, args.limit);
    let (coloring, method) = match args.method {
        Method::Dominating => {
            let limits = limits_from(args.budget, args.limit);
            let (_, c) = dominating_extension_pipeline(&g, &limits)?;
            (c, "dominating")
        }
        Method::Blocks => (block_composite_coloring(&g, &budget)?, "blocks"),
        Method::Kst => (kst_coloring_for(&g)?, "kst"),
    };
    // every construction self-verifies before returning
    if args.json {
        let out = ColorOutput {
            schema: 1,
            command: "color",
            method: method.into(),
            colors: coloring.k(),
            verified: true,
            coloring: coloring_triples(&g, &coloring),
        };
        println!("{}", serde_json::to_string(&out).unwrap());
        if let Some(path) = &args.output {
            write_out(&Some(path.clone()), &coloring.to_file(&g))?;
        }
    } else {
        println!(
            "{} colors (verified 3-rainbow, method {method})",
            coloring.k()
        );
        write_out(&args.output, &coloring.to_file(&g))?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct VerifyOutput {
    schema: u32,
    command: &'static str,
    k: usize,
    colors: u32,
    degenerate: bool,
    pass: bool,
    failing_subset: Option<Vec<usize>>,
}

fn run_verify(args: &VerifyArgs) -> Result<u8, CoreError> {
    let g = read_graph(&args.input)?;
    let text = fs::read_to_string(&args.coloring)
        .map_err(|e| CoreError::InvalidParameter(format!("cannot read {}: {e}", args.coloring)))?;
    let coloring = EdgeColoring::from_file(&g, &text)?;
    let verdict = is_k_rainbow(&g, &coloring, args.k)?;
    let degenerate = args.k > g.n();
    let (pass, failing) = match verdict {
        Verdict::Pass => (true, None),
        Verdict::Fail { subset } => (false, Some(subset)),
    };
    if args.json {
        let out = VerifyOutput {
            schema: 1,
            command: "verify",
            k: args.k,
            colors: coloring.k(),
            degenerate,
            pass,
            failing_subset: failing.clone(),
        };
        println!("{}", serde_json::to_string(&out).unwrap());
    } else if pass {
        let note = if degenerate {
            " (k > n: checked the full vertex set)"
        } else {
            ""
        };
        println!("PASS ({} colors){note}", coloring.k());
    } else {
        println!("FAIL");
    }
    if let Some(subset) = failing {
        eprintln!("no rainbow tree for vertex set {subset:?}");
        return Ok(1);
    }
    Ok(0)
}

#[derive(Serialize)]
struct StructureOutput {
    schema: u32,
    command: &'static str,
    #[serde(flatten)]
    report: rx3_core::structure::StructureReport,
    pipeline: Option<PipelineOutput>,
}

#[derive(Serialize)]
struct PipelineOutput {
    bound_sixteenths: usize,
    bound_floor: usize,
    colors_used: u32,
    dominating_set_size: usize,
}

fn run_structure(args: &StructureArgs) -> Result<u8, CoreError> {
    let g = read_graph(&args.input)?;
    let limit = args.limit.unwrap_or(DEFAULT_PERFECT_LIMIT);
    let report = structure_report(&g, limit);
    let pipeline = if report.p5c5_free && g.min_degree() >= 3 && g.is_connected() {
        p5c5_pipeline_bound(&g, &ReportLimits::default())
            .ok()
            .map(|p| PipelineOutput {
                bound_sixteenths: p.bound_sixteenths,
                bound_floor: p.bound_floor,
                colors_used: p.colors_used,
                dominating_set_size: p.dominating_set_size,
            })
    } else {
        None
    };
    if args.json {
        let out = StructureOutput {
            schema: 1,
            command: "structure",
            report,
            pipeline,
        };
        println!("{}", serde_json::to_string(&out).unwrap());
    } else {
        println!(
            "induced P5: {}",
            witness_line(report.has_induced_p5, &report.p5_witness)
        );
        println!(
            "induced C5: {}",
            witness_line(report.has_induced_c5, &report.c5_witness)
        );
        println!("(P5,C5)-free: {}", report.p5c5_free);
        match report.perfect_connected_dominant {
            Some(flag) => println!("perfect connected-dominant: {flag}"),
            None => println!("perfect connected-dominant: skipped (n > {limit})"),
        }
        if let Some(p) = pipeline {
            println!(
                "pipeline: {} colors used, bound {}/16 (floor {}), |D'| = {}",
                p.colors_used, p.bound_sixteenths, p.bound_floor, p.dominating_set_size
            );
        }
        // a block summary helps eyeballing the structure
        if let Ok(d) = blocks(&g) {
            let c = d.class_counts();
            println!(
                "blocks: {} (bridges {}, triangles {}, cycle-or-small {}, large {}), q_max {}",
                d.blocks.len(),
                c.bridge,
                c.triangle,
                c.cycle_or_small,
                c.large_non_cycle,
                d.q_max
            );
        }
    }
    Ok(0)
}

fn witness_line(found: bool, witness: &Option<Vec<usize>>) -> String {
    match (found, witness) {
        (true, Some(w)) => format!("yes {w:?}"),
        _ => "no".into(),
    }
}
