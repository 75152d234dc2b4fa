//! `kedge`: command-line front end for the k-edge colouring solver.
//!
//! Exit codes: 0 success / YES, 1 NO or invalid colouring, 2 usage or IO
//! error, 3 solve timeout.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use kedge_core::bench::{format_csv, format_table, run_bench, BenchConfig};
use kedge_core::colouring::ColouringError;
use kedge_core::decompose::semi_core_edge_bound;
use kedge_core::instances::{
    gen_complete, gen_cycle, gen_few_max_degree, gen_gnp, gen_petersen, gen_star,
};
use kedge_core::io::{read_colouring, read_graph, write_colouring, write_graph};
use kedge_core::solver::solve_traced;
use kedge_core::{
    chromatic_index, Graph, PartialEdgeColouring, SemiCoreDecomposition, SolveReport,
};

const EXIT_NO: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kedge",
    version,
    about = "k-edge colouring via semi-core reduction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph has a proper edge colouring with k colours.
    Solve {
        #[arg(long)]
        k: usize,
        graph: PathBuf,
        /// Write the witness colouring here on YES.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Give up after this many seconds (exit 3).
        #[arg(long)]
        timeout: Option<f64>,
        /// Print one line per extension step to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Compute the chromatic index and its class.
    ChromaticIndex {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a colouring is complete, proper and within 1..=k.
    Verify {
        #[arg(long)]
        k: usize,
        graph: PathBuf,
        colouring: PathBuf,
    },
    /// Print the core / semi-core decomposition statistics.
    Decompose { graph: PathBuf },
    /// Write a generated instance in the graph text format.
    Generate(GenerateArgs),
    /// Time the solver phases over growing instances with a fixed core.
    Bench {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
    },
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    family: Family,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    Complete {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        leaves: usize,
    },
    Petersen,
    /// `p` vertices of degree `k`, all others of smaller degree.
    FewMaxDegree {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Erdős–Rényi G(n, prob).
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        prob: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve {
            k,
            graph,
            out,
            timeout,
            trace,
        } => cmd_solve(&graph, k, out.as_deref(), timeout, trace),
        Command::ChromaticIndex { graph, out } => cmd_chromatic_index(&graph, out.as_deref()),
        Command::Verify {
            k,
            graph,
            colouring,
        } => cmd_verify(&graph, &colouring, k),
        Command::Decompose { graph } => cmd_decompose(&graph),
        Command::Generate(args) => cmd_generate(args),
        Command::Bench {
            k,
            p,
            n,
            seed,
            repeats,
        } => cmd_bench(k, p, n, seed, repeats),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("kedge: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    read_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn save(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn micros(d: Duration) -> String {
    format!("{:.1}", d.as_secs_f64() * 1e6)
}

fn print_report(r: &SolveReport) {
    let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
    println!("{}", if r.colourable { "YES" } else { "NO" });
    println!("delta: {}", r.delta);
    println!("p: {}", r.core_size);
    println!("q: {}", opt(r.semi_core_size));
    println!("semi_core_edges: {}", opt(r.semi_core_edges));
    println!("shortcut: {}", r.shortcut);
    if let Some(nodes) = r.search_nodes {
        println!("search_nodes: {nodes}");
    }
    if let Some(ext) = &r.extension {
        println!(
            "extension: {} vertices, {} case1, {} case2, {} recoloured edges",
            ext.vertices, ext.case1_steps, ext.case2_steps, ext.swapped_edges
        );
    }
    let t = &r.timings;
    println!("t_decompose_us: {}", micros(t.decompose));
    println!("t_semicore_us: {}", micros(t.semicore));
    println!("t_extend_us: {}", micros(t.extend));
    println!("t_total_us: {}", micros(t.total));
}

fn cmd_solve(
    path: &Path,
    k: usize,
    out: Option<&Path>,
    timeout: Option<f64>,
    trace: bool,
) -> Result<ExitCode, String> {
    let g = load_graph(path)?;
    let limit = timeout
        .map(|s| Duration::try_from_secs_f64(s).map_err(|_| format!("invalid timeout {s}")))
        .transpose()?;

    let (tx, rx) = mpsc::channel();
    let worker_graph = g.clone();
    thread::spawn(move || {
        let mut on_step = |ev: &_| {
            if trace {
                eprintln!("{ev}");
            }
        };
        let _ = tx.send(solve_traced(&worker_graph, k, &mut on_step));
    });
    let report = match limit {
        Some(limit) => match rx.recv_timeout(limit) {
            Ok(r) => r,
            Err(mpsc::RecvTimeoutError::Timeout) => {
                eprintln!("kedge: timed out after {}s", limit.as_secs_f64());
                return Ok(ExitCode::from(EXIT_TIMEOUT));
            }
            Err(mpsc::RecvTimeoutError::Disconnected) => {
                return Err("solver thread panicked".into())
            }
        },
        None => rx
            .recv()
            .map_err(|_| "solver thread panicked".to_string())?,
    };

    print_report(&report);
    if let (Some(out), Some(w)) = (out, &report.witness) {
        save(out, &write_colouring(&g, w))?;
    }
    Ok(if report.colourable {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NO)
    })
}

fn cmd_chromatic_index(path: &Path, out: Option<&Path>) -> Result<ExitCode, String> {
    let g = load_graph(path)?;
    let ci = chromatic_index(&g).map_err(|e| e.to_string())?;
    println!("{} (Class {})", ci.value, ci.class());
    if let Some(out) = out {
        save(out, &write_colouring(&g, &ci.witness))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(graph: &Path, colouring: &Path, k: usize) -> Result<ExitCode, String> {
    let g = load_graph(graph)?;
    let text =
        fs::read_to_string(colouring).map_err(|e| format!("{}: {e}", colouring.display()))?;
    let assignment =
        read_colouring(&text, &g).map_err(|e| format!("{}: {e}", colouring.display()))?;
    let c = match PartialEdgeColouring::from_assignment(&g, k, assignment) {
        Ok(c) => c,
        Err(e @ ColouringError::OutOfPalette { .. }) => {
            println!("INVALID: {e}");
            return Ok(ExitCode::from(EXIT_NO));
        }
        Err(e) => return Err(e.to_string()),
    };
    match c.verify_proper(&g, true) {
        Ok(()) => {
            println!("OK");
            Ok(ExitCode::SUCCESS)
        }
        Err(v) => {
            println!("INVALID: {}", v.describe(&g));
            Ok(ExitCode::from(EXIT_NO))
        }
    }
}

fn cmd_decompose(path: &Path) -> Result<ExitCode, String> {
    let g = load_graph(path)?;
    let dec = SemiCoreDecomposition::new(&g);
    println!("n: {}", g.vertex_count());
    println!("m: {}", g.edge_count());
    println!("delta: {}", dec.max_degree);
    println!("p: {}", dec.core_size());
    println!("q: {}", dec.semi_core_size());
    println!(
        "semi_core_edges: {} (bound {})",
        dec.semi_core_edges(),
        semi_core_edge_bound(dec.max_degree, dec.core_size())
    );
    println!("excluded: {}", dec.excluded_order.len());
    println!("core_vertices: {:?}", dec.core_vertices);
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode, String> {
    let seed = args.seed;
    let g = match args.family {
        Family::Complete { n } => gen_complete(n),
        Family::Cycle { n } => gen_cycle(n),
        Family::Star { leaves } => gen_star(leaves),
        Family::Petersen => Ok(gen_petersen()),
        Family::FewMaxDegree { p, k, n } => gen_few_max_degree(p, k, n, seed),
        Family::Random { n, prob } => gen_gnp(n, prob, seed),
    }
    .map_err(|e| e.to_string())?;
    let text = write_graph(&g);
    match args.out {
        Some(out) => save(&out, &text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(
    k: usize,
    p: usize,
    sizes: Vec<usize>,
    seed: u64,
    repeats: usize,
) -> Result<ExitCode, String> {
    let rows = run_bench(&BenchConfig {
        k,
        p,
        sizes,
        seed,
        repeats,
    })
    .map_err(|e| e.to_string())?;
    print!("{}", format_table(&rows));
    println!();
    print!("{}", format_csv(&rows));
    Ok(ExitCode::SUCCESS)
}
