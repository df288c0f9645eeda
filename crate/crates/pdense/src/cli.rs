//! Command-line surface: parse graphs, run the peeling engines and the
//! exact solver, decompose cores, generate benchmark families, and sweep
//! exponents into CSV reports.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{exact_pmean, AlphaProbe, Method};
use crate::families::{generate, FamilySpec};
use crate::graph::{
    components_within, induced_degrees, parse_edge_list, parse_node_set, Graph, NodeSet,
};
use crate::metrics::{density_report, parse_p_list, DensityReport, PValue};
use crate::peel::{core_decomposition, gen_peel, simple_peel, PeelTrace};

#[derive(Parser, Debug)]
#[command(
    name = "pdense",
    version,
    about = "p-mean densest subgraph toolkit: peeling heuristics, exact solver, graph families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Peel a graph and report the best prefix under the given exponent.
    Peel(PeelArgs),
    /// Solve for the optimal set exactly (p >= 1).
    Exact(ExactArgs),
    /// Core decomposition: degeneracy, core sizes, maxcore.
    Kcore(KcoreArgs),
    /// Density metrics for the whole graph or a given node set.
    Stats(StatsArgs),
    /// Generate a benchmark family as an edge list.
    Generate(GenerateArgs),
    /// Run one peel per exponent and emit a CSV (or JSON) table.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    /// Remove the node with the smallest drop of sum d^p.
    Gen,
    /// Remove the node with the smallest degree.
    Simple,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Gen => "gen",
            Algo::Simple => "simple",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Submodular,
    Bruteforce,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(clap::Args, Debug)]
struct PeelArgs {
    /// Edge-list file ("-" for stdin).
    input: String,
    /// Exponent: a number, "inf", or "-inf" (infinite p always runs the
    /// simple engine: at +inf the whole graph is optimal, at -inf
    /// min-degree peeling is exact).
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, value_enum, default_value_t = Algo::Gen)]
    algo: Algo,
    /// Include per-round objectives in the report only for graphs up to
    /// this many nodes.
    #[arg(long, default_value_t = 10_000)]
    full_trace_limit: usize,
    /// Report 0.0 seconds to make output byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

#[derive(clap::Args, Debug)]
struct ExactArgs {
    /// Edge-list file ("-" for stdin).
    input: String,
    /// Finite exponent, at least 1.
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Submodular)]
    method: MethodArg,
    /// Binary-search interval width at which to stop (default: 1/n^2 for
    /// integer p, 1e-9 otherwise).
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    no_timing: bool,
}

#[derive(clap::Args, Debug)]
struct KcoreArgs {
    /// Edge-list file ("-" for stdin).
    input: String,
    /// Also report the k-core for this specific k.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    no_timing: bool,
}

#[derive(clap::Args, Debug)]
struct StatsArgs {
    /// Edge-list file ("-" for stdin).
    input: String,
    /// Exponent for the reported p-mean.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    p: String,
    /// Node-set file (one label per line); defaults to the whole graph.
    #[arg(long)]
    set: Option<PathBuf>,
    #[arg(long)]
    no_timing: bool,
}

#[derive(clap::Args, Debug)]
struct GenerateArgs {
    /// Family name: clique, complete-bipartite, bipartite-cliques, banded,
    /// banded-cliques, erdos-renyi.
    family: String,
    /// Family parameters, in order:
    /// clique SIZE; complete-bipartite A B; bipartite-cliques D COPIES;
    /// banded N K; banded-cliques P K N [COPIES]; erdos-renyi N PROB.
    params: Vec<String>,
    /// Random seed (erdos-renyi only).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the edge list here and print a JSON summary instead.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct SweepArgs {
    /// Edge-list file ("-" for stdin).
    input: String,
    /// Comma- or space-separated exponents, e.g. "-inf,0.5,1,1.5,2".
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    /// Engine for finite exponents (infinite ones always use simple).
    #[arg(long, value_enum, default_value_t = Algo::Gen)]
    algo: Algo,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Worker threads for the sweep (default: all available cores).
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    no_timing: bool,
}

/// Echo of the options a command ran with, embedded in every report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub input_path: Option<String>,
    pub p: Option<String>,
    pub algo: Option<String>,
    pub method: Option<String>,
    pub tol: Option<f64>,
    pub output_format: String,
    pub seed: Option<u64>,
    pub threads: Option<usize>,
    pub no_timing: bool,
}

impl RunConfig {
    fn new(command: &str) -> RunConfig {
        RunConfig {
            command: command.to_string(),
            input_path: None,
            p: None,
            algo: None,
            method: None,
            tol: None,
            output_format: "json".to_string(),
            seed: None,
            threads: None,
            no_timing: false,
        }
    }
}

#[derive(Serialize)]
struct MaxcoreInfo {
    degeneracy: u32,
    size: usize,
    set_labels: Vec<String>,
}

#[derive(Serialize)]
struct PeelReport {
    command: &'static str,
    p: PValue,
    algo: &'static str,
    set_labels: Vec<String>,
    set_size: usize,
    best_objective: f64,
    best_index: usize,
    order_length: usize,
    metrics: DensityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    maxcore: Option<MaxcoreInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prefix_objectives: Option<Vec<Option<f64>>>,
    seconds: f64,
    config_echo: RunConfig,
}

#[derive(Serialize)]
struct ExactReport {
    command: &'static str,
    p: f64,
    method: Method,
    set_labels: Vec<String>,
    set_size: usize,
    best_fp: f64,
    metrics: DensityReport,
    probes: usize,
    alpha_trace: Vec<AlphaProbe>,
    seconds: f64,
    config_echo: RunConfig,
}

#[derive(Serialize)]
struct KcoreReport {
    command: &'static str,
    degeneracy: u32,
    /// Entry k is the number of nodes with core number >= k.
    core_sizes: Vec<usize>,
    maxcore_size: usize,
    maxcore_labels: Vec<String>,
    maxcore_component_sizes: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_core: Option<KCoreInfo>,
    seconds: f64,
    config_echo: RunConfig,
}

#[derive(Serialize)]
struct KCoreInfo {
    k: u32,
    size: usize,
    set_labels: Vec<String>,
}

#[derive(Serialize)]
struct StatsReport {
    command: &'static str,
    p: PValue,
    n: u32,
    m: u64,
    set_size: usize,
    metrics: DensityReport,
    seconds: f64,
    config_echo: RunConfig,
}

#[derive(Serialize)]
struct GenerateReport {
    command: &'static str,
    family: String,
    n: u32,
    m: u64,
    path: String,
    seconds: f64,
    config_echo: RunConfig,
}

#[derive(Serialize)]
struct SweepRow {
    p: PValue,
    algo: &'static str,
    size: usize,
    edge_density: f64,
    avg_degree: f64,
    avg_squared_degree: f64,
    max_degree: u32,
    min_degree: u32,
    /// f_p of the best set; only meaningful (and present) for finite p > 0.
    fp: Option<f64>,
    mp: f64,
    seconds: f64,
}

#[derive(Serialize)]
struct SweepReport {
    command: &'static str,
    rows: Vec<SweepRow>,
    config_echo: RunConfig,
}

/// Parse arguments from the process environment, run, and return the exit
/// code: 0 success, 2 input/config error, 3 numeric non-convergence.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|source| Error::Io {
                path: PathBuf::from("-"),
                source,
            })?;
        return Ok(buf);
    }
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: PathBuf::from(path),
        source,
    })
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(path: &str) -> Result<Graph> {
    Ok(parse_edge_list(&read_input(path)?)?.graph)
}

fn labels_of(g: &Graph, s: &NodeSet) -> Vec<String> {
    s.iter().map(|v| g.label(v).to_string()).collect()
}

fn elapsed(start: Instant, no_timing: bool) -> f64 {
    if no_timing {
        0.0
    } else {
        start.elapsed().as_secs_f64()
    }
}

fn print_json<T: Serialize>(report: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(report)
        .map_err(|e| Error::InvalidConfig(format!("report serialization failed: {e}")))?;
    println!("{text}");
    Ok(())
}

fn execute(command: &Command) -> Result<()> {
    match command {
        Command::Peel(args) => cmd_peel(args),
        Command::Exact(args) => cmd_exact(args),
        Command::Kcore(args) => cmd_kcore(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Sweep(args) => cmd_sweep(args),
    }
}

/// Run the right engine for one exponent. Infinite exponents always peel by
/// degree; the reported algo is what actually ran.
fn peel_once(g: &Graph, p: PValue, algo: Algo) -> Result<(PeelTrace, &'static str)> {
    match p {
        PValue::Finite(v) if algo == Algo::Gen => Ok((gen_peel(g, v)?, "gen")),
        _ => Ok((simple_peel(g, p)?, "simple")),
    }
}

fn cmd_peel(args: &PeelArgs) -> Result<()> {
    let p: PValue = args.p.parse()?;
    let g = load_graph(&args.input)?;
    let start = Instant::now();
    let (trace, algo_ran) = peel_once(&g, p, args.algo)?;
    let seconds = elapsed(start, args.no_timing);
    let metrics = density_report(&g, &trace.best_set, p)?;
    let maxcore = if algo_ran == "simple" && p == PValue::Finite(1.0) {
        let cores = core_decomposition(&g)?;
        Some(MaxcoreInfo {
            degeneracy: cores.degeneracy,
            size: cores.maxcore_set.len(),
            set_labels: labels_of(&g, &cores.maxcore_set),
        })
    } else {
        None
    };
    let prefix_objectives = if g.n() as usize <= args.full_trace_limit {
        Some(trace.prefix_objective.clone())
    } else {
        None
    };
    let mut config_echo = RunConfig::new("peel");
    config_echo.input_path = Some(args.input.clone());
    config_echo.p = Some(p.to_string());
    config_echo.algo = Some(args.algo.name().to_string());
    config_echo.no_timing = args.no_timing;
    print_json(&PeelReport {
        command: "peel",
        p,
        algo: algo_ran,
        set_labels: labels_of(&g, &trace.best_set),
        set_size: trace.best_set.len(),
        best_objective: trace.best_objective,
        best_index: trace.best_index,
        order_length: trace.order.len(),
        metrics,
        maxcore,
        prefix_objectives,
        seconds,
        config_echo,
    })
}

fn cmd_exact(args: &ExactArgs) -> Result<()> {
    let p = match args.p.parse::<PValue>()? {
        PValue::Finite(v) => v,
        other => {
            return Err(Error::InvalidP {
                p: other.to_string(),
                reason: "exact solving requires finite p".to_string(),
            })
        }
    };
    let method = match args.method {
        MethodArg::Submodular => Method::Submodular,
        MethodArg::Bruteforce => Method::BruteForce,
    };
    let g = load_graph(&args.input)?;
    let start = Instant::now();
    let result = exact_pmean(&g, p, method, args.tol)?;
    let seconds = elapsed(start, args.no_timing);
    let metrics = density_report(&g, &result.best_set, PValue::Finite(p))?;
    let mut config_echo = RunConfig::new("exact");
    config_echo.input_path = Some(args.input.clone());
    config_echo.p = Some(p.to_string());
    config_echo.method = Some(
        match method {
            Method::Submodular => "submodular",
            Method::BruteForce => "bruteforce",
        }
        .to_string(),
    );
    config_echo.tol = args.tol;
    config_echo.no_timing = args.no_timing;
    print_json(&ExactReport {
        command: "exact",
        p,
        method,
        set_labels: labels_of(&g, &result.best_set),
        set_size: result.best_set.len(),
        best_fp: result.best_fp,
        metrics,
        probes: result.iterations,
        alpha_trace: result.alpha_trace,
        seconds,
        config_echo,
    })
}

fn cmd_kcore(args: &KcoreArgs) -> Result<()> {
    let g = load_graph(&args.input)?;
    let start = Instant::now();
    let cores = core_decomposition(&g)?;
    let seconds = elapsed(start, args.no_timing);
    let mut core_sizes = vec![0usize; cores.degeneracy as usize + 1];
    for &c in &cores.core_number {
        core_sizes[c as usize] += 1;
    }
    // Suffix sums: entry k counts nodes with core number >= k.
    for k in (0..cores.degeneracy as usize).rev() {
        core_sizes[k] += core_sizes[k + 1];
    }
    let maxcore_component_sizes = components_within(&g, &cores.maxcore_set)
        .iter()
        .map(|c| c.len())
        .collect();
    let k_core = args.k.map(|k| {
        let s = cores.k_core(k);
        KCoreInfo {
            k,
            size: s.len(),
            set_labels: labels_of(&g, &s),
        }
    });
    let mut config_echo = RunConfig::new("kcore");
    config_echo.input_path = Some(args.input.clone());
    config_echo.no_timing = args.no_timing;
    print_json(&KcoreReport {
        command: "kcore",
        degeneracy: cores.degeneracy,
        core_sizes,
        maxcore_size: cores.maxcore_set.len(),
        maxcore_labels: labels_of(&g, &cores.maxcore_set),
        maxcore_component_sizes,
        k_core,
        seconds,
        config_echo,
    })
}

fn cmd_stats(args: &StatsArgs) -> Result<()> {
    let p: PValue = args.p.parse()?;
    let g = load_graph(&args.input)?;
    let set = match &args.set {
        Some(path) => parse_node_set(&g, &read_file(path)?)?,
        None => NodeSet::full(g.n()),
    };
    let start = Instant::now();
    let metrics = density_report(&g, &set, p)?;
    let seconds = elapsed(start, args.no_timing);
    let mut config_echo = RunConfig::new("stats");
    config_echo.input_path = Some(args.input.clone());
    config_echo.p = Some(p.to_string());
    config_echo.no_timing = args.no_timing;
    print_json(&StatsReport {
        command: "stats",
        p,
        n: g.n(),
        m: g.m(),
        set_size: set.len(),
        metrics,
        seconds,
        config_echo,
    })
}

fn parse_family(family: &str, params: &[String], seed: u64) -> Result<FamilySpec> {
    let bad = |what: &str| Error::InvalidFamily(format!("{family}: {what}"));
    let int = |i: usize, name: &str| -> Result<u32> {
        params
            .get(i)
            .ok_or_else(|| bad(&format!("missing parameter {name}")))?
            .parse()
            .map_err(|_| bad(&format!("{name} must be a nonnegative integer")))
    };
    let float = |i: usize, name: &str| -> Result<f64> {
        params
            .get(i)
            .ok_or_else(|| bad(&format!("missing parameter {name}")))?
            .parse()
            .map_err(|_| bad(&format!("{name} must be a number")))
    };
    let expect_len = |n: usize| -> Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            Err(bad(&format!(
                "expected {n} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match family {
        "clique" => {
            expect_len(1)?;
            Ok(FamilySpec::Clique {
                size: int(0, "SIZE")?,
            })
        }
        "complete-bipartite" => {
            expect_len(2)?;
            Ok(FamilySpec::CompleteBipartite {
                a: int(0, "A")?,
                b: int(1, "B")?,
            })
        }
        "bipartite-cliques" => {
            expect_len(2)?;
            Ok(FamilySpec::BipartiteCliques {
                d: int(0, "D")?,
                copies: int(1, "COPIES")?,
            })
        }
        "banded" => {
            expect_len(2)?;
            Ok(FamilySpec::Banded {
                n: int(0, "N")?,
                k: int(1, "K")?,
            })
        }
        "banded-cliques" => {
            if params.len() != 3 && params.len() != 4 {
                return Err(bad("expected parameters P K N [COPIES]"));
            }
            let copies = if params.len() == 4 {
                Some(int(3, "COPIES")?)
            } else {
                None
            };
            Ok(FamilySpec::BandedCliques {
                p: float(0, "P")?,
                k: int(1, "K")?,
                n: int(2, "N")?,
                copies,
            })
        }
        "erdos-renyi" => {
            expect_len(2)?;
            Ok(FamilySpec::ErdosRenyi {
                n: int(0, "N")?,
                prob: float(1, "PROB")?,
                seed,
            })
        }
        other => Err(Error::InvalidFamily(format!(
            "unknown family '{other}' (expected clique, complete-bipartite, \
             bipartite-cliques, banded, banded-cliques, erdos-renyi)"
        ))),
    }
}

fn cmd_generate(args: &GenerateArgs) -> Result<()> {
    let spec = parse_family(&args.family, &args.params, args.seed)?;
    let start = Instant::now();
    let g = generate(&spec)?;
    let edge_list = g.canonical_edge_list();
    match &args.out {
        None => {
            print!("{edge_list}");
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, edge_list).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            let seconds = start.elapsed().as_secs_f64();
            let mut config_echo = RunConfig::new("generate");
            config_echo.seed = Some(args.seed);
            print_json(&GenerateReport {
                command: "generate",
                family: args.family.clone(),
                n: g.n(),
                m: g.m(),
                path: path.display().to_string(),
                seconds,
                config_echo,
            })
        }
    }
}

fn sweep_row(g: &Graph, p: PValue, algo: Algo, no_timing: bool) -> Result<SweepRow> {
    let start = Instant::now();
    let (trace, algo_ran) = peel_once(g, p, algo)?;
    let seconds = elapsed(start, no_timing);
    let s = &trace.best_set;
    let report = density_report(g, s, p)?;
    let deg = induced_degrees(g, s);
    let avg_squared_degree = s
        .iter()
        .map(|v| (deg[v as usize] as f64).powi(2))
        .sum::<f64>()
        / s.len() as f64;
    let fp = match p {
        PValue::Finite(v) if v > 0.0 => report.avg_pth_power_degree,
        _ => None,
    };
    Ok(SweepRow {
        p,
        algo: algo_ran,
        size: s.len(),
        edge_density: report.edge_density,
        avg_degree: report.avg_degree,
        avg_squared_degree,
        max_degree: report.max_degree,
        min_degree: report.min_degree,
        fp,
        mp: report.m_p,
        seconds,
    })
}

fn render_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(
        "p,algo,size,edge_density,avg_degree,avg_squared_degree,max_degree,min_degree,fp,mp,seconds\n",
    );
    for r in rows {
        let fp = r.fp.map(|v| v.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.p,
            r.algo,
            r.size,
            r.edge_density,
            r.avg_degree,
            r.avg_squared_degree,
            r.max_degree,
            r.min_degree,
            fp,
            r.mp,
            r.seconds
        ));
    }
    out
}

fn cmd_sweep(args: &SweepArgs) -> Result<()> {
    let ps = parse_p_list(&args.p)?;
    let g = load_graph(&args.input)?;
    let compute = || -> Result<Vec<SweepRow>> {
        use rayon::prelude::*;
        ps.par_iter()
            .map(|&p| sweep_row(&g, p, args.algo, args.no_timing))
            .collect()
    };
    let rows = match args.threads {
        None => compute()?,
        Some(t) => {
            if t == 0 {
                return Err(Error::InvalidConfig("threads must be positive".to_string()));
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?
                .install(compute)?
        }
    };
    let mut config_echo = RunConfig::new("sweep");
    config_echo.input_path = Some(args.input.clone());
    config_echo.p = Some(args.p.clone());
    config_echo.algo = Some(args.algo.name().to_string());
    config_echo.output_format = match args.format {
        Format::Csv => "csv",
        Format::Json => "json",
    }
    .to_string();
    config_echo.threads = args.threads;
    config_echo.no_timing = args.no_timing;
    match args.format {
        Format::Csv => {
            print!("{}", render_csv(&rows));
            Ok(())
        }
        Format::Json => print_json(&SweepReport {
            command: "sweep",
            rows,
            config_echo,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_parsing_accepts_each_family() {
        let p = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(
            parse_family("clique", &p(&["5"]), 0).unwrap(),
            FamilySpec::Clique { size: 5 }
        );
        assert_eq!(
            parse_family("complete-bipartite", &p(&["2", "3"]), 0).unwrap(),
            FamilySpec::CompleteBipartite { a: 2, b: 3 }
        );
        assert_eq!(
            parse_family("bipartite-cliques", &p(&["4", "2000"]), 0).unwrap(),
            FamilySpec::BipartiteCliques { d: 4, copies: 2000 }
        );
        assert_eq!(
            parse_family("banded", &p(&["200", "8"]), 0).unwrap(),
            FamilySpec::Banded { n: 200, k: 8 }
        );
        assert_eq!(
            parse_family("banded-cliques", &p(&["2", "64", "3200", "200"]), 0).unwrap(),
            FamilySpec::BandedCliques {
                p: 2.0,
                k: 64,
                n: 3200,
                copies: Some(200)
            }
        );
        assert_eq!(
            parse_family("erdos-renyi", &p(&["40", "0.2"]), 7).unwrap(),
            FamilySpec::ErdosRenyi {
                n: 40,
                prob: 0.2,
                seed: 7
            }
        );
        assert!(parse_family("clique", &p(&[]), 0).is_err());
        assert!(parse_family("clique", &p(&["x"]), 0).is_err());
        assert!(parse_family("mystery", &p(&["1"]), 0).is_err());
    }

    #[test]
    fn csv_rendering_is_stable() {
        let rows = vec![SweepRow {
            p: PValue::NegInf,
            algo: "simple",
            size: 3,
            edge_density: 1.0,
            avg_degree: 2.0,
            avg_squared_degree: 4.0,
            max_degree: 2,
            min_degree: 2,
            fp: None,
            mp: 2.0,
            seconds: 0.0,
        }];
        let csv = render_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "p,algo,size,edge_density,avg_degree,avg_squared_degree,max_degree,min_degree,fp,mp,seconds"
        );
        assert_eq!(lines.next().unwrap(), "-inf,simple,3,1,2,4,2,2,,2,0");
        assert!(lines.next().is_none());
    }

    #[test]
    fn cli_parses_representative_command_lines() {
        let cli = Cli::try_parse_from([
            "pdense", "peel", "g.txt", "--p", "2", "--algo", "simple", "--no-timing",
        ])
        .unwrap();
        match cli.command {
            Command::Peel(a) => {
                assert_eq!(a.p, "2");
                assert_eq!(a.algo, Algo::Simple);
                assert!(a.no_timing);
            }
            _ => panic!("wrong command"),
        }
        let cli = Cli::try_parse_from([
            "pdense",
            "sweep",
            "g.txt",
            "--p",
            "-inf,1,2",
            "--format",
            "json",
            "--threads",
            "2",
        ])
        .unwrap();
        match cli.command {
            Command::Sweep(a) => {
                assert_eq!(a.format, Format::Json);
                assert_eq!(a.threads, Some(2));
            }
            _ => panic!("wrong command"),
        }
        assert!(Cli::try_parse_from(["pdense", "peel", "g.txt"]).is_err());
    }
}
