use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dagpaths::bench::{
    echo_path, gen_instance, quality_csv, run_quality_batch, run_timing_experiment, timing_csv,
    GenConfig, GenMode, ALGORITHMS,
};
use dagpaths::sssp::bellman_ford;
use dagpaths::{
    apsp_bidirectional, apsp_large_cycles, apsp_lex_first, apsp_standard_dag, t_light_sssp,
    tree_stats, Error, Graph64, SampleConfig, TreeStats,
};

mod verify;

#[derive(Parser)]
#[command(
    name = "dagpaths",
    version,
    about = "Shortest paths on DAGs and digraphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a random instance.
    Gen(GenArgs),
    /// Single-source distances.
    Sssp(SsspArgs),
    /// All-pairs distances on a DAG.
    Apsp(ApspArgs),
    /// All-pairs distances on a non-negative digraph whose cycles are long.
    Cyclic(CyclicArgs),
    /// Check every solver against the oracles on one instance.
    Verify(VerifyArgs),
    /// Compare per-iteration estimates of the sweep solver and Bellman–Ford.
    BenchQuality(QualityArgs),
    /// Time the DAG solvers.
    BenchTiming(TimingArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Digraph,
    Dag,
    ShiftedDigraph,
}

impl From<ModeArg> for GenMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Digraph => GenMode::Digraph,
            ModeArg::Dag => GenMode::Dag,
            ModeArg::ShiftedDigraph => GenMode::ShiftedDigraph,
        }
    }
}

#[derive(Args)]
struct Weights {
    /// Smallest edge weight.
    #[arg(long, default_value_t = -1000, allow_negative_numbers = true)]
    lo: i64,
    /// Largest edge weight.
    #[arg(long, default_value_t = 1000, allow_negative_numbers = true)]
    hi: i64,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "digraph")]
    mode: ModeArg,
    #[command(flatten)]
    weights: Weights,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SsspArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 0)]
    source: usize,
    /// Iterations of the sweep solver; a full run (n - 2) when omitted.
    #[arg(long, conflicts_with = "bf")]
    t: Option<usize>,
    /// Use Bellman–Ford instead.
    #[arg(long)]
    bf: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Baseline,
    Lex,
    Bidir,
}

#[derive(Args)]
struct ApspArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "lex")]
    algo: Algo,
    /// CSV output; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CyclicArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Lower bound on the length of every cycle.
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 2.0)]
    c: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sampling attempts before giving up.
    #[arg(long, default_value_t = 5)]
    max_retries: usize,
    /// CSV output; a JSON summary is written next to it.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Largest t for the t+light bound check.
    #[arg(long, default_value_t = 4)]
    t: usize,
    #[arg(long, default_value_t = 0)]
    source: usize,
}

#[derive(Args)]
struct QualityArgs {
    /// Vertex counts, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [100usize, 1000])]
    n: Vec<usize>,
    /// Edge probabilities, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [0.1f64, 0.5])]
    p: Vec<f64>,
    /// Instances per (n, p).
    #[arg(long, default_value_t = 10)]
    instances: u64,
    /// Seed of the first instance; later ones count up.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "digraph")]
    mode: ModeArg,
    #[command(flatten)]
    weights: Weights,
    #[arg(long, default_value_t = 0)]
    source: usize,
    /// Iterations recorded per instance.
    #[arg(long, default_value_t = 20)]
    max_iter: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct TimingArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [100usize, 500, 1000])]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [0.1f64, 0.5, 0.8])]
    p: Vec<f64>,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    weights: Weights,
    /// Algorithms, comma separated. The cyclic solver is included by
    /// default only when --lo is non-negative.
    #[arg(long, value_delimiter = ',')]
    algos: Vec<String>,
    #[arg(long)]
    out: PathBuf,
}

struct Failure {
    code: u8,
    message: String,
}

type CmdResult = Result<(), Failure>;

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::VertexOutOfRange { .. }
            | Error::SelfLoop { .. }
            | Error::WeightBound { .. } => 2,
            Error::CycleDetected | Error::NegativeWeight { .. } | Error::SizeLimit { .. } => 3,
            Error::MalformedTree { .. } => 4,
            Error::ResidualCyclic { .. } => 5,
            Error::SourceOutOfRange { .. }
            | Error::InvalidConfig(_)
            | Error::UnknownAlgorithm(_) => 1,
        };
        fail(code, e.to_string())
    }
}

fn read_graph(path: &Path) -> Result<Graph64, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())))?;
    Graph64::parse(&text).map_err(|e| {
        let f = Failure::from(e);
        fail(f.code, format!("{}: {}", path.display(), f.message))
    })
}

fn write_out(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| fail(1, format!("cannot write {}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_echo(csv: &Path, echo: &serde_json::Value) -> CmdResult {
    let text = serde_json::to_string_pretty(echo).expect("json values serialize");
    write_out(Some(&echo_path(csv)), &(text + "\n"))
}

fn gen_config(n: usize, p: f64, seed: u64, mode: GenMode, w: &Weights) -> GenConfig {
    GenConfig {
        weight_lo: w.lo,
        weight_hi: w.hi,
        ..GenConfig::new(n, p, seed, mode)
    }
}

fn cmd_gen(a: GenArgs) -> CmdResult {
    let cfg = gen_config(a.n, a.p, a.seed, a.mode.into(), &a.weights);
    let g = gen_instance(&cfg)?;
    write_out(a.out.as_deref(), &g.to_text())
}

fn cmd_sssp(a: SsspArgs) -> CmdResult {
    let g = read_graph(&a.graph)?;
    let report = if a.bf {
        bellman_ford(&g, a.source)?
    } else {
        let t = a.t.unwrap_or(g.n().saturating_sub(2));
        t_light_sssp(&g, a.source, t)?
    };
    if report.negative_cycle == Some(true) {
        return Err(fail(3, "negative cycle reachable from the source"));
    }
    let cells: Vec<String> = report.dist.values().iter().map(|d| d.to_string()).collect();
    println!("{}", cells.join(", "));
    Ok(())
}

fn stats_line(s: &TreeStats) -> String {
    format!(
        "max leaf = {}, mean leaf = {:.3}, sum indeg*leaf = {}",
        s.max_leaves, s.mean_leaves, s.weighted_leaf_sum
    )
}

fn cmd_apsp(a: ApspArgs) -> CmdResult {
    let g = read_graph(&a.graph)?;
    let (dist, stats) = match a.algo {
        Algo::Baseline => (apsp_standard_dag(&g)?, None),
        Algo::Lex => {
            let r = apsp_lex_first(&g)?;
            (r.dist, Some(r.stats))
        }
        Algo::Bidir => {
            let r = apsp_bidirectional(&g)?;
            let stats = tree_stats(&r.trees, &g);
            eprintln!("direction = {:?}", r.direction);
            (r.dist, Some(stats))
        }
    };
    write_out(a.out.as_deref(), &dist.to_csv())?;
    if let Some(s) = stats {
        // keep stdout clean when it carries the CSV
        if a.out.is_some() {
            println!("{}", stats_line(&s));
        } else {
            eprintln!("{}", stats_line(&s));
        }
    }
    Ok(())
}

fn cmd_cyclic(a: CyclicArgs) -> CmdResult {
    let g = read_graph(&a.graph)?;
    let cfg = SampleConfig {
        d: a.d,
        c: a.c,
        seed: a.seed,
        max_retries: a.max_retries,
    };
    let r = apsp_large_cycles(&g, &cfg)?;
    let summary = serde_json::to_value(r.summary(&cfg)).expect("summary serializes");
    write_out(a.out.as_deref(), &r.dist.to_csv())?;
    match &a.out {
        Some(p) => write_echo(p, &summary),
        None => {
            eprintln!("{summary}");
            Ok(())
        }
    }
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let g = read_graph(&a.graph)?;
    if a.source >= g.n().max(1) {
        return Err(Error::SourceOutOfRange {
            vertex: a.source,
            n: g.n(),
        }
        .into());
    }
    let results = verify::run(&g, a.source, a.t);
    let mut failed = 0;
    for r in &results {
        println!("{r}");
        failed += usize::from(r.is_fail());
    }
    if failed > 0 {
        return Err(fail(4, format!("{failed} properties failed")));
    }
    Ok(())
}

fn cmd_quality(a: QualityArgs) -> CmdResult {
    let mut cfgs = Vec::new();
    for &n in &a.n {
        for &p in &a.p {
            for i in 0..a.instances {
                cfgs.push(gen_config(
                    n,
                    p,
                    a.seed.wrapping_add(i),
                    a.mode.into(),
                    &a.weights,
                ));
            }
        }
    }
    let records = run_quality_batch(&cfgs, a.source, a.max_iter, a.jobs)?;
    write_out(Some(&a.out), &quality_csv(&records))?;
    write_echo(
        &a.out,
        &serde_json::json!({
            "experiment": "quality",
            "n": a.n,
            "p": a.p,
            "instances": a.instances,
            "seed": a.seed,
            "mode": GenMode::from(a.mode),
            "weight_lo": a.weights.lo,
            "weight_hi": a.weights.hi,
            "source": a.source,
            "max_iter": a.max_iter,
        }),
    )
}

fn cmd_timing(a: TimingArgs) -> CmdResult {
    let algos: Vec<&str> = if a.algos.is_empty() {
        ALGORITHMS
            .iter()
            .copied()
            .filter(|&x| x != "cyclic" || a.weights.lo >= 0)
            .collect()
    } else {
        a.algos.iter().map(String::as_str).collect()
    };
    let mut records = Vec::new();
    for &n in &a.n {
        for &p in &a.p {
            let cfg = gen_config(n, p, a.seed, GenMode::Dag, &a.weights);
            records.extend(run_timing_experiment(&cfg, a.trials, &algos)?);
        }
    }
    write_out(Some(&a.out), &timing_csv(&records))?;
    write_echo(
        &a.out,
        &serde_json::json!({
            "experiment": "timing",
            "n": a.n,
            "p": a.p,
            "trials": a.trials,
            "seed": a.seed,
            "weight_lo": a.weights.lo,
            "weight_hi": a.weights.hi,
            "algorithms": algos,
        }),
    )
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.cmd {
        Cmd::Gen(a) => cmd_gen(a),
        Cmd::Sssp(a) => cmd_sssp(a),
        Cmd::Apsp(a) => cmd_apsp(a),
        Cmd::Cyclic(a) => cmd_cyclic(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::BenchQuality(a) => cmd_quality(a),
        Cmd::BenchTiming(a) => cmd_timing(a),
    };
    let _ = std::io::stdout().flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
