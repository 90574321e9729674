//! Seeded instance generators and the two experiments: per-iteration
//! estimate quality of the sweep solver against Bellman–Ford, and APSP
//! timing on random DAGs.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::apsp::{apsp_bidirectional_with, apsp_lex_first_with, apsp_standard_dag, Closure};
use crate::cyclic::{apsp_large_cycles, SampleConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::DistMatrix;
use crate::oracles::floyd_warshall;
use crate::sssp::{BellmanFord, BfMode, Sweeper};
use crate::weight::ExtDist;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenMode {
    /// Each ordered pair `(u, v)`, `u != v`, independently.
    Digraph,
    /// Each pair `i < j` independently, directed `i -> j`.
    Dag,
    /// Same edge draws as `Digraph`, with weights `b + phi(u) - phi(v)` for a
    /// random potential `phi` and base `b >= 0`. Every cycle is then
    /// non-negative while individual edges can still be negative.
    ShiftedDigraph,
}

impl std::str::FromStr for GenMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "digraph" => Ok(GenMode::Digraph),
            "dag" => Ok(GenMode::Dag),
            "shifted-digraph" => Ok(GenMode::ShiftedDigraph),
            other => Err(Error::InvalidConfig(format!(
                "unknown generator mode {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenConfig {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub weight_lo: i64,
    pub weight_hi: i64,
    pub mode: GenMode,
}

impl GenConfig {
    pub fn new(n: usize, p: f64, seed: u64, mode: GenMode) -> Self {
        GenConfig {
            n,
            p,
            seed,
            weight_lo: -1000,
            weight_hi: 1000,
            mode,
        }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        GenConfig { seed, ..*self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidConfig(format!(
                "p = {} is outside [0, 1]",
                self.p
            )));
        }
        if self.weight_lo > self.weight_hi {
            return Err(Error::InvalidConfig(format!(
                "empty weight range [{}, {}]",
                self.weight_lo, self.weight_hi
            )));
        }
        if self.mode == GenMode::ShiftedDigraph && (self.weight_hi < 0 || self.weight_lo > 0) {
            return Err(Error::InvalidConfig(
                "shifted mode needs a weight range containing 0".into(),
            ));
        }
        Ok(())
    }
}

/// Random G(n, p) instance. Pairs are visited in lexicographic order and a
/// weight is drawn right after each successful edge draw.
pub fn gen_instance(cfg: &GenConfig) -> Result<Graph<i64>> {
    cfg.validate()?;
    let n = cfg.n;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut edges = Vec::new();
    match cfg.mode {
        GenMode::Dag => {
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(cfg.p) {
                        edges.push((i, j, rng.gen_range(cfg.weight_lo..=cfg.weight_hi)));
                    }
                }
            }
        }
        GenMode::Digraph => {
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(cfg.p) {
                        edges.push((u, v, rng.gen_range(cfg.weight_lo..=cfg.weight_hi)));
                    }
                }
            }
        }
        GenMode::ShiftedDigraph => {
            // b in [0, hi/2], phi in [lo/4, hi/4]: b + phi(u) - phi(v) stays in [lo/2, hi]
            let phi: Vec<i64> = (0..n)
                .map(|_| rng.gen_range(cfg.weight_lo / 4..=cfg.weight_hi / 4))
                .collect();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(cfg.p) {
                        let base = rng.gen_range(0..=cfg.weight_hi / 2);
                        edges.push((u, v, base + phi[u] - phi[v]));
                    }
                }
            }
        }
    }
    Graph::new(n, &edges)
}

/// Length of the shortest directed cycle, by BFS from every vertex.
pub fn girth<W: crate::weight::Weight>(g: &Graph<W>) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut hops = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        hops.fill(usize::MAX);
        hops[s] = 0;
        queue.clear();
        queue.push_back(s);
        'bfs: while let Some(u) = queue.pop_front() {
            for (v, _) in g.out_edges(u) {
                if v == s {
                    let len = hops[u] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                    break 'bfs;
                }
                if hops[v] == usize::MAX {
                    hops[v] = hops[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    best
}

/// Parameters for a random DAG with planted vertex-disjoint cycles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlantedConfig {
    pub n: usize,
    /// Edge probability of the underlying DAG.
    pub p: f64,
    pub cycles: usize,
    pub min_len: usize,
    pub max_len: usize,
    pub weight_hi: i64,
    pub seed: u64,
}

impl Default for PlantedConfig {
    fn default() -> Self {
        PlantedConfig {
            n: 40,
            p: 0.1,
            cycles: 3,
            min_len: 10,
            max_len: 12,
            weight_hi: 1000,
            seed: 0,
        }
    }
}

/// A random DAG on `n` vertices plus `cycles` vertex-disjoint directed
/// cycles, weights uniform in `[0, weight_hi]`. The cycles are placed first;
/// a drawn DAG edge is skipped when it would close a cycle with fewer than
/// `min_len` edges, so the result has girth at least `min_len`.
pub fn gen_planted_cycles(cfg: &PlantedConfig) -> Result<Graph<i64>> {
    if cfg.min_len < 2 || cfg.min_len > cfg.max_len || cfg.cycles * cfg.max_len > cfg.n {
        return Err(Error::InvalidConfig(format!(
            "cannot plant {} disjoint cycles of length {}..={} in {} vertices",
            cfg.cycles, cfg.min_len, cfg.max_len, cfg.n
        )));
    }
    if !(0.0..=1.0).contains(&cfg.p) || cfg.weight_hi < 0 {
        return Err(Error::InvalidConfig(
            "bad edge probability or weight bound".into(),
        ));
    }
    let n = cfg.n;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut edges = Vec::new();
    let mut succ = vec![Vec::new(); n];

    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut rest = &perm[..];
    for _ in 0..cfg.cycles {
        let len = rng.gen_range(cfg.min_len..=cfg.max_len);
        let (cycle, tail) = rest.split_at(len);
        for k in 0..len {
            let (u, v) = (cycle[k], cycle[(k + 1) % len]);
            edges.push((u, v, rng.gen_range(0..=cfg.weight_hi)));
            succ[u].push(v);
        }
        rest = tail;
    }

    let mut hops = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for i in 0..n {
        for j in i + 1..n {
            if !rng.gen_bool(cfg.p) {
                continue;
            }
            let w = rng.gen_range(0..=cfg.weight_hi);
            // i -> j closes a cycle of length hops(j, i) + 1
            if within_hops(&succ, j, i, cfg.min_len - 2, &mut hops, &mut queue) {
                continue;
            }
            edges.push((i, j, w));
            succ[i].push(j);
        }
    }
    Graph::new(n, &edges)
}

fn within_hops(
    succ: &[Vec<usize>],
    from: usize,
    to: usize,
    limit: usize,
    hops: &mut [usize],
    queue: &mut VecDeque<usize>,
) -> bool {
    hops.fill(usize::MAX);
    queue.clear();
    hops[from] = 0;
    queue.push_back(from);
    while let Some(u) = queue.pop_front() {
        if u == to {
            return true;
        }
        if hops[u] == limit {
            continue;
        }
        for &v in &succ[u] {
            if hops[v] == usize::MAX {
                hops[v] = hops[u] + 1;
                queue.push_back(v);
            }
        }
    }
    false
}

/// Per-iteration comparison of the sweep solver against Bellman–Ford.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QualityRecord {
    pub n: usize,
    /// Edge probability as printed, kept as text so records stay `Eq`.
    pub p: String,
    pub seed: u64,
    pub iter: usize,
    pub alg1_sharper: usize,
    pub bf_sharper: usize,
    pub equal: usize,
    /// Vertices at their exact distance; `None` unless the instance is
    /// certified free of negative cycles.
    pub alg1_exact: Option<usize>,
    pub bf_exact: Option<usize>,
}

fn count_exact(d: &[ExtDist<i64>], exact: &[ExtDist<i64>]) -> usize {
    d.iter().zip(exact).filter(|(a, b)| a == b).count()
}

/// Runs both solvers side by side for `max_iter` iterations. Iteration 1 is
/// the first forward pass, and every later pass counts as one iteration;
/// for Bellman–Ford an iteration is one full edge scan.
pub fn run_quality_experiment(
    cfg: &GenConfig,
    source: usize,
    max_iter: usize,
) -> Result<Vec<QualityRecord>> {
    if cfg.mode == GenMode::Dag {
        return Err(Error::InvalidConfig(
            "quality experiment needs a digraph mode".into(),
        ));
    }
    let g = gen_instance(cfg)?;
    quality_on_graph(&g, cfg, source, max_iter)
}

pub fn quality_on_graph(
    g: &Graph<i64>,
    cfg: &GenConfig,
    source: usize,
    max_iter: usize,
) -> Result<Vec<QualityRecord>> {
    quality_on_graph_with(g, cfg, source, max_iter, BfMode::Synchronous)
}

pub fn quality_on_graph_with(
    g: &Graph<i64>,
    cfg: &GenConfig,
    source: usize,
    max_iter: usize,
    bf_mode: BfMode,
) -> Result<Vec<QualityRecord>> {
    let (fw, negative) = floyd_warshall(g);
    let exact = (!negative).then(|| fw.row(source.min(g.n().saturating_sub(1))).to_vec());
    let mut sweeper = Sweeper::new(g, source, false)?;
    let mut bf = BellmanFord::with_mode(g, source, false, bf_mode)?;
    let p = cfg.p.to_string();
    let mut out = Vec::with_capacity(max_iter);
    for iter in 1..=max_iter {
        sweeper.step();
        bf.scan();
        let a = sweeper.dist().values();
        let b = bf.dist().values();
        let alg1_sharper = a.iter().zip(b).filter(|(x, y)| x < y).count();
        let bf_sharper = a.iter().zip(b).filter(|(x, y)| x > y).count();
        out.push(QualityRecord {
            n: g.n(),
            p: p.clone(),
            seed: cfg.seed,
            iter,
            alg1_sharper,
            bf_sharper,
            equal: g.n() - alg1_sharper - bf_sharper,
            alg1_exact: exact.as_ref().map(|e| count_exact(a, e)),
            bf_exact: exact.as_ref().map(|e| count_exact(b, e)),
        });
    }
    Ok(out)
}

/// Quality runs over several configurations, sorted by `(n, p, seed, iter)`.
pub fn run_quality_batch(
    cfgs: &[GenConfig],
    source: usize,
    max_iter: usize,
    jobs: usize,
) -> Result<Vec<QualityRecord>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let runs: Vec<Result<Vec<QualityRecord>>> = pool.install(|| {
        cfgs.par_iter()
            .map(|c| run_quality_experiment(c, source, max_iter))
            .collect()
    });
    let mut all = Vec::new();
    for r in runs {
        all.extend(r?);
    }
    all.sort_by(|a, b| {
        (a.n, a.p.parse::<f64>().unwrap_or(0.0), a.seed, a.iter)
            .partial_cmp(&(b.n, b.p.parse::<f64>().unwrap_or(0.0), b.seed, b.iter))
            .unwrap()
    });
    Ok(all)
}

/// First iteration whose exact count reaches `n`, per solver.
pub fn first_exact_iteration(records: &[QualityRecord]) -> (Option<usize>, Option<usize>) {
    let first = |pick: fn(&QualityRecord) -> Option<usize>| {
        records
            .iter()
            .find(|r| pick(r) == Some(r.n))
            .map(|r| r.iter)
    };
    (first(|r| r.alg1_exact), first(|r| r.bf_exact))
}

pub const QUALITY_HEADER: &str = "n,p,seed,iter,alg1_sharper,bf_sharper,equal,alg1_exact,bf_exact";

pub fn quality_csv(records: &[QualityRecord]) -> String {
    let na = |x: Option<usize>| x.map_or_else(|| "NA".to_string(), |v| v.to_string());
    let mut s = String::from(QUALITY_HEADER);
    s.push('\n');
    for r in records {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            r.n,
            r.p,
            r.seed,
            r.iter,
            r.alg1_sharper,
            r.bf_sharper,
            r.equal,
            na(r.alg1_exact),
            na(r.bf_exact)
        );
    }
    s
}

pub const ALGORITHMS: [&str; 4] = ["baseline", "alg2", "alg2bidir", "cyclic"];

/// Extra row reporting the excluded closure time of the lex-first solvers.
pub const CLOSURE_ROW: &str = "closure";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimingRecord {
    pub n: usize,
    pub p: f64,
    pub algorithm: String,
    pub trials: usize,
    pub mean_ms: f64,
    pub stddev_ms: f64,
}

/// Seed of trial `i`.
pub fn trial_seed(base: u64, i: usize) -> u64 {
    base.wrapping_add(i as u64)
}

fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn ms_since(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn check_same(alg: &str, seed: u64, got: &DistMatrix<i64>, want: &DistMatrix<i64>) -> Result<()> {
    match got.first_difference(want) {
        None => Ok(()),
        Some((u, v)) => Err(Error::InvalidConfig(format!(
            "{alg} disagrees with baseline at ({u},{v}) on seed {seed}"
        ))),
    }
}

/// Times each named algorithm over `trials` fresh DAGs and cross-checks
/// every result against the baseline. Trials run sequentially so timings do
/// not compete for cores.
pub fn run_timing_experiment(
    cfg: &GenConfig,
    trials: usize,
    algorithms: &[&str],
) -> Result<Vec<TimingRecord>> {
    if cfg.mode != GenMode::Dag {
        return Err(Error::InvalidConfig(
            "timing experiment needs mode dag".into(),
        ));
    }
    if trials == 0 {
        return Err(Error::InvalidConfig("trials must be at least 1".into()));
    }
    for a in algorithms {
        if !ALGORITHMS.contains(a) {
            return Err(Error::UnknownAlgorithm(a.to_string()));
        }
    }
    if algorithms.contains(&"cyclic") && cfg.weight_lo < 0 {
        return Err(Error::InvalidConfig(
            "the cyclic solver needs non-negative weights (set weight_lo >= 0)".into(),
        ));
    }

    let mut times: Vec<Vec<f64>> = vec![Vec::with_capacity(trials); algorithms.len()];
    let mut closure_times = Vec::new();
    for i in 0..trials {
        let seed = trial_seed(cfg.seed, i);
        let g = gen_instance(&cfg.with_seed(seed))?;

        let t = Instant::now();
        let baseline = apsp_standard_dag(&g)?;
        let baseline_ms = ms_since(t);

        let needs_closure = algorithms.iter().any(|a| a.starts_with("alg2"));
        let mut closures = None;
        if needs_closure {
            let t = Instant::now();
            let reversed = g.reversed();
            let fc = Closure::new(&g)?;
            let rc = Closure::new(&reversed)?;
            closure_times.push(ms_since(t));
            closures = Some((reversed, fc, rc));
        }

        for (slot, &alg) in algorithms.iter().enumerate() {
            let (ms, dist) = match alg {
                "baseline" => (baseline_ms, None),
                "alg2" => {
                    let (_, fc, _) = closures.as_ref().unwrap();
                    let t = Instant::now();
                    let r = apsp_lex_first_with(&g, fc);
                    (ms_since(t), Some(r.dist))
                }
                "alg2bidir" => {
                    let (rev, fc, rc) = closures.as_ref().unwrap();
                    let t = Instant::now();
                    let r = apsp_bidirectional_with(&g, rev, fc, rc);
                    (ms_since(t), Some(r.dist))
                }
                _ => {
                    let sc = SampleConfig {
                        d: g.n().max(1),
                        seed,
                        ..SampleConfig::default()
                    };
                    let t = Instant::now();
                    let r = apsp_large_cycles(&g, &sc)?;
                    (ms_since(t), Some(r.dist))
                }
            };
            if let Some(d) = dist {
                check_same(alg, seed, &d, &baseline)?;
            }
            times[slot].push(ms);
        }
    }

    let mut out: Vec<TimingRecord> = algorithms
        .iter()
        .zip(&times)
        .map(|(alg, ts)| {
            let (mean_ms, stddev_ms) = mean_std(ts);
            TimingRecord {
                n: cfg.n,
                p: cfg.p,
                algorithm: alg.to_string(),
                trials,
                mean_ms,
                stddev_ms,
            }
        })
        .collect();
    if !closure_times.is_empty() {
        let (mean_ms, stddev_ms) = mean_std(&closure_times);
        out.push(TimingRecord {
            n: cfg.n,
            p: cfg.p,
            algorithm: CLOSURE_ROW.into(),
            trials,
            mean_ms,
            stddev_ms,
        });
    }
    Ok(out)
}

pub const TIMING_HEADER: &str = "n,p,algorithm,trials,mean_ms,stddev_ms";

pub fn timing_csv(records: &[TimingRecord]) -> String {
    let mut s = String::from(TIMING_HEADER);
    s.push('\n');
    for r in records {
        let _ = writeln!(
            s,
            "{},{},{},{},{:.4},{:.4}",
            r.n, r.p, r.algorithm, r.trials, r.mean_ms, r.stddev_ms
        );
    }
    s
}

/// `out.csv` -> `out.json`, where the config echo goes.
pub fn echo_path(csv: &Path) -> PathBuf {
    csv.with_extension("json")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_generators() {
        let g = gen_instance(&GenConfig::new(5, 0.0, 1, GenMode::Digraph)).unwrap();
        assert_eq!(g.m(), 0);
        let g = gen_instance(&GenConfig::new(4, 1.0, 1, GenMode::Dag)).unwrap();
        assert_eq!(g.m(), 6);
        assert!(g
            .edges()
            .all(|(u, v, w)| u < v && (-1000..=1000).contains(&w)));
        let g = gen_instance(&GenConfig::new(4, 1.0, 1, GenMode::Digraph)).unwrap();
        assert_eq!(g.m(), 12);
        assert!(gen_instance(&GenConfig::new(4, 1.5, 1, GenMode::Dag)).is_err());
    }

    #[test]
    fn generation_is_reproducible() {
        let c = GenConfig::new(30, 0.3, 42, GenMode::Digraph);
        assert_eq!(
            gen_instance(&c).unwrap().to_text(),
            gen_instance(&c).unwrap().to_text()
        );
        assert_ne!(
            gen_instance(&c).unwrap().to_text(),
            gen_instance(&c.with_seed(43)).unwrap().to_text()
        );
    }

    #[test]
    fn shifted_digraphs_have_no_negative_cycle() {
        for seed in 0..20 {
            let g = gen_instance(&GenConfig::new(20, 0.5, seed, GenMode::ShiftedDigraph)).unwrap();
            assert!(g.edges().all(|(_, _, w)| (-500..=1000).contains(&w)));
            assert!(g.has_negative_weight().is_some());
            assert!(!floyd_warshall(&g).1);
        }
    }

    #[test]
    fn edge_count_is_binomial() {
        // m ~ Bin(4950, 0.4): mean 1980, sigma ~ 34.5
        let c = GenConfig::new(100, 0.4, 0, GenMode::Dag);
        let mean = (0..100)
            .map(|s| gen_instance(&c.with_seed(s)).unwrap().m() as f64)
            .sum::<f64>()
            / 100.0;
        let sigma = (4950.0f64 * 0.4 * 0.6).sqrt();
        assert!((mean - 1980.0).abs() <= 4.0 * sigma / 10.0, "mean {mean}");
        let single = gen_instance(&c).unwrap().m() as f64;
        assert!((single - 1980.0).abs() <= 4.0 * sigma);
    }

    #[test]
    fn girth_examples() {
        let g = Graph::new(3, &[(0, 1, 1i64), (1, 2, 1)]).unwrap();
        assert_eq!(girth(&g), None);
        let g = Graph::new(
            4,
            &[(0, 1, 1i64), (1, 2, 1), (2, 3, 1), (3, 0, 1), (2, 0, 1)],
        )
        .unwrap();
        assert_eq!(girth(&g), Some(3));
    }

    #[test]
    fn planted_cycles() {
        for seed in 0..5 {
            let g = gen_planted_cycles(&PlantedConfig {
                seed,
                ..PlantedConfig::default()
            })
            .unwrap();
            assert!(girth(&g).unwrap() >= 10);
            assert!(g.has_negative_weight().is_none());
        }
    }

    #[test]
    fn quality_on_edgeless_graph() {
        let c = GenConfig::new(6, 0.0, 0, GenMode::Digraph);
        let r = run_quality_experiment(&c, 0, 3).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.iter().all(|q| q.equal == 6 && q.alg1_exact == Some(6)));
    }

    #[test]
    fn quality_small_example() {
        let g = Graph::new(3, &[(0, 1, 10i64), (0, 2, 1), (2, 1, 1)]).unwrap();
        let c = GenConfig::new(3, 0.0, 0, GenMode::Digraph);
        let r = quality_on_graph(&g, &c, 0, 2).unwrap();
        // both hold [0, 10, 1] after iteration 1 and [0, 2, 1] after 2
        assert_eq!(
            (r[0].equal, r[0].alg1_exact, r[0].bf_exact),
            (3, Some(2), Some(2))
        );
        assert_eq!(
            (r[1].equal, r[1].alg1_exact, r[1].bf_exact),
            (3, Some(3), Some(3))
        );
        assert_eq!(first_exact_iteration(&r), (Some(2), Some(2)));

        let r = quality_on_graph_with(&g, &c, 0, 2, BfMode::InPlace).unwrap();
        assert_eq!((r[0].alg1_sharper, r[0].bf_sharper, r[0].equal), (0, 1, 2));
        for q in &r {
            assert_eq!(q.alg1_sharper + q.bf_sharper + q.equal, 3);
        }
    }

    #[test]
    fn quality_csv_layout() {
        let g = Graph::new(2, &[(1, 0, -1i64), (0, 1, -1)]).unwrap();
        let c = GenConfig::new(2, 0.0, 9, GenMode::Digraph);
        let csv = quality_csv(&quality_on_graph(&g, &c, 0, 1).unwrap());
        assert_eq!(csv.lines().next(), Some(QUALITY_HEADER));
        assert!(csv.lines().nth(1).unwrap().starts_with("2,0,9,1,"));
        assert!(csv.lines().nth(1).unwrap().ends_with(",NA,NA"));
    }

    #[test]
    fn timing_on_edgeless_dag() {
        let mut c = GenConfig::new(5, 0.0, 0, GenMode::Dag);
        c.weight_lo = 0;
        let r = run_timing_experiment(&c, 1, &ALGORITHMS).unwrap();
        assert_eq!(r.len(), 5);
        assert!(r
            .iter()
            .all(|t| t.trials == 1 && t.stddev_ms == 0.0 && t.mean_ms >= 0.0));
        assert!(timing_csv(&r).starts_with(TIMING_HEADER));
        assert!(matches!(
            run_timing_experiment(&c, 1, &["fastest"]),
            Err(Error::UnknownAlgorithm(_))
        ));
    }

    #[test]
    fn timing_cross_checks_random_dags() {
        let c = GenConfig::new(40, 0.3, 5, GenMode::Dag);
        let r = run_timing_experiment(&c, 3, &["baseline", "alg2", "alg2bidir"]).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r[3].algorithm, CLOSURE_ROW);
    }
}
