//! Differential checks of every solver against the oracles on one graph.

use std::fmt;

use dagpaths::apsp::apsp_lex_first_with;
use dagpaths::bench::girth;
use dagpaths::oracles::{
    ancestors_by_reverse_bfs, floyd_warshall, hop_distances, lex_first_paths_bruteforce,
    t_light_oracle, BRUTE_FORCE_LIMIT,
};
use dagpaths::sssp::Sweeper;
use dagpaths::{
    apsp_bidirectional, apsp_large_cycles, apsp_standard_dag, bellman_ford, t_light_sssp, BfsOrder,
    Closure, DistMatrix64, Error, Graph64, SampleConfig,
};

pub enum Status {
    Pass,
    Fail,
    Skip,
}

pub struct Check {
    name: &'static str,
    status: Status,
    detail: String,
}

impl Check {
    pub fn is_fail(&self) -> bool {
        matches!(self.status, Status::Fail)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "{tag} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn check(name: &'static str, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        status: if ok { Status::Pass } else { Status::Fail },
        detail: detail.into(),
    }
}

fn skip(name: &'static str, why: impl Into<String>) -> Check {
    Check {
        name,
        status: Status::Skip,
        detail: why.into(),
    }
}

fn edge_weight(g: &Graph64, u: usize, v: usize) -> Option<i64> {
    g.out_edges(u)
        .filter(|&(h, _)| h == v)
        .map(|(_, w)| w)
        .min()
}

fn matrix_check(name: &'static str, got: &DistMatrix64, want: &DistMatrix64) -> Check {
    match got.first_difference(want) {
        None => check(name, true, ""),
        Some((u, v)) => check(name, false, format!("differs at ({u},{v})")),
    }
}

pub fn run(g: &Graph64, source: usize, max_t: usize) -> Vec<Check> {
    let n = g.n();
    let mut out = Vec::new();
    let (fw, negative) = floyd_warshall(g);

    if n == 0 {
        out.push(skip("single-source", "empty graph"));
    } else {
        single_source(g, source, max_t, &fw, negative, &mut out);
    }

    if negative {
        out.push(skip("floyd-warshall vs bellman-ford", "negative cycle"));
    } else {
        let bad: Vec<usize> = (0..n)
            .filter(|&s| bellman_ford(g, s).unwrap().dist.values() != fw.row(s))
            .collect();
        out.push(check(
            "floyd-warshall vs bellman-ford",
            bad.is_empty(),
            format!("{n} sources, mismatched {bad:?}"),
        ));
    }

    match Closure::new(g) {
        Ok(closure) => dag_checks(g, &closure, &fw, &mut out),
        Err(Error::CycleDetected) => out.push(skip("dag solvers", "graph has a cycle")),
        Err(e) => out.push(check("dag solvers", false, e.to_string())),
    }

    out.push(cyclic_check(g, &fw));
    out
}

fn single_source(
    g: &Graph64,
    source: usize,
    max_t: usize,
    fw: &DistMatrix64,
    negative: bool,
    out: &mut Vec<Check>,
) {
    let n = g.n();
    let ord = BfsOrder::new(g, source).unwrap();
    out.push(check(
        "bfs levels",
        ord.levels() == hop_distances(g, source).as_slice(),
        "",
    ));

    let mut worse = Vec::new();
    for t in 0..=max_t {
        let d = t_light_sssp(g, source, t).unwrap().dist;
        let oracle = t_light_oracle(g, source, t);
        if d.values().iter().zip(&oracle).any(|(a, b)| a > b) {
            worse.push(t);
        }
    }
    out.push(check(
        "t+light bound",
        worse.is_empty(),
        format!("t = 0..={max_t}, violated at {worse:?}"),
    ));

    let mut sw = Sweeper::new(g, source, false).unwrap();
    let mut prev = sw.dist().values().to_vec();
    let mut rises = 0;
    for _ in 0..(2 * n + 1) {
        sw.step();
        let cur = sw.dist().values();
        rises += cur.iter().zip(&prev).filter(|(a, b)| a > b).count();
        prev = cur.to_vec();
    }
    out.push(check(
        "monotone passes",
        rises == 0,
        format!("{rises} increases"),
    ));

    let full = t_light_sssp(g, source, n.saturating_sub(2)).unwrap();
    let bf = bellman_ford(g, source).unwrap();
    if negative {
        out.push(check(
            "full run",
            n < 2 || full.negative_cycle == bf.negative_cycle,
            format!(
                "negative cycle in graph, reachable per sweep {:?}, per bellman-ford {:?}",
                full.negative_cycle, bf.negative_cycle
            ),
        ));
    } else {
        out.push(check(
            "full run",
            full.dist.values() == bf.dist.values() && bf.dist.values() == fw.row(source),
            "sweeps, bellman-ford and floyd-warshall rows",
        ));
    }
}

fn dag_checks(g: &Graph64, closure: &Closure, fw: &DistMatrix64, out: &mut Vec<Check>) {
    let n = g.n();
    let topo = &closure.topo;
    out.push(check(
        "topological order",
        g.edges()
            .all(|(u, v, _)| topo.position(u) < topo.position(v)),
        "",
    ));

    let want = ancestors_by_reverse_bfs(g);
    let same = (0..n).all(|v| (0..n).all(|u| closure.ancestors.contains(v, u) == want[v][u]));
    out.push(check("ancestor sets", same, ""));

    out.push(matrix_check(
        "baseline apsp",
        &apsp_standard_dag(g).unwrap(),
        fw,
    ));
    let lex = apsp_lex_first_with(g, closure);
    out.push(matrix_check("lex-first apsp", &lex.dist, fw));
    out.push(matrix_check(
        "bidirectional apsp",
        &apsp_bidirectional(g).unwrap().dist,
        fw,
    ));

    let mut broken = 0;
    for u in 0..n {
        for v in 0..n {
            let Some(d) = fw.get(u, v).value() else {
                continue;
            };
            let path = lex.trees.extract_path(u, v).unwrap_or_default();
            let w: Option<i64> = path.windows(2).map(|e| edge_weight(g, e[0], e[1])).sum();
            if path.first() != Some(&u) || path.last() != Some(&v) || w != Some(d) {
                broken += 1;
            }
        }
    }
    out.push(check(
        "tree paths",
        broken == 0,
        format!("{broken} pairs without a matching path"),
    ));

    if n > BRUTE_FORCE_LIMIT {
        out.push(skip(
            "lex-first paths",
            format!("brute force needs n <= {BRUTE_FORCE_LIMIT}"),
        ));
    } else {
        let mut wrong = 0;
        for v in 0..n {
            let brute = lex_first_paths_bruteforce(g, topo, v).unwrap();
            for u in (0..n).filter(|&u| u != v) {
                let path = lex.trees.extract_path(u, v).unwrap_or_default();
                if brute[u].clone().unwrap_or_default() != path {
                    wrong += 1;
                }
            }
        }
        out.push(check(
            "lex-first paths",
            wrong == 0,
            format!("{wrong} pairs differ from brute force"),
        ));
    }

    let leaf_sum = lex.stats.weighted_leaf_sum;
    let splice_bound: u64 = (0..n).map(|v| 1 + closure.ancestors.count(v) as u64).sum();
    out.push(check(
        "work bound",
        lex.counters.candidate_evals <= leaf_sum && lex.counters.splice_steps <= splice_bound,
        format!(
            "evaluations {} <= {leaf_sum}, splice steps {} <= {splice_bound}",
            lex.counters.candidate_evals, lex.counters.splice_steps
        ),
    ));
}

fn cyclic_check(g: &Graph64, fw: &DistMatrix64) -> Check {
    const NAME: &str = "sampling apsp";
    if g.has_negative_weight().is_some() {
        return skip(NAME, "negative edge weights");
    }
    let n = g.n();
    let cfg = SampleConfig {
        d: girth(g).unwrap_or(n).clamp(1, n.max(1)),
        ..SampleConfig::default()
    };
    match apsp_large_cycles(g, &cfg) {
        Ok(r) => matrix_check(NAME, &r.dist, fw),
        Err(Error::ResidualCyclic { attempts }) => {
            skip(NAME, format!("no acyclic residual in {attempts} attempts"))
        }
        Err(e) => check(NAME, false, e.to_string()),
    }
}
