//! Slow, independent reference implementations for differential testing.
//!
//! Nothing here shares relaxation code with the solvers: distances use
//! plain `Option` arithmetic over an edge list.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::DistMatrix;
use crate::order::TopoOrder;
use crate::weight::{ExtDist, Weight};

fn edge_list<W: Weight>(g: &Graph<W>) -> Vec<(usize, usize, W)> {
    g.edges().collect()
}

fn to_ext<W: Weight>(d: Option<W>) -> ExtDist<W> {
    d.map_or_else(ExtDist::inf, ExtDist::finite)
}

fn add<W: Weight>(a: Option<W>, b: Option<W>) -> Option<W> {
    Some(a? + b?)
}

fn min_opt<W: Weight>(a: Option<W>, b: Option<W>) -> Option<W> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Floyd–Warshall with a negative-cycle flag.
///
/// Stops as soon as a diagonal entry turns negative, which keeps every
/// intermediate value a sum of two simple path lengths.
pub fn floyd_warshall<W: Weight>(g: &Graph<W>) -> (DistMatrix<W>, bool) {
    let n = g.n();
    let mut d: Vec<Vec<Option<W>>> = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(W::zero());
    }
    for (u, v, w) in edge_list(g) {
        d[u][v] = min_opt(d[u][v], Some(w));
    }
    let mut negative = false;
    'outer: for k in 0..n {
        for i in 0..n {
            if d[i][k].is_none() {
                continue;
            }
            for j in 0..n {
                let through = add(d[i][k], d[k][j]);
                d[i][j] = min_opt(d[i][j], through);
            }
        }
        if (0..n).any(|i| d[i][i].is_some_and(|x| x < W::zero())) {
            negative = true;
            break 'outer;
        }
    }
    let data = d.into_iter().flatten().map(to_ext).collect();
    (DistMatrix::from_rows(n, data), negative)
}

/// Minimum walk length from a fixed source using at most `k` edges, for
/// `k = 0..=K`.
#[derive(Debug, Clone)]
pub struct LayeredDistTable<W> {
    /// `layers[k][v]`
    layers: Vec<Vec<Option<W>>>,
}

impl<W: Weight> LayeredDistTable<W> {
    /// Synchronous relaxation: layer `k` only reads layer `k - 1`.
    pub fn new(g: &Graph<W>, source: usize, max_edges: usize) -> Self {
        let n = g.n();
        let edges = edge_list(g);
        let mut first = vec![None; n];
        first[source] = Some(W::zero());
        let mut layers = vec![first];
        for _ in 0..max_edges {
            let prev = layers.last().unwrap();
            let mut cur = prev.clone();
            for &(u, v, w) in &edges {
                if let Some(du) = prev[u] {
                    // saturate so that walks around negative cycles stay finite
                    cur[v] = min_opt(cur[v], Some(du.saturating_add(w)));
                }
            }
            layers.push(cur);
        }
        LayeredDistTable { layers }
    }

    pub fn max_edges(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn get(&self, v: usize, k: usize) -> Option<W> {
        self.layers[k.min(self.max_edges())][v]
    }

    pub fn last(&self) -> &[Option<W>] {
        self.layers.last().unwrap()
    }
}

/// Edge-count distances by unweighted Bellman–Ford.
pub fn hop_distances<W: Weight>(g: &Graph<W>, source: usize) -> Vec<Option<usize>> {
    let n = g.n();
    let edges = edge_list(g);
    let mut hops = vec![None; n];
    hops[source] = Some(0usize);
    for _ in 0..n {
        let mut changed = false;
        for &(u, v, _) in &edges {
            if let Some(h) = hops[u] {
                if hops[v].is_none_or(|x| h + 1 < x) {
                    hops[v] = Some(h + 1);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    hops
}

/// Shortest `t`+light walk length from `source`: the best walk with at most
/// `hops(v) + t` edges.
pub fn t_light_oracle<W: Weight>(g: &Graph<W>, source: usize, t: usize) -> Vec<ExtDist<W>> {
    let hops = hop_distances(g, source);
    let k_max = hops.iter().flatten().max().copied().unwrap_or(0) + t;
    let table = LayeredDistTable::new(g, source, k_max);
    (0..g.n())
        .map(|v| to_ext(hops[v].and_then(|h| table.get(v, h + t))))
        .collect()
}

/// Reachability by reverse BFS from every vertex: `result[v][u]` is true
/// when `u != v` reaches `v`.
pub fn ancestors_by_reverse_bfs<W: Weight>(g: &Graph<W>) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut preds = vec![Vec::new(); n];
    for (u, v, _) in edge_list(g) {
        preds[v].push(u);
    }
    (0..n)
        .map(|v| {
            let mut seen = vec![false; n];
            let mut stack = preds[v].clone();
            while let Some(u) = stack.pop() {
                if !seen[u] {
                    seen[u] = true;
                    stack.extend(preds[u].iter().copied());
                }
            }
            seen
        })
        .collect()
}

pub const BRUTE_FORCE_LIMIT: usize = 12;

/// For every ancestor `u` of `v`, the shortest `u -> v` path whose vertex
/// positions read from `v` backwards are lexicographically smallest.
/// Entries for non-ancestors are `None`. Exhaustive; `n <= 12` only.
pub fn lex_first_paths_bruteforce<W: Weight>(
    g: &Graph<W>,
    topo: &TopoOrder,
    v: usize,
) -> Result<Vec<Option<Vec<usize>>>> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut succ = vec![Vec::new(); n];
    for (a, b, w) in edge_list(g) {
        succ[a].push((b, w));
    }

    let mut result = vec![None; n];
    for (u, slot) in result.iter_mut().enumerate() {
        if u == v {
            continue;
        }
        let mut paths = Vec::new();
        let mut stack = vec![u];
        enumerate(&succ, v, W::zero(), &mut stack, &mut paths);
        let Some(best) = paths.iter().map(|p| p.1).min() else {
            continue;
        };
        let key = |p: &Vec<usize>| {
            p.iter()
                .rev()
                .map(|&x| topo.position(x))
                .collect::<Vec<_>>()
        };
        *slot = paths
            .into_iter()
            .filter(|p| p.1 == best)
            .map(|p| p.0)
            .min_by_key(key);
    }
    Ok(result)
}

fn enumerate<W: Weight>(
    succ: &[Vec<(usize, W)>],
    target: usize,
    len: W,
    stack: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, W)>,
) {
    let cur = *stack.last().unwrap();
    if cur == target {
        out.push((stack.clone(), len));
        return;
    }
    for &(next, w) in &succ[cur] {
        if stack.contains(&next) {
            continue;
        }
        stack.push(next);
        enumerate(succ, target, len + w, stack, out);
        stack.pop();
    }
}
