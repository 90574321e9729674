//! Single-source shortest paths by alternating DAG sweeps.
//!
//! The BFS order from the source splits every edge into forward and
//! backward. A forward pass relaxes forward edges in order; a backward pass
//! relaxes backward edges in reverse order. One forward pass followed by
//! `t` backward/forward pairs bounds every distance by the best path with
//! at most `t` more edges than the lightest one.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::order::BfsOrder;
use crate::weight::{ExtDist, Weight};

/// Per-vertex distance upper bounds from a fixed source, optionally with
/// the parent pointer that realized each finite bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistVector<W: Weight> {
    dist: Vec<ExtDist<W>>,
    parent: Option<Vec<Option<usize>>>,
}

impl<W: Weight> DistVector<W> {
    /// `0` at the source, `+inf` elsewhere.
    pub fn from_source(n: usize, source: usize, track_parents: bool) -> Self {
        let mut dist = vec![ExtDist::inf(); n];
        dist[source] = ExtDist::zero();
        DistVector {
            dist,
            parent: track_parents.then(|| vec![None; n]),
        }
    }

    pub fn from_values(dist: Vec<ExtDist<W>>) -> Self {
        DistVector { dist, parent: None }
    }

    #[inline]
    pub fn get(&self, v: usize) -> ExtDist<W> {
        self.dist[v]
    }

    pub fn values(&self) -> &[ExtDist<W>] {
        &self.dist
    }

    pub fn into_values(self) -> Vec<ExtDist<W>> {
        self.dist
    }

    pub fn parents(&self) -> Option<&[Option<usize>]> {
        self.parent.as_deref()
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    #[inline]
    fn relax(&mut self, u: usize, v: usize, w: W) -> bool {
        self.relax_from(self.dist[u], u, v, w)
    }

    /// Relaxes `u -> v` as if `D(u)` were `du`.
    #[inline]
    fn relax_from(&mut self, du: ExtDist<W>, u: usize, v: usize, w: W) -> bool {
        let candidate = du.plus(w);
        if candidate < self.dist[v] {
            self.dist[v] = candidate;
            if let Some(p) = self.parent.as_mut() {
                p[v] = Some(u);
            }
            true
        } else {
            false
        }
    }
}

/// Relaxes forward edges, visiting heads in increasing order position.
/// Returns whether any entry decreased.
pub fn forward_pass<W: Weight>(g: &Graph<W>, ord: &BfsOrder, d: &mut DistVector<W>) -> bool {
    let mut changed = false;
    for &v in ord.order().iter().skip(1) {
        let pv = ord.position(v);
        for (u, w) in g.in_edges(v) {
            if ord.position(u) < pv {
                changed |= d.relax(u, v, w);
            }
        }
    }
    changed
}

/// Relaxes backward edges, visiting heads in decreasing order position.
/// Returns whether any entry decreased.
pub fn backward_pass<W: Weight>(g: &Graph<W>, ord: &BfsOrder, d: &mut DistVector<W>) -> bool {
    let mut changed = false;
    let order = ord.order();
    for &v in order.iter().rev().skip(1) {
        let pv = ord.position(v);
        for (u, w) in g.in_edges(v) {
            if ord.position(u) > pv {
                changed |= d.relax(u, v, w);
            }
        }
    }
    changed
}

/// Outcome of a single-source run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SsspReport<W: Weight> {
    pub dist: DistVector<W>,
    /// Backward/forward pair count for the sweep solver, full edge scans
    /// for Bellman–Ford.
    pub iterations_run: usize,
    /// `None` when the run was too short to decide.
    pub negative_cycle: Option<bool>,
}

/// Stepwise driver for the sweep solver.
///
/// Pass 1 is the initial forward pass; even passes are backward, odd
/// passes after the first are forward.
#[derive(Debug, Clone)]
pub struct Sweeper<'g, W: Weight> {
    graph: &'g Graph<W>,
    order: BfsOrder,
    dist: DistVector<W>,
    passes: usize,
}

impl<'g, W: Weight> Sweeper<'g, W> {
    pub fn new(graph: &'g Graph<W>, source: usize, track_parents: bool) -> Result<Self> {
        let order = BfsOrder::new(graph, source)?;
        Ok(Sweeper {
            graph,
            order,
            dist: DistVector::from_source(graph.n(), source, track_parents),
            passes: 0,
        })
    }

    /// Runs the next pass; returns whether any entry decreased.
    pub fn step(&mut self) -> bool {
        self.passes += 1;
        if self.passes % 2 == 1 {
            forward_pass(self.graph, &self.order, &mut self.dist)
        } else {
            backward_pass(self.graph, &self.order, &mut self.dist)
        }
    }

    pub fn passes(&self) -> usize {
        self.passes
    }

    pub fn order(&self) -> &BfsOrder {
        &self.order
    }

    pub fn dist(&self) -> &DistVector<W> {
        &self.dist
    }

    pub fn into_dist(self) -> DistVector<W> {
        self.dist
    }
}

/// Distance bounds no larger than the shortest `t`+light path lengths.
///
/// For `t >= n - 2` the result is exact on graphs without a reachable
/// negative cycle, and `negative_cycle` is decided by one extra pass pair.
pub fn t_light_sssp<W: Weight>(g: &Graph<W>, source: usize, t: usize) -> Result<SsspReport<W>> {
    t_light_sssp_with(g, source, t, false)
}

pub fn t_light_sssp_with<W: Weight>(
    g: &Graph<W>,
    source: usize,
    t: usize,
    track_parents: bool,
) -> Result<SsspReport<W>> {
    let mut sweeper = Sweeper::new(g, source, track_parents)?;
    sweeper.step();
    for _ in 0..t {
        sweeper.step();
        sweeper.step();
    }
    let negative_cycle = (t >= g.n().saturating_sub(2))
        .then(|| detect_negative_cycle(g, sweeper.order(), sweeper.dist()));
    Ok(SsspReport {
        dist: sweeper.into_dist(),
        iterations_run: t,
        negative_cycle,
    })
}

/// Runs one more backward and forward pass on a copy of `d` and reports
/// whether anything improved.
///
/// Only meaningful when `d` comes from a full run (`t = n - 2`).
pub fn detect_negative_cycle<W: Weight>(g: &Graph<W>, ord: &BfsOrder, d: &DistVector<W>) -> bool {
    let mut probe = DistVector::from_values(d.values().to_vec());
    let a = backward_pass(g, ord, &mut probe);
    let b = forward_pass(g, ord, &mut probe);
    a || b
}

/// How a Bellman–Ford round reads tail distances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BfMode {
    /// Every relaxation in round `k` reads the distances left by round
    /// `k - 1`, so after `k` rounds `D(v)` is exactly the best walk with at
    /// most `k` edges.
    #[default]
    Synchronous,
    /// Relaxations read the current values, so a round may propagate along
    /// several edges.
    InPlace,
}

/// Bellman–Ford scanning edges by ascending tail, then head.
#[derive(Debug, Clone)]
pub struct BellmanFord<'g, W: Weight> {
    graph: &'g Graph<W>,
    dist: DistVector<W>,
    mode: BfMode,
    snapshot: Vec<ExtDist<W>>,
    scans: usize,
}

impl<'g, W: Weight> BellmanFord<'g, W> {
    pub fn new(graph: &'g Graph<W>, source: usize, track_parents: bool) -> Result<Self> {
        Self::with_mode(graph, source, track_parents, BfMode::default())
    }

    pub fn with_mode(
        graph: &'g Graph<W>,
        source: usize,
        track_parents: bool,
        mode: BfMode,
    ) -> Result<Self> {
        if source >= graph.n() {
            return Err(Error::SourceOutOfRange {
                vertex: source,
                n: graph.n(),
            });
        }
        Ok(BellmanFord {
            graph,
            dist: DistVector::from_source(graph.n(), source, track_parents),
            mode,
            snapshot: Vec::new(),
            scans: 0,
        })
    }

    /// One full edge scan; returns whether any entry decreased.
    pub fn scan(&mut self) -> bool {
        self.scans += 1;
        if self.mode == BfMode::Synchronous {
            self.snapshot.clear();
            self.snapshot.extend_from_slice(self.dist.values());
        }
        let mut changed = false;
        for u in 0..self.graph.n() {
            let du = match self.mode {
                BfMode::Synchronous => self.snapshot[u],
                BfMode::InPlace => self.dist.get(u),
            };
            if du.is_inf() {
                continue;
            }
            for (v, w) in self.graph.out_edges(u) {
                changed |= self.dist.relax_from(du, u, v, w);
            }
        }
        changed
    }

    pub fn mode(&self) -> BfMode {
        self.mode
    }

    pub fn scans(&self) -> usize {
        self.scans
    }

    pub fn dist(&self) -> &DistVector<W> {
        &self.dist
    }

    pub fn into_dist(self) -> DistVector<W> {
        self.dist
    }
}

/// `n - 1` scans plus a detection scan.
pub fn bellman_ford<W: Weight>(g: &Graph<W>, source: usize) -> Result<SsspReport<W>> {
    bellman_ford_with(g, source, false)
}

pub fn bellman_ford_with<W: Weight>(
    g: &Graph<W>,
    source: usize,
    track_parents: bool,
) -> Result<SsspReport<W>> {
    let mut bf = BellmanFord::new(g, source, track_parents)?;
    for _ in 0..g.n().saturating_sub(1) {
        bf.scan();
    }
    let iterations_run = bf.scans();
    let negative_cycle = bf.scan();
    Ok(SsspReport {
        dist: bf.into_dist(),
        iterations_run,
        negative_cycle: Some(negative_cycle),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize, i64)]) -> Graph<i64> {
        Graph::new(n, edges).unwrap()
    }

    fn vals(d: &DistVector<i64>) -> Vec<Option<i64>> {
        d.values().iter().map(|x| x.value()).collect()
    }

    const INF: Option<i64> = None;

    #[test]
    fn forward_pass_examples() {
        let g = graph(3, &[(0, 1, 5), (0, 2, 10), (1, 2, 2)]);
        let ord = BfsOrder::new(&g, 0).unwrap();
        let mut d = DistVector::from_source(3, 0, false);
        forward_pass(&g, &ord, &mut d);
        assert_eq!(vals(&d), vec![Some(0), Some(5), Some(7)]);

        let empty = graph(3, &[]);
        let ord = BfsOrder::new(&empty, 0).unwrap();
        let mut d = DistVector::from_values(vec![0.into(), 4.into(), ExtDist::inf()]);
        let before = d.clone();
        assert!(!forward_pass(&empty, &ord, &mut d));
        assert_eq!(d, before);

        let back = graph(3, &[(2, 1, 1)]);
        let ord = BfsOrder::new(&back, 0).unwrap();
        assert_eq!(ord.order(), &[0, 1, 2]);
        let mut d = DistVector::from_source(3, 0, false);
        assert!(!forward_pass(&back, &ord, &mut d));
        assert_eq!(vals(&d), vec![Some(0), INF, INF]);
    }

    #[test]
    fn backward_pass_examples() {
        let g = graph(3, &[(0, 1, 10), (0, 2, 1), (2, 1, 1)]);
        let ord = BfsOrder::new(&g, 0).unwrap();
        let mut d = DistVector::from_values(vec![0.into(), 10.into(), 1.into()]);
        backward_pass(&g, &ord, &mut d);
        assert_eq!(vals(&d), vec![Some(0), Some(2), Some(1)]);

        let fwd_only = graph(3, &[(0, 1, 1), (1, 2, 1)]);
        let ord = BfsOrder::new(&fwd_only, 0).unwrap();
        let mut d = DistVector::from_values(vec![0.into(), 9.into(), 9.into()]);
        assert!(!backward_pass(&fwd_only, &ord, &mut d));

        let back = graph(3, &[(2, 1, -4)]);
        let ord = BfsOrder::new(&back, 0).unwrap();
        let mut d = DistVector::from_source(3, 0, false);
        assert!(!backward_pass(&back, &ord, &mut d));
        assert_eq!(vals(&d), vec![Some(0), INF, INF]);
    }

    #[test]
    fn t_light_small_example() {
        let g = graph(3, &[(0, 1, 10), (0, 2, 1), (2, 1, 1)]);
        let r0 = t_light_sssp(&g, 0, 0).unwrap();
        assert_eq!(vals(&r0.dist), vec![Some(0), Some(10), Some(1)]);
        assert_eq!(r0.iterations_run, 0);
        let r1 = t_light_sssp(&g, 0, 1).unwrap();
        assert_eq!(vals(&r1.dist), vec![Some(0), Some(2), Some(1)]);
        assert_eq!(r1.negative_cycle, Some(false));
    }

    #[test]
    fn short_runs_do_not_claim_cycle_status() {
        let g = graph(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]);
        assert_eq!(t_light_sssp(&g, 0, 1).unwrap().negative_cycle, None);
        assert_eq!(t_light_sssp(&g, 0, 2).unwrap().negative_cycle, Some(false));
    }

    #[test]
    fn bellman_ford_examples() {
        let path = graph(3, &[(0, 1, -1), (1, 2, -1)]);
        let r = bellman_ford(&path, 0).unwrap();
        assert_eq!(vals(&r.dist), vec![Some(0), Some(-1), Some(-2)]);
        assert_eq!(r.negative_cycle, Some(false));
        assert_eq!(r.iterations_run, 2);

        let cyc = graph(2, &[(0, 1, 1), (1, 0, -2)]);
        assert_eq!(bellman_ford(&cyc, 0).unwrap().negative_cycle, Some(true));

        let g = graph(3, &[(0, 1, 10), (0, 2, 1), (2, 1, 1)]);
        assert_eq!(
            vals(&bellman_ford(&g, 0).unwrap().dist),
            vec![Some(0), Some(2), Some(1)]
        );
    }

    #[test]
    fn negative_cycle_detection() {
        let dag = graph(4, &[(0, 1, -3), (1, 2, 5), (0, 3, -1), (3, 2, -7)]);
        let full = t_light_sssp(&dag, 0, 2).unwrap();
        assert_eq!(full.negative_cycle, Some(false));

        let neg = graph(2, &[(0, 1, 1), (1, 0, -2)]);
        let r = t_light_sssp(&neg, 0, 0).unwrap();
        assert_eq!(r.negative_cycle, Some(true));
        let ord = BfsOrder::new(&neg, 0).unwrap();
        assert!(detect_negative_cycle(&neg, &ord, &r.dist));

        let zero = graph(2, &[(0, 1, 1), (1, 0, -1)]);
        assert_eq!(
            t_light_sssp(&zero, 0, 0).unwrap().negative_cycle,
            Some(false)
        );
        assert_eq!(bellman_ford(&zero, 0).unwrap().negative_cycle, Some(false));
    }

    #[test]
    fn unreachable_stays_infinite() {
        let g = graph(4, &[(1, 2, -5), (2, 3, 1)]);
        let r = t_light_sssp(&g, 0, 3).unwrap();
        assert_eq!(vals(&r.dist), vec![Some(0), INF, INF, INF]);
        let r = bellman_ford(&g, 0).unwrap();
        assert_eq!(vals(&r.dist), vec![Some(0), INF, INF, INF]);
    }

    #[test]
    fn parents_witness_distances() {
        let g = graph(4, &[(0, 1, 4), (0, 2, 1), (2, 1, 1), (1, 3, -2), (3, 2, 7)]);
        let r = t_light_sssp_with(&g, 0, 2, true).unwrap();
        let parents = r.dist.parents().unwrap();
        for v in 1..4 {
            let p = parents[v].unwrap();
            let w = g
                .out_edges(p)
                .filter(|e| e.0 == v)
                .map(|e| e.1)
                .min()
                .unwrap();
            assert!(r.dist.get(p).plus(w) <= r.dist.get(v));
        }
        assert_eq!(vals(&r.dist), vec![Some(0), Some(2), Some(1), Some(0)]);
    }

    #[test]
    fn bad_source() {
        let g = graph(2, &[]);
        assert!(t_light_sssp(&g, 2, 0).is_err());
        assert!(bellman_ford(&g, 5).is_err());
    }

    #[test]
    fn bellman_ford_round_modes() {
        let g = graph(3, &[(0, 1, 10), (0, 2, 1), (2, 1, 1)]);
        let mut sync = BellmanFord::new(&g, 0, false).unwrap();
        let mut inplace = BellmanFord::with_mode(&g, 0, false, BfMode::InPlace).unwrap();
        sync.scan();
        inplace.scan();
        assert_eq!(vals(sync.dist()), vec![Some(0), Some(10), Some(1)]);
        assert_eq!(vals(inplace.dist()), vec![Some(0), Some(2), Some(1)]);
        sync.scan();
        assert_eq!(vals(sync.dist()), vec![Some(0), Some(2), Some(1)]);
        assert_eq!(sync.mode(), BfMode::Synchronous);
    }
}
