//! Output-sensitive APSP on DAGs via lexicographically-first shortest-path
//! trees.
//!
//! Vertices are processed in topological order. For vertex `i`, its
//! ancestors `k` are visited in increasing topological position; an ancestor
//! already in the tree into `i` is skipped, otherwise the best direct
//! predecessor `j` of `i` is selected (smallest position on ties) and the
//! missing prefix of the path `k -> ... -> j -> i` is copied from the tree
//! into `j`. Only leaves of the final tree trigger a selection, so the work
//! is bounded by `sum_v indeg(v) * |leaf(T_v)|` plus the closure.

use serde::Serialize;

use super::trees::{tree_stats, TreeSet, TreeStats, ABSENT};
use super::{Closure, PositionCsr};
use crate::error::Result;
use crate::graph::Graph;
use crate::matrix::DistMatrix;
use crate::order::AncestorSets;
use crate::weight::{ExtDist, Weight};

/// Instrumentation of one lex-first run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct WorkCounters {
    /// Ancestors visited by the inner loop, including skipped ones.
    pub ancestors_scanned: u64,
    /// Predecessor selections, i.e. ancestors not yet in the tree.
    pub selections: u64,
    /// Candidate predecessors evaluated across all selections. Predecessors
    /// topologically before the ancestor are never reached from it and are
    /// skipped.
    pub candidate_evals: u64,
    /// Tree entries written by the splice, including the final edge.
    pub splice_steps: u64,
}

impl WorkCounters {
    pub fn total(&self) -> u64 {
        self.ancestors_scanned + self.candidate_evals + self.splice_steps
    }
}

/// Resumable lex-first solver: each [`step`](Self::step) processes one
/// vertex of the topological order.
pub struct LexFirstRun<'a, W: Weight> {
    n: usize,
    ancestors: &'a AncestorSets,
    preds: PositionCsr<W>,
    /// Row-major by topological position: `dist[k * n + i]` is `dist(k, i)`.
    dist: Vec<ExtDist<W>>,
    next: Vec<Option<Box<[u32]>>>,
    cursor: usize,
    order: Vec<usize>,
    position: Vec<usize>,
    counters: WorkCounters,
    check_overlap: bool,
}

impl<'a, W: Weight> LexFirstRun<'a, W> {
    pub fn new(g: &Graph<W>, closure: &'a Closure) -> Self {
        let n = g.n();
        let topo = &closure.topo;
        let mut dist = vec![ExtDist::inf(); n * n];
        for p in 0..n {
            dist[p * n + p] = ExtDist::zero();
        }
        LexFirstRun {
            n,
            ancestors: &closure.ancestors,
            preds: PositionCsr::new(g, topo),
            dist,
            next: vec![None; n],
            cursor: topo.source_count(),
            order: topo.order().to_vec(),
            position: topo.positions().to_vec(),
            counters: WorkCounters::default(),
            check_overlap: cfg!(debug_assertions) && n <= 128,
        }
    }

    /// Enables or disables the tree-overlap assertion made after every
    /// splice that stops at a vertex already in the tree.
    pub fn set_overlap_check(&mut self, on: bool) {
        self.check_overlap = on;
    }

    pub fn is_done(&self) -> bool {
        self.cursor >= self.n
    }

    pub fn counters(&self) -> WorkCounters {
        self.counters
    }

    /// Builds the tree into the vertex at the next topological position.
    pub fn step(&mut self) {
        if self.is_done() {
            return;
        }
        let i = self.cursor;
        self.cursor += 1;
        let n = self.n;
        let (pred_pos, pred_w) = self.preds.preds(i);
        let mut next_i = vec![ABSENT; n].into_boxed_slice();
        let c = &mut self.counters;

        for k in self.ancestors.positions_of(i) {
            c.ancestors_scanned += 1;
            if next_i[k] != ABSENT {
                continue;
            }
            c.selections += 1;

            // predecessors before k cannot be reached from k
            let from = pred_pos.partition_point(|&p| (p as usize) < k);
            let (j, best_w) = select_pred(
                &self.dist[k * n..(k + 1) * n],
                &pred_pos[from..],
                &pred_w[from..],
            );
            c.candidate_evals += (pred_pos.len() - from) as u64;

            let mut cur = k;
            if cur != j {
                let next_j = self.next[j]
                    .as_deref()
                    .expect("an ancestor of j exists, so its tree does");
                while cur != j && next_i[cur] == ABSENT {
                    c.splice_steps += 1;
                    self.dist[cur * n + i] = self.dist[cur * n + j].plus_path(best_w);
                    next_i[cur] = next_j[cur];
                    cur = next_i[cur] as usize;
                }
                if self.check_overlap && cur != j {
                    assert_overlap(&next_i, next_j, cur, j, i);
                }
            }
            if next_i[j] == ABSENT {
                c.splice_steps += 1;
                self.dist[j * n + i] = ExtDist::finite(best_w);
                next_i[j] = i as u32;
            }
        }
        self.next[i] = Some(next_i);
    }

    pub fn run(&mut self) {
        while !self.is_done() {
            self.step();
        }
    }

    /// Distances by vertex id.
    pub fn dist_matrix(&self) -> DistMatrix<W> {
        let n = self.n;
        let mut data = vec![ExtDist::inf(); n * n];
        for (u, out) in data.chunks_exact_mut(n.max(1)).enumerate().take(n) {
            let pu = self.position[u];
            for (p, &d) in self.dist[pu * n..(pu + 1) * n].iter().enumerate() {
                out[self.order[p]] = d;
            }
        }
        DistMatrix::from_rows(n, data)
    }

    pub fn into_trees(self) -> TreeSet {
        TreeSet::new(self.order, self.position, self.next)
    }
}

/// The predecessor `j` minimizing `row_k[j] + w(j, i)`, smallest position on
/// ties, with the weight of its edge.
#[inline]
fn select_pred<W: Weight>(row_k: &[ExtDist<W>], pred_pos: &[u32], pred_w: &[W]) -> (usize, W) {
    let pred_w = &pred_w[..pred_pos.len()];
    let inf = W::max_value();
    let mut best = inf;
    let mut best_at = 0;
    // raw integers and a wrapping index: the `ExtDist` comparison and checked
    // iterator arithmetic slow this loop down in test builds
    let mut at = 0usize;
    while at < pred_pos.len() {
        let d = row_k[pred_pos[at] as usize].raw();
        let cand = if d == inf {
            inf
        } else {
            d.wrapping_add(&pred_w[at])
        };
        if cand < best {
            best = cand;
            best_at = at;
        }
        at = at.wrapping_add(1);
    }
    debug_assert!(best != inf, "ancestor without a finite route");
    (pred_pos[best_at] as usize, pred_w[best_at])
}

/// The tree path from `from` into `i` must coincide with the tree path into
/// `j` followed by the edge `(j, i)`.
fn assert_overlap(next_i: &[u32], next_j: &[u32], from: usize, j: usize, i: usize) {
    let mut a = from;
    let mut b = from;
    loop {
        if b == j {
            assert_eq!(next_i[a] as usize, i, "tree into {i} diverges after {j}");
            return;
        }
        assert_eq!(
            next_i[a], next_j[b],
            "tree into {i} diverges at position {a}"
        );
        a = next_i[a] as usize;
        b = next_j[b] as usize;
    }
}

/// Output of the lex-first solver.
#[derive(Debug, Clone)]
pub struct LexFirstApsp<W: Weight> {
    pub dist: DistMatrix<W>,
    pub trees: TreeSet,
    pub stats: TreeStats,
    pub counters: WorkCounters,
}

/// All-pairs shortest paths of a DAG together with its lex-first trees.
pub fn apsp_lex_first<W: Weight>(g: &Graph<W>) -> Result<LexFirstApsp<W>> {
    let closure = Closure::new(g)?;
    Ok(apsp_lex_first_with(g, &closure))
}

/// As [`apsp_lex_first`], reusing a precomputed closure.
pub fn apsp_lex_first_with<W: Weight>(g: &Graph<W>, closure: &Closure) -> LexFirstApsp<W> {
    let mut run = LexFirstRun::new(g, closure);
    run.run();
    let dist = run.dist_matrix();
    let counters = run.counters();
    let trees = run.into_trees();
    let stats = tree_stats(&trees, g);
    LexFirstApsp {
        dist,
        trees,
        stats,
        counters,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Trees into each vertex of the input.
    Forward,
    /// Trees into each vertex of the reversed input, i.e. trees out of
    /// each vertex of the input.
    Reverse,
}

#[derive(Debug, Clone)]
pub struct BidirectionalApsp<W: Weight> {
    pub dist: DistMatrix<W>,
    /// Trees of the winning run, over the reversed graph when
    /// `direction == Reverse`.
    pub trees: TreeSet,
    pub direction: Direction,
    pub forward: WorkCounters,
    pub reverse: WorkCounters,
}

/// Runs the lex-first solver on `g` and on its reversal side by side and
/// keeps whichever finishes first.
///
/// The runs advance one vertex at a time, always the one with less counted
/// work so far. A run that completes only wins once the other has done at
/// least as much work, so the winner is the run that would finish first if
/// the two alternated single operations. The forward run wins ties.
pub fn apsp_bidirectional<W: Weight>(g: &Graph<W>) -> Result<BidirectionalApsp<W>> {
    let reversed = g.reversed();
    let forward = Closure::new(g)?;
    let backward = Closure::new(&reversed)?;
    Ok(apsp_bidirectional_with(g, &reversed, &forward, &backward))
}

pub fn apsp_bidirectional_with<W: Weight>(
    g: &Graph<W>,
    reversed: &Graph<W>,
    forward_closure: &Closure,
    reverse_closure: &Closure,
) -> BidirectionalApsp<W> {
    let mut fwd = LexFirstRun::new(g, forward_closure);
    let mut rev = LexFirstRun::new(reversed, reverse_closure);
    let direction = loop {
        let (fw, rw) = (fwd.counters().total(), rev.counters().total());
        match (fwd.is_done(), rev.is_done()) {
            (true, true) if fw <= rw => break Direction::Forward,
            (true, true) => break Direction::Reverse,
            (true, false) if rw >= fw => break Direction::Forward,
            (true, false) => rev.step(),
            (false, true) if fw >= rw => break Direction::Reverse,
            (false, true) => fwd.step(),
            (false, false) if fw <= rw => fwd.step(),
            (false, false) => rev.step(),
        }
    };
    let (forward, reverse) = (fwd.counters(), rev.counters());
    let (dist, trees) = match direction {
        Direction::Forward => (fwd.dist_matrix(), fwd.into_trees()),
        Direction::Reverse => (rev.dist_matrix().transposed(), rev.into_trees()),
    };
    BidirectionalApsp {
        dist,
        trees,
        direction,
        forward,
        reverse,
    }
}
