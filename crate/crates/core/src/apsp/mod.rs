//! All-pairs shortest paths on DAGs.
//!
//! [`apsp_standard_dag`] runs one dynamic-programming sweep per source.
//! [`apsp_lex_first`] builds, in a single sweep along a topological order,
//! the tree of lexicographically-first shortest paths into every vertex; its
//! running time depends on how many leaves those trees have.

mod lex_first;
mod trees;

pub use lex_first::{
    apsp_bidirectional, apsp_bidirectional_with, apsp_lex_first, apsp_lex_first_with,
    BidirectionalApsp, Direction, LexFirstApsp, LexFirstRun, WorkCounters,
};
pub use trees::{tree_stats, TreeSet, TreeStats};

use crate::error::Result;
use crate::graph::Graph;
use crate::matrix::DistMatrix;
use crate::order::{AncestorSets, TopoOrder};
use crate::weight::{ExtDist, Weight};

/// Topological numbering plus ancestor sets: everything the lex-first solver
/// needs before its main loop. Kept separate so callers can time the
/// transitive closure on its own.
#[derive(Debug, Clone)]
pub struct Closure {
    pub topo: TopoOrder,
    pub ancestors: AncestorSets,
}

impl Closure {
    pub fn new<W: Weight>(g: &Graph<W>) -> Result<Self> {
        let topo = TopoOrder::new(g)?;
        let ancestors = AncestorSets::new(g, &topo);
        Ok(Closure { topo, ancestors })
    }
}

/// In-adjacency relabelled to topological positions. Parallel edges are
/// merged keeping the lightest, and each list is ascending by tail position.
#[derive(Debug, Clone)]
pub(crate) struct PositionCsr<W> {
    offsets: Vec<usize>,
    tails: Vec<u32>,
    weights: Vec<W>,
}

impl<W: Weight> PositionCsr<W> {
    pub(crate) fn new(g: &Graph<W>, topo: &TopoOrder) -> Self {
        let n = g.n();
        assert!(
            n < u32::MAX as usize,
            "graph too large for 32-bit positions"
        );
        let mut offsets = Vec::with_capacity(n + 1);
        let mut tails = Vec::with_capacity(g.m());
        let mut weights = Vec::with_capacity(g.m());
        let mut scratch: Vec<(u32, W)> = Vec::new();
        offsets.push(0);
        for &v in topo.order() {
            scratch.clear();
            scratch.extend(g.in_edges(v).map(|(u, w)| (topo.position(u) as u32, w)));
            scratch.sort_unstable();
            let mut last = u32::MAX;
            for &(p, w) in &scratch {
                // sorted by (position, weight): the first of a run is the lightest
                if p != last {
                    tails.push(p);
                    weights.push(w);
                    last = p;
                }
            }
            offsets.push(tails.len());
        }
        PositionCsr {
            offsets,
            tails,
            weights,
        }
    }

    #[inline]
    pub(crate) fn preds(&self, p: usize) -> (&[u32], &[W]) {
        let r = self.offsets[p]..self.offsets[p + 1];
        (&self.tails[r.clone()], &self.weights[r])
    }
}

/// One forward DP sweep per source over the topological order.
pub fn apsp_standard_dag<W: Weight>(g: &Graph<W>) -> Result<DistMatrix<W>> {
    let topo = TopoOrder::new(g)?;
    Ok(apsp_standard_dag_with(g, &topo))
}

pub fn apsp_standard_dag_with<W: Weight>(g: &Graph<W>, topo: &TopoOrder) -> DistMatrix<W> {
    let n = g.n();
    let csr = PositionCsr::new(g, topo);
    let order = topo.order();
    let mut out = DistMatrix::new(n);
    let mut d = vec![ExtDist::<W>::inf(); n];
    for s in 0..n {
        d[..].fill(ExtDist::inf());
        d[s] = ExtDist::zero();
        for i in s + 1..n {
            let (tails, weights) = csr.preds(i);
            // tails before s are unreachable from s
            let from = tails.partition_point(|&p| (p as usize) < s);
            d[i] = ExtDist::from_raw(min_over_preds(&d, &tails[from..], &weights[from..]));
        }
        let row = out.row_mut(order[s]);
        for i in s..n {
            row[order[i]] = d[i];
        }
    }
    out
}

/// `min_j d[j] + w(j)` over the listed predecessors, on raw integers with
/// `W::max_value()` as `+inf`.
#[inline]
fn min_over_preds<W: Weight>(d: &[ExtDist<W>], tails: &[u32], weights: &[W]) -> W {
    let weights = &weights[..tails.len()];
    let inf = W::max_value();
    let mut best = inf;
    let mut at = 0usize;
    while at < tails.len() {
        let dj = d[tails[at] as usize].raw();
        let cand = if dj == inf {
            inf
        } else {
            dj.wrapping_add(&weights[at])
        };
        if cand < best {
            best = cand;
        }
        at = at.wrapping_add(1);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_graph() {
        let g = Graph::<i64>::new(3, &[]).unwrap();
        let d = apsp_standard_dag(&g).unwrap();
        assert_eq!(d, DistMatrix::new(3));
    }

    #[test]
    fn rejects_cycles() {
        let g = Graph::new(2, &[(0, 1, 1i64), (1, 0, 1)]).unwrap();
        assert!(apsp_standard_dag(&g).is_err());
    }

    #[test]
    fn merges_parallel_edges() {
        let g = Graph::new(3, &[(2, 0, 5i64), (2, 0, -1), (0, 1, 2)]).unwrap();
        let d = apsp_standard_dag(&g).unwrap();
        assert_eq!(d.get(2, 0).value(), Some(-1));
        assert_eq!(d.get(2, 1).value(), Some(1));
        assert!(d.get(1, 2).is_inf());
    }
}
