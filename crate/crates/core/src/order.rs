//! Vertex orderings and reachability used by the sweep and APSP solvers.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weight::Weight;

/// BFS levels from a source, extended to a linear order of all vertices.
///
/// Vertices are ordered by level, ascending id within a level, with
/// unreachable vertices appended last in ascending id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsOrder {
    order: Vec<usize>,
    position: Vec<usize>,
    level: Vec<Option<usize>>,
}

impl BfsOrder {
    pub fn new<W: Weight>(g: &Graph<W>, source: usize) -> Result<Self> {
        let n = g.n();
        if source >= n {
            return Err(Error::SourceOutOfRange { vertex: source, n });
        }
        let mut level = vec![None; n];
        let mut order = Vec::with_capacity(n);
        level[source] = Some(0);
        let mut frontier = vec![source];
        let mut depth = 0;
        while !frontier.is_empty() {
            order.extend_from_slice(&frontier);
            depth += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for (v, _) in g.out_edges(u) {
                    if level[v].is_none() {
                        level[v] = Some(depth);
                        next.push(v);
                    }
                }
            }
            next.sort_unstable();
            frontier = next;
        }
        order.extend((0..n).filter(|&v| level[v].is_none()));

        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        Ok(BfsOrder {
            order,
            position,
            level,
        })
    }

    #[inline]
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Minimum edge count from the source, `None` if unreachable.
    #[inline]
    pub fn level(&self, v: usize) -> Option<usize> {
        self.level[v]
    }

    pub fn levels(&self) -> &[Option<usize>] {
        &self.level
    }

    /// Whether `(u, v)` goes forward in the linear order.
    #[inline]
    pub fn is_forward(&self, u: usize, v: usize) -> bool {
        self.position[u] < self.position[v]
    }
}

/// A topological numbering with all sources first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopoOrder {
    order: Vec<usize>,
    position: Vec<usize>,
    source_count: usize,
}

impl TopoOrder {
    /// Kahn's algorithm. Sources are emitted first in ascending id; after
    /// that the ready set is drained smallest id first.
    pub fn new<W: Weight>(g: &Graph<W>) -> Result<Self> {
        let n = g.n();
        let mut indegree: Vec<usize> = (0..n).map(|v| g.in_degree(v)).collect();
        let mut order: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let source_count = order.len();

        let mut ready = BinaryHeap::new();
        let mut release = |u: usize, ready: &mut BinaryHeap<Reverse<usize>>| {
            for (v, _) in g.out_edges(u) {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    ready.push(Reverse(v));
                }
            }
        };
        for i in 0..source_count {
            release(order[i], &mut ready);
        }
        while let Some(Reverse(u)) = ready.pop() {
            order.push(u);
            release(u, &mut ready);
        }
        if order.len() != n {
            return Err(Error::CycleDetected);
        }

        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        Ok(TopoOrder {
            order,
            position,
            source_count,
        })
    }

    #[inline]
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    /// Number of indegree-0 vertices; they occupy positions `0..source_count`.
    #[inline]
    pub fn source_count(&self) -> usize {
        self.source_count
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

const WORD: usize = u64::BITS as usize;

/// Ancestor sets of a DAG as a packed bit matrix.
///
/// Row `p` belongs to the vertex at topological position `p`, and bit `q`
/// in it is set when the vertex at position `q` is an ancestor. Iterating a
/// row therefore yields ancestors in ascending topological position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AncestorSets {
    words_per_row: usize,
    bits: Vec<u64>,
    order: Vec<usize>,
    position: Vec<usize>,
}

impl AncestorSets {
    /// Transitive closure by dynamic programming along `topo`: the ancestor
    /// set of `v` is the union of `A(u) ∪ {u}` over its direct ancestors.
    pub fn new<W: Weight>(g: &Graph<W>, topo: &TopoOrder) -> Self {
        let n = g.n();
        let words_per_row = n.div_ceil(WORD);
        let mut bits = vec![0u64; n * words_per_row];
        for p in 0..n {
            let v = topo.order()[p];
            let (done, rest) = bits.split_at_mut(p * words_per_row);
            let row = &mut rest[..words_per_row];
            for (u, _) in g.in_edges(v) {
                let q = topo.position(u);
                debug_assert!(q < p);
                let src = &done[q * words_per_row..(q + 1) * words_per_row];
                for (dst, &s) in row.iter_mut().zip(src) {
                    *dst |= s;
                }
                row[q / WORD] |= 1u64 << (q % WORD);
            }
        }
        AncestorSets {
            words_per_row,
            bits,
            order: topo.order().to_vec(),
            position: topo.positions().to_vec(),
        }
    }

    #[inline]
    fn row(&self, p: usize) -> &[u64] {
        &self.bits[p * self.words_per_row..(p + 1) * self.words_per_row]
    }

    /// Whether `u` is an ancestor of `v` (both vertex ids).
    #[inline]
    pub fn contains(&self, v: usize, u: usize) -> bool {
        let q = self.position[u];
        self.row(self.position[v])[q / WORD] >> (q % WORD) & 1 == 1
    }

    /// Topological positions of the ancestors of the vertex at position `p`,
    /// ascending.
    pub fn positions_of(&self, p: usize) -> BitIter<'_> {
        BitIter {
            words: self.row(p),
            index: 0,
            current: self.row(p).first().copied().unwrap_or(0),
        }
    }

    /// Ancestors of `v` as vertex ids, in ascending topological position.
    pub fn ancestors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.positions_of(self.position[v]).map(|q| self.order[q])
    }

    pub fn count(&self, v: usize) -> usize {
        self.row(self.position[v])
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }
}

/// Iterator over set bits of a packed row.
pub struct BitIter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}
