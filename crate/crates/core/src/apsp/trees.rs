use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weight::Weight;

pub(crate) const ABSENT: u32 = u32::MAX;

/// Successor tables of the shortest-path trees, one per vertex.
///
/// The tree into `v` maps each ancestor `u` of `v` to the next vertex on the
/// chosen shortest `u -> v` path. Tables are stored by topological position
/// and only allocated for vertices that have ancestors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSet {
    order: Vec<usize>,
    position: Vec<usize>,
    tables: Vec<Option<Box<[u32]>>>,
}

impl TreeSet {
    pub(crate) fn new(
        order: Vec<usize>,
        position: Vec<usize>,
        tables: Vec<Option<Box<[u32]>>>,
    ) -> Self {
        TreeSet {
            order,
            position,
            tables,
        }
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    #[inline]
    fn table(&self, v: usize) -> Option<&[u32]> {
        self.tables[self.position[v]].as_deref()
    }

    /// Successor of `u` in the tree into `v`; `None` when `u` is not an
    /// ancestor of `v`.
    #[inline]
    pub fn next(&self, v: usize, u: usize) -> Option<usize> {
        let e = *self.table(v)?.get(self.position[u])?;
        (e != ABSENT).then(|| self.order[e as usize])
    }

    /// Members of the tree into `v` other than `v` itself.
    pub fn members(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.table(v)
            .into_iter()
            .flat_map(|t| t.iter().enumerate())
            .filter(|(_, &e)| e != ABSENT)
            .map(|(p, _)| self.order[p])
    }

    /// The vertex sequence `u, ..., v` along the tree into `v`. Empty when
    /// `v` is unreachable from `u`.
    pub fn extract_path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        if u == v {
            return Ok(vec![v]);
        }
        let Some(table) = self.table(v) else {
            return Ok(Vec::new());
        };
        let target = self.position[v];
        let mut cur = self.position[u];
        if table[cur] == ABSENT {
            return Ok(Vec::new());
        }
        let mut path = vec![u];
        while cur != target {
            if path.len() > self.n() {
                return Err(Error::MalformedTree { from: u, to: v });
            }
            let next = table[cur];
            if next == ABSENT {
                return Err(Error::MalformedTree { from: u, to: v });
            }
            cur = next as usize;
            path.push(self.order[cur]);
        }
        Ok(path)
    }

    /// Leaf count of every tree, indexed by vertex id. A vertex with no
    /// ancestors has an empty tree and zero leaves.
    pub fn leaf_counts(&self) -> Vec<usize> {
        let n = self.n();
        let mut counts = vec![0; n];
        let mut has_child = vec![false; n];
        for (p, table) in self.tables.iter().enumerate() {
            let Some(table) = table else { continue };
            has_child.fill(false);
            for &e in table.iter() {
                if e != ABSENT {
                    has_child[e as usize] = true;
                }
            }
            counts[self.order[p]] = table
                .iter()
                .zip(&has_child)
                .filter(|(&e, &child)| e != ABSENT && !child)
                .count();
        }
        counts
    }
}

/// Leaf statistics that govern the lex-first solver's running time.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TreeStats {
    /// `|leaf(T_v)|`, indexed by vertex id.
    pub leaf_counts: Vec<usize>,
    /// `sum_v indeg(v) * |leaf(T_v)|`.
    pub weighted_leaf_sum: u64,
    pub max_leaves: usize,
    /// `sum_v |leaf(T_v)| / n`.
    pub mean_leaves: f64,
}

pub fn tree_stats<W: Weight>(trees: &TreeSet, g: &Graph<W>) -> TreeStats {
    let leaf_counts = trees.leaf_counts();
    let weighted_leaf_sum = leaf_counts
        .iter()
        .enumerate()
        .map(|(v, &l)| (g.in_degree(v) * l) as u64)
        .sum();
    let max_leaves = leaf_counts.iter().copied().max().unwrap_or(0);
    let mean_leaves = if leaf_counts.is_empty() {
        0.0
    } else {
        leaf_counts.iter().sum::<usize>() as f64 / leaf_counts.len() as f64
    };
    TreeStats {
        leaf_counts,
        weighted_leaf_sum,
        max_leaves,
        mean_leaves,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // identity numbering, tree into 3: 0 -> 1 -> 3, 2 -> 3
    fn sample() -> TreeSet {
        let mut t3 = vec![ABSENT; 4];
        t3[0] = 1;
        t3[1] = 3;
        t3[2] = 3;
        let mut t1 = vec![ABSENT; 4];
        t1[0] = 1;
        TreeSet::new(
            vec![0, 1, 2, 3],
            vec![0, 1, 2, 3],
            vec![None, Some(t1.into()), None, Some(t3.into())],
        )
    }

    #[test]
    fn walks_and_leaves() {
        let t = sample();
        assert_eq!(t.extract_path(0, 3).unwrap(), vec![0, 1, 3]);
        assert_eq!(t.extract_path(2, 3).unwrap(), vec![2, 3]);
        assert_eq!(t.extract_path(3, 3).unwrap(), vec![3]);
        assert!(t.extract_path(3, 0).unwrap().is_empty());
        assert!(t.extract_path(2, 1).unwrap().is_empty());
        assert_eq!(t.leaf_counts(), vec![0, 1, 0, 2]);
        assert_eq!(t.next(3, 0), Some(1));
        assert_eq!(t.next(3, 3), None);
        assert_eq!(t.members(3).collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn corrupted_table_is_reported() {
        let mut cyc = vec![ABSENT; 3];
        cyc[0] = 1;
        cyc[1] = 0;
        let t = TreeSet::new(
            vec![0, 1, 2],
            vec![0, 1, 2],
            vec![None, None, Some(cyc.into())],
        );
        assert!(matches!(
            t.extract_path(0, 2),
            Err(Error::MalformedTree { from: 0, to: 2 })
        ));
    }
}
