//! Immutable weighted digraph in compressed adjacency form.
//!
//! Both the out-adjacency and the in-adjacency are stored, each sorted by
//! neighbour id, so every algorithm iterates edges in a deterministic order.

use std::fmt::Write as _;

use num_traits::{NumCast, Signed};

use crate::error::{Error, Result};
use crate::weight::Weight;

/// One compressed adjacency view: `offsets[v]..offsets[v + 1]` indexes the
/// neighbours of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Adjacency<W> {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    weights: Vec<W>,
}

impl<W: Weight> Adjacency<W> {
    /// Groups `(key, other, weight)` triples by `key`, ordering each group by
    /// `other` and keeping input order among parallel edges.
    fn build(n: usize, mut triples: Vec<(usize, usize, W)>) -> Self {
        triples.sort_by_key(|&(key, other, _)| (key, other));
        let mut offsets = vec![0usize; n + 1];
        for &(key, _, _) in &triples {
            offsets[key + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let neighbors = triples.iter().map(|t| t.1).collect();
        let weights = triples.iter().map(|t| t.2).collect();
        Adjacency {
            offsets,
            neighbors,
            weights,
        }
    }

    #[inline]
    fn range(&self, v: usize) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }
}

/// A weighted directed graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph<W> {
    n: usize,
    out: Adjacency<W>,
    inc: Adjacency<W>,
}

impl<W: Weight> Graph<W> {
    /// Builds a graph from `(tail, head, weight)` triples.
    ///
    /// Rejects out-of-range endpoints, self-loops, and weights large enough
    /// that a sum of two path lengths over `n` vertices could overflow `W`.
    pub fn new(n: usize, edges: &[(usize, usize, W)]) -> Result<Self> {
        let mut heaviest: Option<(usize, usize, W, W)> = None;
        for &(tail, head, weight) in edges {
            if tail >= n || head >= n {
                return Err(Error::VertexOutOfRange { tail, head, n });
            }
            if tail == head {
                return Err(Error::SelfLoop { vertex: tail });
            }
            let magnitude = match weight.checked_abs_w() {
                Some(m) => m,
                None => return Err(weight_bound(tail, head, weight, n)),
            };
            if heaviest.is_none_or(|h| magnitude > h.3) {
                heaviest = Some((tail, head, weight, magnitude));
            }
        }
        if let Some((tail, head, weight, magnitude)) = heaviest {
            // Two path lengths of at most n - 1 edges each must stay below the
            // infinity sentinel.
            let fits = <W as NumCast>::from(2 * n)
                .and_then(|factor| factor.checked_mul(&magnitude))
                .is_some_and(|bound| bound < W::max_value());
            if !fits {
                return Err(weight_bound(tail, head, weight, n));
            }
        }

        let out = Adjacency::build(n, edges.iter().map(|&(u, v, w)| (u, v, w)).collect());
        let inc = Adjacency::build(n, edges.iter().map(|&(u, v, w)| (v, u, w)).collect());
        Ok(Graph { n, out, inc })
    }

    /// The graph with every edge reversed.
    pub fn reversed(&self) -> Self {
        Graph {
            n: self.n,
            out: self.inc.clone(),
            inc: self.out.clone(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.out.neighbors.len()
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out.range(v).len()
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.inc.range(v).len()
    }

    /// `(head, weight)` for every edge leaving `v`, ascending by head.
    #[inline]
    pub fn out_edges(&self, v: usize) -> impl ExactSizeIterator<Item = (usize, W)> + '_ {
        let r = self.out.range(v);
        self.out.neighbors[r.clone()]
            .iter()
            .copied()
            .zip(self.out.weights[r].iter().copied())
    }

    /// `(tail, weight)` for every edge entering `v`, ascending by tail.
    #[inline]
    pub fn in_edges(&self, v: usize) -> impl ExactSizeIterator<Item = (usize, W)> + '_ {
        let r = self.inc.range(v);
        self.inc.neighbors[r.clone()]
            .iter()
            .copied()
            .zip(self.inc.weights[r].iter().copied())
    }

    /// All edges as `(tail, head, weight)`, ascending by tail then head.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, W)> + '_ {
        (0..self.n).flat_map(move |u| self.out_edges(u).map(move |(v, w)| (u, v, w)))
    }

    pub fn has_negative_weight(&self) -> Option<(usize, usize, W)> {
        self.edges().find(|e| e.2 < W::zero())
    }

    /// The subgraph induced by `keep`, relabelled to `0..keep.len()` in the
    /// order given.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut label = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            label[v] = i;
        }
        let edges: Vec<_> = keep
            .iter()
            .flat_map(|&u| {
                let label = &label;
                self.out_edges(u)
                    .filter(move |&(v, _)| label[v] != usize::MAX)
                    .map(move |(v, w)| (label[u], label[v], w))
            })
            .collect();
        Graph {
            n: keep.len(),
            out: Adjacency::build(keep.len(), edges.to_vec()),
            inc: Adjacency::build(
                keep.len(),
                edges.iter().map(|&(u, v, w)| (v, u, w)).collect(),
            ),
        }
    }

    /// Parses the text format: a header line `n m` followed by `m` lines of
    /// `tail head weight`. Blank lines after the last edge are tolerated,
    /// anything else is rejected.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (header_no, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            message: "missing header".into(),
        })?;
        let fields = split_fields(header, header_no + 1, 2)?;
        let n: usize = parse_field(fields[0], header_no + 1, "vertex count")?;
        let m: usize = parse_field(fields[1], header_no + 1, "edge count")?;

        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (no, line) = lines.next().ok_or_else(|| Error::Parse {
                line: header_no + edges.len() + 2,
                message: format!("expected {m} edges, found {}", edges.len()),
            })?;
            let fields = split_fields(line, no + 1, 3)?;
            let tail = parse_field(fields[0], no + 1, "tail")?;
            let head = parse_field(fields[1], no + 1, "head")?;
            let weight: W = parse_field(fields[2], no + 1, "weight")?;
            edges.push((tail, head, weight));
        }
        for (no, line) in lines {
            if !line.trim().is_empty() {
                return Err(Error::Parse {
                    line: no + 1,
                    message: "trailing content after the last edge".into(),
                });
            }
        }
        Graph::new(n, &edges)
    }

    /// Serializes to the text format accepted by [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(16 * (self.m() + 1));
        let _ = writeln!(s, "{} {}", self.n, self.m());
        for (u, v, w) in self.edges() {
            let _ = writeln!(s, "{u} {v} {w}");
        }
        s
    }
}

fn weight_bound<W: Weight>(tail: usize, head: usize, weight: W, n: usize) -> Error {
    Error::WeightBound {
        tail,
        head,
        weight: weight.to_string(),
        n,
    }
}

trait CheckedAbs: Sized {
    fn checked_abs_w(self) -> Option<Self>;
}

impl<W: Weight> CheckedAbs for W {
    fn checked_abs_w(self) -> Option<Self> {
        if self == W::min_value() {
            None
        } else {
            Some(Signed::abs(&self))
        }
    }
}

fn split_fields(line: &str, line_no: usize, expected: usize) -> Result<Vec<&str>> {
    let fields: Vec<&str> = line.split_ascii_whitespace().collect();
    if fields.len() != expected {
        return Err(Error::Parse {
            line: line_no,
            message: format!("expected {expected} fields, found {}", fields.len()),
        });
    }
    Ok(fields)
}

fn parse_field<T: std::str::FromStr>(field: &str, line: usize, what: &str) -> Result<T> {
    field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what} {field:?}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_multiset(g: &Graph<i64>) -> Vec<(usize, usize, i64)> {
        let mut e: Vec<_> = g.edges().collect();
        e.sort();
        e
    }

    #[test]
    fn single_vertex() {
        let g = Graph::<i64>::new(1, &[]).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn small_graph_degrees() {
        let g = Graph::new(3, &[(0, 1, 5i64), (1, 2, 2), (0, 2, 10)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.in_degree(2), 2);
        assert_eq!(g.out_degree(0), 2);
        assert_eq!(g.out_edges(0).collect::<Vec<_>>(), vec![(1, 5), (2, 10)]);
        assert_eq!(g.in_edges(2).collect::<Vec<_>>(), vec![(0, 10), (1, 2)]);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(
            Graph::new(2, &[(0, 0, 1i64)]),
            Err(Error::SelfLoop { vertex: 0 })
        );
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            Graph::new(2, &[(0, 2, 1i64)]),
            Err(Error::VertexOutOfRange {
                tail: 0,
                head: 2,
                n: 2
            })
        ));
    }

    #[test]
    fn rejects_weights_that_could_overflow() {
        // 2 * 3 * 6000 = 36000 > i16::MAX
        let err = Graph::new(3, &[(0, 1, 1i16), (1, 2, -6000)]).unwrap_err();
        assert!(matches!(
            err,
            Error::WeightBound {
                tail: 1,
                head: 2,
                ..
            }
        ));
        assert!(Graph::new(3, &[(0, 1, 5000i16)]).is_ok());
        assert!(Graph::new(2, &[(0, 1, i64::MIN)]).is_err());
    }

    #[test]
    fn reversal() {
        let path = Graph::new(3, &[(0, 1, 1i64), (1, 2, 2)]).unwrap();
        let r = path.reversed();
        assert_eq!(edge_multiset(&r), vec![(1, 0, 1), (2, 1, 2)]);
        assert_eq!(r.reversed(), path);

        let diamond = Graph::new(4, &[(0, 1, 1i64), (0, 2, 1), (1, 3, 1), (2, 3, 1)]).unwrap();
        let r = diamond.reversed();
        assert_eq!(
            edge_multiset(&r),
            vec![(1, 0, 1), (2, 0, 1), (3, 1, 1), (3, 2, 1)]
        );
        for v in 0..4 {
            assert_eq!(r.in_degree(v), diamond.out_degree(v));
            assert_eq!(r.out_degree(v), diamond.in_degree(v));
        }
    }

    #[test]
    fn parallel_edges_are_kept() {
        let g = Graph::new(2, &[(0, 1, 3i64), (0, 1, -2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.in_degree(1), 2);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::new(4, &[(0, 1, 1i64), (1, 2, 2), (2, 3, 3), (3, 0, 4)]).unwrap();
        let h = g.induced(&[1, 2, 3]);
        assert_eq!(h.n(), 3);
        assert_eq!(edge_multiset(&h), vec![(0, 1, 2), (1, 2, 3)]);
    }

    #[test]
    fn text_format() {
        let g = Graph::<i64>::parse("3 2\n0 1 -5\n1 2 7\n").unwrap();
        assert_eq!(edge_multiset(&g), vec![(0, 1, -5), (1, 2, 7)]);
        assert_eq!(g.to_text(), "3 2\n0 1 -5\n1 2 7\n");
        assert_eq!(Graph::<i64>::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn text_format_errors() {
        assert!(matches!(
            Graph::<i64>::parse("3 2\n0 1 -5\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            Graph::<i64>::parse("3 1\n0 1 -5\n1 2 7\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            Graph::<i64>::parse("3 1\n0 1 -5 9\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::<i64>::parse("3 1\n0 x 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::<i64>::parse("2 1\n1 1 1\n"),
            Err(Error::SelfLoop { vertex: 1 })
        ));
        assert!(Graph::<i64>::parse("").is_err());
    }
}
