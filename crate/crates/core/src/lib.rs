//! Shortest paths on digraphs with possibly negative integer weights.
//!
//! - [`sssp`]: single-source distances by alternating forward and backward
//!   sweeps over a BFS order, plus Bellman–Ford for comparison.
//! - [`apsp`]: all-pairs distances on DAGs, with a solver whose cost tracks
//!   the leaf counts of the shortest-path trees.
//! - [`cyclic`]: all-pairs distances on non-negative digraphs whose cycles
//!   are all long, by sampling a cycle-hitting vertex set.
//!
//! Everything is generic over a signed integer weight type; the `*64`
//! aliases cover the common case.

pub mod apsp;
pub mod bench;
pub mod cyclic;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod oracles;
pub mod order;
pub mod sssp;
pub mod weight;

pub use apsp::{
    apsp_bidirectional, apsp_lex_first, apsp_standard_dag, tree_stats, BidirectionalApsp, Closure,
    Direction, LexFirstApsp, TreeSet, TreeStats,
};
pub use cyclic::{apsp_large_cycles, dijkstra, CyclicApspResult, SampleConfig};
pub use error::{Error, Result};
pub use graph::Graph;
pub use matrix::DistMatrix;
pub use order::{AncestorSets, BfsOrder, TopoOrder};
pub use sssp::{bellman_ford, t_light_sssp, BfMode, DistVector, SsspReport};
pub use weight::{ExtDist, Weight};

pub type Graph64 = Graph<i64>;
pub type Graph32 = Graph<i32>;
pub type Dist64 = ExtDist<i64>;
pub type Dist32 = ExtDist<i32>;
pub type DistMatrix64 = DistMatrix<i64>;
pub type DistVector64 = DistVector<i64>;
