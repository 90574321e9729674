//! APSP for non-negatively weighted digraphs whose directed cycles are all
//! long.
//!
//! A random vertex sample of size about `c * n * ln(n) / d` hits every cycle
//! with at least `d` vertices with high probability. The graph minus the
//! sample is then a DAG and is solved with the lex-first solver; paths
//! through sampled vertices are covered by Dijkstra runs from each sampled
//! vertex, forwards and on the reversed graph. When the residual graph is
//! still cyclic the sample is redrawn, so a returned result is always exact.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::apsp::apsp_lex_first;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::DistMatrix;
use crate::weight::{ExtDist, Weight};

/// Sampling parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleConfig {
    /// Minimum number of vertices on any directed cycle.
    pub d: usize,
    /// Multiplier of `n * ln(n) / d`.
    pub c: f64,
    pub seed: u64,
    /// Total sampling attempts allowed before giving up.
    pub max_retries: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            d: 1,
            c: 2.0,
            seed: 0,
            max_retries: 5,
        }
    }
}

impl SampleConfig {
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.d == 0 || (n > 0 && self.d > n) {
            return Err(Error::InvalidConfig(format!(
                "minimum cycle length d = {} must lie in 1..={n}",
                self.d
            )));
        }
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "constant c = {} must be positive",
                self.c
            )));
        }
        if self.max_retries == 0 {
            return Err(Error::InvalidConfig(
                "max_retries must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// `min(n, ceil(c * n * ln(n) / d))`, and `min(n, 1)` when `n <= 1`.
    pub fn sample_size(&self, n: usize) -> usize {
        if n <= 1 {
            return n.min(1);
        }
        let nf = n as f64;
        let raw = (self.c * nf * nf.ln() / self.d as f64).ceil();
        if raw >= nf {
            n
        } else {
            raw.max(0.0) as usize
        }
    }
}

/// Draws a uniform sample without replacement, ascending.
pub fn sample_vertices(n: usize, cfg: &SampleConfig) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    draw_sample(n, cfg, &mut rng)
}

fn draw_sample(n: usize, cfg: &SampleConfig, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let k = cfg.sample_size(n);
    let mut s = index::sample(rng, n, k).into_vec();
    s.sort_unstable();
    s
}

/// Dijkstra with a binary heap; ties pop the smaller vertex id first.
pub fn dijkstra<W: Weight>(g: &Graph<W>, source: usize) -> Result<Vec<ExtDist<W>>> {
    if source >= g.n() {
        return Err(Error::SourceOutOfRange {
            vertex: source,
            n: g.n(),
        });
    }
    if let Some((tail, head, w)) = g.has_negative_weight() {
        return Err(Error::NegativeWeight {
            tail,
            head,
            weight: w.to_string(),
        });
    }
    Ok(dijkstra_unchecked(g, source))
}

fn dijkstra_unchecked<W: Weight>(g: &Graph<W>, source: usize) -> Vec<ExtDist<W>> {
    let mut dist = vec![ExtDist::inf(); g.n()];
    let mut heap = BinaryHeap::new();
    dist[source] = ExtDist::zero();
    heap.push(Reverse((ExtDist::<W>::zero(), source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for (v, w) in g.out_edges(u) {
            let c = d.plus(w);
            if c < dist[v] {
                dist[v] = c;
                heap.push(Reverse((c, v)));
            }
        }
    }
    dist
}

#[derive(Debug, Clone)]
pub struct CyclicApspResult<W: Weight> {
    pub dist: DistMatrix<W>,
    /// The sample whose removal left a DAG, ascending.
    pub sample: Vec<usize>,
    /// Redraws needed before the residual graph was acyclic.
    pub retries_used: usize,
}

/// Metadata written next to the distance table.
#[derive(Debug, Clone, Serialize)]
pub struct CyclicSummary {
    pub n: usize,
    pub sample_size: usize,
    pub sample: Vec<usize>,
    pub retries_used: usize,
    pub config: SampleConfig,
}

impl<W: Weight> CyclicApspResult<W> {
    pub fn summary(&self, cfg: &SampleConfig) -> CyclicSummary {
        CyclicSummary {
            n: self.dist.n(),
            sample_size: self.sample.len(),
            sample: self.sample.clone(),
            retries_used: self.retries_used,
            config: *cfg,
        }
    }
}

/// All-pairs distances for a non-negatively weighted digraph with only long
/// cycles.
pub fn apsp_large_cycles<W: Weight>(
    g: &Graph<W>,
    cfg: &SampleConfig,
) -> Result<CyclicApspResult<W>> {
    let n = g.n();
    cfg.validate(n)?;
    if let Some((tail, head, w)) = g.has_negative_weight() {
        return Err(Error::NegativeWeight {
            tail,
            head,
            weight: w.to_string(),
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for attempt in 0..cfg.max_retries {
        let sample = draw_sample(n, cfg, &mut rng);
        let mut in_sample = vec![false; n];
        for &s in &sample {
            in_sample[s] = true;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| !in_sample[v]).collect();
        let residual = g.induced(&rest);
        let inner = match apsp_lex_first(&residual) {
            Ok(r) => r.dist,
            Err(Error::CycleDetected) => continue,
            Err(e) => return Err(e),
        };

        let mut dist = DistMatrix::new(n);
        for (a, &u) in rest.iter().enumerate() {
            for (b, &v) in rest.iter().enumerate() {
                dist.set(u, v, inner.get(a, b));
            }
        }

        let reversed = g.reversed();
        let runs: Vec<(Vec<_>, Vec<_>)> = sample
            .par_iter()
            .map(|&s| (dijkstra_unchecked(g, s), dijkstra_unchecked(&reversed, s)))
            .collect();
        for (&s, (from_s, to_s)) in sample.iter().zip(&runs) {
            for v in 0..n {
                dist.improve(s, v, from_s[v]);
                dist.improve(v, s, to_s[v]);
            }
        }

        for &s in &sample {
            for &u in &rest {
                let us = dist.get(u, s);
                if us.is_inf() {
                    continue;
                }
                for &v in &rest {
                    if u != v {
                        let through = us.plus_dist(dist.get(s, v));
                        dist.improve(u, v, through);
                    }
                }
            }
        }

        return Ok(CyclicApspResult {
            dist,
            sample,
            retries_used: attempt,
        });
    }
    Err(Error::ResidualCyclic {
        attempts: cfg.max_retries,
    })
}
