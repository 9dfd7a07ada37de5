use rand::Rng as _;

use super::Graph;
use crate::error::{Error, Result};
use crate::seed::{Rng, RngSeed};

/// Reusable buffers for repeated node sampling from one graph.
///
/// Each draw picks `k` distinct nodes uniformly by a partial Fisher-Yates
/// shuffle of a persistent permutation and counts the edges induced by them.
/// The permutation is never reset: a partial shuffle yields a uniform
/// k-subset from any starting arrangement. Cost per draw is
/// `O(k + sum of sampled degrees)`.
#[derive(Debug, Clone)]
pub struct NodeSampler<'g> {
    graph: &'g Graph,
    order: Vec<u32>,
    in_sample: Vec<bool>,
}

impl<'g> NodeSampler<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        NodeSampler {
            graph,
            order: (0..graph.node_count() as u32).collect(),
            in_sample: vec![false; graph.node_count()],
        }
    }

    /// Draws `k` nodes and returns the number of induced edges.
    pub fn draw(&mut self, k: usize, rng: &mut Rng) -> Result<u64> {
        let n = self.graph.node_count();
        if k == 0 || k > n {
            return Err(Error::param(format!("sample size k = {k} outside 1..={n}")));
        }
        for i in 0..k {
            let j = rng.random_range(i..n);
            self.order.swap(i, j);
        }
        Ok(self.count_induced(k))
    }

    /// Induced edge count for an explicit node set.
    pub fn count_for(&mut self, nodes: &[usize]) -> Result<u64> {
        let n = self.graph.node_count();
        let mut picked = Vec::with_capacity(nodes.len());
        for &v in nodes {
            if v >= n {
                return Err(Error::param(format!("node {v} outside 0..{n}")));
            }
            if self.in_sample[v] {
                self.clear(&picked);
                return Err(Error::param(format!("node {v} listed twice")));
            }
            self.in_sample[v] = true;
            picked.push(v as u32);
        }
        let count = self.induced(&picked);
        self.clear(&picked);
        Ok(count)
    }

    fn count_induced(&mut self, k: usize) -> u64 {
        let (sample, _) = self.order.split_at(k);
        for &v in sample {
            self.in_sample[v as usize] = true;
        }
        let mut twice = 0u64;
        for &v in sample {
            twice += self
                .graph
                .neighbor_slice(v as usize)
                .iter()
                .filter(|&&u| self.in_sample[u as usize])
                .count() as u64;
        }
        for &v in sample {
            self.in_sample[v as usize] = false;
        }
        twice / 2
    }

    fn induced(&self, nodes: &[u32]) -> u64 {
        let twice: usize = nodes
            .iter()
            .map(|&v| {
                self.graph
                    .neighbor_slice(v as usize)
                    .iter()
                    .filter(|&&u| self.in_sample[u as usize])
                    .count()
            })
            .sum();
        twice as u64 / 2
    }

    fn clear(&mut self, nodes: &[u32]) {
        for &v in nodes {
            self.in_sample[v as usize] = false;
        }
    }
}

/// Edges of `g` induced by `k` nodes chosen uniformly without replacement.
pub fn sample_subgraph_edge_count(g: &Graph, k: usize, seed: RngSeed) -> Result<u64> {
    NodeSampler::new(g).draw(k, &mut seed.rng())
}
