//! Undirected, loop-free graphs: construction, random generators and node
//! sampling.

mod generate;
mod parse;
mod sample;

pub use generate::{generate_gnm, generate_gnp, generate_two_colour, TwoColourParams};
pub use parse::{parse_edge_list, read_edge_list, write_edge_list, ParsedGraph};
pub use sample::{sample_subgraph_edge_count, NodeSampler};

use crate::error::{Error, Result};

/// Number of unordered node pairs, `C(n, 2)`.
pub fn pair_count(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// An immutable undirected graph without self-loops or parallel edges.
///
/// Nodes are `0..node_count()`. Edges are kept as a sorted list of `(u, v)`
/// pairs with `u < v`, alongside a CSR adjacency index for neighbour scans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    node_count: usize,
    edges: Vec<(u32, u32)>,
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph from arbitrary endpoint pairs. Reversed and repeated
    /// pairs collapse to a single edge; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if node_count > u32::MAX as usize {
            return Err(Error::param(format!(
                "node count {node_count} exceeds u32 ids"
            )));
        }
        let mut pairs = Vec::new();
        for (a, b) in edges {
            if a >= node_count || b >= node_count {
                return Err(Error::param(format!(
                    "edge ({a}, {b}) has an endpoint outside 0..{node_count}"
                )));
            }
            if a == b {
                return Err(Error::param(format!("self-loop at node {a}")));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            pairs.push((u as u32, v as u32));
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(Graph::from_canonical(node_count, pairs))
    }

    /// `edges` must be sorted, deduplicated, with `u < v < node_count`.
    pub(crate) fn from_canonical(node_count: usize, edges: Vec<(u32, u32)>) -> Graph {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges
            .iter()
            .all(|&(u, v)| u < v && (v as usize) < node_count));

        let mut degree = vec![0usize; node_count];
        for &(u, v) in &edges {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(node_count + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..node_count].to_vec();
        let mut neighbors = vec![0u32; offsets[node_count]];
        // Walking the sorted pair list fills each node's slice in ascending order.
        for &(u, v) in &edges {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
        }
        for &(u, v) in &edges {
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for node in 0..node_count {
            neighbors[offsets[node]..offsets[node + 1]].sort_unstable();
        }

        Graph {
            node_count,
            edges,
            offsets,
            neighbors,
            labels: Vec::new(),
        }
    }

    pub fn complete(node_count: usize) -> Graph {
        let mut edges = Vec::with_capacity(pair_count(node_count) as usize);
        for u in 0..node_count as u32 {
            for v in u + 1..node_count as u32 {
                edges.push((u, v));
            }
        }
        Graph::from_canonical(node_count, edges)
    }

    pub fn empty(node_count: usize) -> Graph {
        Graph::from_canonical(node_count, Vec::new())
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Graph {
        debug_assert!(labels.len() <= self.node_count);
        self.labels = labels;
        self
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Potential edges, `C(|V|, 2)`.
    pub fn pair_count(&self) -> u64 {
        pair_count(self.node_count)
    }

    /// Sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn degree(&self, node: usize) -> usize {
        self.offsets[node + 1] - self.offsets[node]
    }

    pub fn neighbors(&self, node: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.neighbor_slice(node).iter().map(|&v| v as usize)
    }

    pub(crate) fn neighbor_slice(&self, node: usize) -> &[u32] {
        &self.neighbors[self.offsets[node]..self.offsets[node + 1]]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a >= self.node_count || b >= self.node_count || a == b {
            return false;
        }
        self.neighbor_slice(a).binary_search(&(b as u32)).is_ok()
    }

    pub fn mean_degree(&self) -> f64 {
        if self.node_count == 0 {
            0.0
        } else {
            2.0 * self.edges.len() as f64 / self.node_count as f64
        }
    }

    /// Original token for `node` when the graph was read from an edge list.
    /// Padding nodes added by a node-count override have no label.
    pub fn label(&self, node: usize) -> Option<&str> {
        self.labels.get(node).map(String::as_str)
    }
}
