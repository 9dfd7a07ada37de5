use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Most k-subsets the exhaustive enumeration will visit.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

/// Exact law of the induced edge count over all `k`-node subsets, kept as
/// integer subset counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactDistribution {
    pub subgraph_size: usize,
    pub subsets: u64,
    /// Edge count -> number of subsets inducing it.
    pub counts: BTreeMap<u64, u64>,
}

impl ExactDistribution {
    pub fn probabilities(&self) -> BTreeMap<u64, f64> {
        self.counts
            .iter()
            .map(|(&y, &c)| (y, c as f64 / self.subsets as f64))
            .collect()
    }

    pub fn probability(&self, y: u64) -> f64 {
        self.counts
            .get(&y)
            .map_or(0.0, |&c| c as f64 / self.subsets as f64)
    }
}

fn binomial_u128(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at each step: acc * (n - i) is divisible by (i + 1)
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Visits every `k`-subset of the nodes and tallies induced edge counts.
pub fn exact_edge_count_distribution(g: &Graph, k: usize) -> Result<ExactDistribution> {
    let n = g.node_count();
    if k == 0 || k > n {
        return Err(Error::param(format!(
            "subgraph size k = {k} outside 1..={n}"
        )));
    }
    let subsets = binomial_u128(n as u64, k as u64);
    if subsets > ENUMERATION_LIMIT as u128 {
        return Err(Error::EnumerationTooLarge {
            subsets,
            limit: ENUMERATION_LIMIT,
        });
    }

    let mut counts = BTreeMap::new();
    let mut chosen: Vec<usize> = (0..k).collect();
    let mut member = vec![false; n];
    for &v in &chosen {
        member[v] = true;
    }
    loop {
        let twice: usize = chosen
            .iter()
            .map(|&v| {
                g.neighbor_slice(v)
                    .iter()
                    .filter(|&&u| member[u as usize])
                    .count()
            })
            .sum();
        *counts.entry(twice as u64 / 2).or_insert(0u64) += 1;

        // Advance to the next subset in lexicographic order.
        let Some(i) = (0..k).rev().find(|&i| chosen[i] < n - k + i) else {
            break;
        };
        for &v in &chosen[i..] {
            member[v] = false;
        }
        chosen[i] += 1;
        for j in i + 1..k {
            chosen[j] = chosen[j - 1] + 1;
        }
        for &v in &chosen[i..] {
            member[v] = true;
        }
    }

    Ok(ExactDistribution {
        subgraph_size: k,
        subsets: subsets as u64,
        counts,
    })
}
