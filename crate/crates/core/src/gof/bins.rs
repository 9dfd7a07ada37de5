use serde::{Deserialize, Serialize};

use crate::dist::HypergeomNull;
use crate::error::{Error, Result};

/// Smallest expected count any bin may have.
pub const MIN_EXPECTED: f64 = 5.0;

/// Partition of the integers into consecutive bins by cut points
/// `x_1 < x_2 < …`: `(-∞, x_1], (x_1, x_2], …, (x_last, +∞)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinSpec {
    pub cuts: Vec<u64>,
    /// Null probability of each bin; one more entry than `cuts`.
    pub probs: Vec<f64>,
    /// Null support, used to report finite bounds for the open end bins.
    pub support: (u64, u64),
}

impl BinSpec {
    pub fn bin_count(&self) -> usize {
        self.probs.len()
    }

    /// Index of the bin holding `y`.
    pub fn bin_of(&self, y: u64) -> usize {
        self.cuts.partition_point(|&cut| cut < y)
    }

    /// Inclusive bounds of bin `index`, with the open end bins closed at the
    /// null support.
    pub fn bounds(&self, index: usize) -> (u64, u64) {
        let lo = if index == 0 {
            self.support.0
        } else {
            self.cuts[index - 1] + 1
        };
        let hi = self.cuts.get(index).copied().unwrap_or(self.support.1);
        (lo, hi)
    }

    pub fn expected_counts(&self, n_obs: usize) -> Vec<f64> {
        self.probs.iter().map(|p| p * n_obs as f64).collect()
    }
}

/// Cut points such that every bin has null probability at least `5 / n_obs`.
///
/// Starting from `p = c = 5 / N`, the next cut is the `p`-quantile and the
/// level then advances to `cdf(cut) + c`, while `p + c < 1 - c`. A cut whose
/// CDF already reaches `1 - c` is dropped so the final open bin keeps more
/// than `c` of the mass.
pub fn build_bins(null: &HypergeomNull, n_obs: usize) -> Result<BinSpec> {
    if n_obs < 10 {
        return Err(Error::param(format!(
            "need at least 10 subgraphs to form bins with expected count {MIN_EXPECTED}, got {n_obs}"
        )));
    }
    let table = null.table();
    let c = MIN_EXPECTED / n_obs as f64;
    let mut cuts = Vec::new();
    let mut level = c;
    while level + c < 1.0 - c {
        let cut = table.quantile(level)?;
        let reached = table.cdf(cut as i64);
        if reached >= 1.0 - c {
            break;
        }
        cuts.push(cut);
        level = reached + c;
    }

    let mut probs = Vec::with_capacity(cuts.len() + 1);
    let mut previous = 0.0;
    for &cut in &cuts {
        let now = table.cdf(cut as i64);
        probs.push(now - previous);
        previous = now;
    }
    probs.push(1.0 - previous);

    Ok(BinSpec {
        cuts,
        probs,
        support: null.support(),
    })
}
