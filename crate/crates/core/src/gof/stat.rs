use serde::{Deserialize, Serialize};

use super::bins::BinSpec;
use crate::error::{Error, Result};

/// Observed and expected counts per bin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinnedCounts {
    pub observed: Vec<u64>,
    pub expected: Vec<f64>,
}

impl BinnedCounts {
    pub fn new(observed: Vec<u64>, expected: Vec<f64>) -> Result<Self> {
        if observed.len() != expected.len() || observed.is_empty() {
            return Err(Error::param(format!(
                "{} observed vs {} expected bins",
                observed.len(),
                expected.len()
            )));
        }
        Ok(BinnedCounts { observed, expected })
    }

    /// Sorts `edge_counts` into the bins of `spec`.
    pub fn tabulate(spec: &BinSpec, edge_counts: &[u64]) -> Self {
        let mut observed = vec![0u64; spec.bin_count()];
        for &y in edge_counts {
            observed[spec.bin_of(y)] += 1;
        }
        BinnedCounts {
            observed,
            expected: spec.expected_counts(edge_counts.len()),
        }
    }

    pub fn bin_count(&self) -> usize {
        self.observed.len()
    }

    pub fn total(&self) -> u64 {
        self.observed.iter().sum()
    }
}

/// Pearson's `Σ (f - e)² / e`.
pub fn chi_square_statistic(counts: &BinnedCounts) -> Result<f64> {
    if counts.observed.len() != counts.expected.len() {
        return Err(Error::param(
            "observed and expected bin counts differ in length",
        ));
    }
    counts
        .observed
        .iter()
        .zip(&counts.expected)
        .map(|(&f, &e)| {
            if e > 0.0 {
                let d = f as f64 - e;
                Ok(d * d / e)
            } else {
                Err(Error::param(format!("expected count {e} must be positive")))
            }
        })
        .sum()
}
