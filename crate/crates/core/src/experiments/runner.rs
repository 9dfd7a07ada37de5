use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::calibrate::calibrate_two_colour;
use super::wilson::{wilson_interval, Z_95};
use crate::error::{Error, Result};
use crate::gof::{Method, TestOptions, DEFAULT_REPLICATES, DEFAULT_SUBGRAPHS};
use crate::graph::{generate_gnm, generate_two_colour, pair_count, Graph};
use crate::seed::RngSeed;

/// `round(10^e)` for `e = 2.00, 2.25, …, 4.00`.
pub fn full_sizes() -> Vec<usize> {
    (0..=8)
        .map(|i| 10f64.powf(2.0 + 0.25 * i as f64).round() as usize)
        .collect()
}

pub const FULL_MEAN_DEGREES: [f64; 4] = [1.0, 3.0, 5.0, 10.0];
pub const FULL_RATIOS: [f64; 6] = [0.01, 0.1, 0.2, 0.5, 0.75, 1.0];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub sizes: Vec<usize>,
    pub mean_degrees: Vec<f64>,
    /// Heterogeneity ratios; power study only.
    pub ratios: Vec<f64>,
    /// Simulated networks per cell (timing: timed runs per cell).
    pub replications: usize,
    pub n_subgraphs: usize,
    /// Null replicates per empirical test.
    pub replicates: usize,
    /// Fixed subgraph size; `None` uses the variance-maximising size.
    pub subgraph_size: Option<usize>,
    pub alpha: f64,
    pub method: Method,
    pub base_seed: RngSeed,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            sizes: vec![100, 316, 1000],
            mean_degrees: vec![5.0],
            ratios: FULL_RATIOS.to_vec(),
            replications: 100,
            n_subgraphs: DEFAULT_SUBGRAPHS,
            replicates: DEFAULT_REPLICATES,
            subgraph_size: None,
            alpha: 0.05,
            method: Method::Approximation,
            base_seed: RngSeed(0),
        }
    }
}

impl ExperimentConfig {
    /// Full significance grid: every size for the approximation test with 500
    /// networks per cell; sizes up to 1000 with 200 networks for the
    /// empirical test.
    pub fn full_significance(method: Method) -> Self {
        let (sizes, replications) = match method {
            Method::Approximation => (full_sizes(), 500),
            Method::Empirical => (
                full_sizes().into_iter().filter(|&n| n <= 1000).collect(),
                200,
            ),
        };
        ExperimentConfig {
            sizes,
            mean_degrees: FULL_MEAN_DEGREES.to_vec(),
            replications,
            method,
            ..ExperimentConfig::default()
        }
    }

    /// Full power grid. The two-colour model splits nodes evenly, so odd
    /// sizes are bumped to the next even number.
    pub fn full_power() -> Self {
        ExperimentConfig {
            sizes: full_sizes().into_iter().map(|n| n + n % 2).collect(),
            mean_degrees: FULL_MEAN_DEGREES.to_vec(),
            ratios: FULL_RATIOS.to_vec(),
            replications: 500,
            ..ExperimentConfig::default()
        }
    }

    /// Timing grid: all sizes at mean degree 5, 100 timed runs per cell.
    pub fn full_timing(method: Method) -> Self {
        let sizes = match method {
            Method::Approximation => full_sizes(),
            Method::Empirical => full_sizes().into_iter().filter(|&n| n <= 1000).collect(),
        };
        ExperimentConfig {
            sizes,
            mean_degrees: vec![5.0],
            replications: 100,
            method,
            ..ExperimentConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() || self.mean_degrees.is_empty() {
            return Err(Error::param(
                "experiment grid needs at least one size and one mean degree",
            ));
        }
        if let Some(&n) = self.sizes.iter().find(|&&n| n < 2) {
            return Err(Error::param(format!("network size {n} is below 2")));
        }
        if let Some(&d) = self
            .mean_degrees
            .iter()
            .find(|&&d| !(d > 0.0 && d.is_finite()))
        {
            return Err(Error::param(format!("mean degree {d} must be positive")));
        }
        if let Some(&r) = self.ratios.iter().find(|&&r| !(0.0..=1.0).contains(&r)) {
            return Err(Error::param(format!("ratio {r} outside [0, 1]")));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::param(format!("alpha {} outside (0, 1)", self.alpha)));
        }
        if self.replications == 0 {
            return Err(Error::param("replications must be positive"));
        }
        if self.n_subgraphs < 10 {
            return Err(Error::param(format!(
                "need at least 10 subgraphs, got {}",
                self.n_subgraphs
            )));
        }
        if self.method == Method::Empirical && self.replicates == 0 {
            return Err(Error::param("empirical test needs at least one replicate"));
        }
        Ok(())
    }

    fn test_options(&self) -> TestOptions {
        TestOptions {
            subgraph_size: self.subgraph_size,
            n_subgraphs: Some(self.n_subgraphs),
            replicates: Some(self.replicates),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Study {
    Significance,
    Power,
    Timing,
}

/// One cell of a study grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub study: Study,
    pub method: Method,
    pub size: usize,
    pub mean_degree: f64,
    pub ratio: Option<f64>,
    pub trials: usize,
    pub rejections: usize,
    pub rejection_rate: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    /// Mean wall-clock seconds per test.
    pub mean_runtime: f64,
    /// Mean number of bins the test could form.
    pub mean_bins: f64,
    pub skipped: Option<String>,
}

impl ExperimentRow {
    fn skipped(
        study: Study,
        method: Method,
        size: usize,
        mean_degree: f64,
        ratio: Option<f64>,
        reason: String,
    ) -> Self {
        ExperimentRow {
            study,
            method,
            size,
            mean_degree,
            ratio,
            trials: 0,
            rejections: 0,
            rejection_rate: 0.0,
            ci_lo: 0.0,
            ci_hi: 1.0,
            mean_runtime: 0.0,
            mean_bins: 0.0,
            skipped: Some(reason),
        }
    }
}

struct Outcome {
    rejected: bool,
    seconds: f64,
    bins: usize,
}

fn summarise(
    study: Study,
    method: Method,
    size: usize,
    mean_degree: f64,
    ratio: Option<f64>,
    outcomes: &[Outcome],
) -> ExperimentRow {
    let trials = outcomes.len();
    let rejections = outcomes.iter().filter(|o| o.rejected).count();
    let (ci_lo, ci_hi) = wilson_interval(rejections, trials, Z_95);
    let mean = |f: fn(&Outcome) -> f64| outcomes.iter().map(f).sum::<f64>() / trials as f64;
    ExperimentRow {
        study,
        method,
        size,
        mean_degree,
        ratio,
        trials,
        rejections,
        rejection_rate: rejections as f64 / trials as f64,
        ci_lo,
        ci_hi,
        mean_runtime: mean(|o| o.seconds),
        mean_bins: mean(|o| o.bins as f64),
        skipped: None,
    }
}

fn timed_test(config: &ExperimentConfig, g: &Graph, seed: RngSeed) -> Result<Outcome> {
    let start = Instant::now();
    let result = config.test_options().run(config.method, g, seed)?;
    Ok(Outcome {
        rejected: result.p_value <= config.alpha,
        seconds: start.elapsed().as_secs_f64(),
        bins: result.bin_count,
    })
}

/// Edge count for a homogeneous network, or why the cell is infeasible.
fn homogeneous_edges(n: usize, mean_degree: f64) -> std::result::Result<u64, String> {
    if mean_degree >= (n - 1) as f64 {
        return Err(format!(
            "mean degree {mean_degree} is not below |V| - 1 = {}",
            n - 1
        ));
    }
    let m = (mean_degree * n as f64 / 2.0).round() as u64;
    if m > pair_count(n) {
        return Err(format!("{m} edges exceed C({n}, 2)"));
    }
    Ok(m)
}

fn homogeneous_cells(config: &ExperimentConfig) -> Vec<(usize, f64)> {
    config
        .sizes
        .iter()
        .flat_map(|&n| config.mean_degrees.iter().map(move |&d| (n, d)))
        .collect()
}

fn replicate_homogeneous(
    config: &ExperimentConfig,
    cell: u64,
    n: usize,
    m: u64,
) -> Result<Vec<Outcome>> {
    (0..config.replications as u64)
        .into_par_iter()
        .map(|rep| {
            let job = config.base_seed.derive_path(&[cell, rep]);
            let g = generate_gnm(n, m, job.derive(0))?;
            timed_test(config, &g, job.derive(1))
        })
        .collect()
}

/// Rejection rate of the configured test on homogeneous G(n, m) networks
/// with `m = round(d n / 2)`, one row per (size, mean degree).
pub fn run_significance(config: &ExperimentConfig) -> Result<Vec<ExperimentRow>> {
    run_significance_with(config, |_| {})
}

pub fn run_significance_with(
    config: &ExperimentConfig,
    mut on_row: impl FnMut(&ExperimentRow),
) -> Result<Vec<ExperimentRow>> {
    config.validate()?;
    let mut rows = Vec::new();
    for (cell, (n, d)) in homogeneous_cells(config).into_iter().enumerate() {
        let row = match homogeneous_edges(n, d) {
            Err(reason) => {
                ExperimentRow::skipped(Study::Significance, config.method, n, d, None, reason)
            }
            Ok(m) => {
                let outcomes = replicate_homogeneous(config, cell as u64, n, m)?;
                summarise(Study::Significance, config.method, n, d, None, &outcomes)
            }
        };
        on_row(&row);
        rows.push(row);
    }
    Ok(rows)
}

/// Rejection rate of the approximation test on two-colour networks, one row
/// per (size, mean degree, ratio).
pub fn run_power(config: &ExperimentConfig) -> Result<Vec<ExperimentRow>> {
    run_power_with(config, |_| {})
}

pub fn run_power_with(
    config: &ExperimentConfig,
    mut on_row: impl FnMut(&ExperimentRow),
) -> Result<Vec<ExperimentRow>> {
    config.validate()?;
    if config.method != Method::Approximation {
        return Err(Error::param(
            "the power study runs the approximation test only",
        ));
    }
    if config.ratios.is_empty() {
        return Err(Error::param("power study needs at least one ratio"));
    }
    let mut rows = Vec::new();
    let mut cell = 0u64;
    for &n in &config.sizes {
        for &d in &config.mean_degrees {
            for &r in &config.ratios {
                let row = match calibrate_two_colour(n, d, r) {
                    Err(e) => ExperimentRow::skipped(
                        Study::Power,
                        config.method,
                        n,
                        d,
                        Some(r),
                        e.to_string(),
                    ),
                    Ok(params) => {
                        let outcomes: Vec<Outcome> = (0..config.replications as u64)
                            .into_par_iter()
                            .map(|rep| {
                                let job = config.base_seed.derive_path(&[cell, rep]);
                                let g = generate_two_colour(params, job.derive(0))?;
                                timed_test(config, &g, job.derive(1))
                            })
                            .collect::<Result<_>>()?;
                        summarise(Study::Power, config.method, n, d, Some(r), &outcomes)
                    }
                };
                cell += 1;
                on_row(&row);
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// Mean wall-clock time of the configured test on homogeneous networks.
/// Runs on a single worker thread so cells do not compete for cores.
pub fn run_timing(config: &ExperimentConfig) -> Result<Vec<ExperimentRow>> {
    run_timing_with(config, |_| {})
}

pub fn run_timing_with(
    config: &ExperimentConfig,
    mut on_row: impl FnMut(&ExperimentRow),
) -> Result<Vec<ExperimentRow>> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| Error::param(format!("cannot build timing thread pool: {e}")))?;
    let mut rows = Vec::new();
    for (cell, (n, d)) in homogeneous_cells(config).into_iter().enumerate() {
        let row = match homogeneous_edges(n, d) {
            Err(reason) => ExperimentRow::skipped(Study::Timing, config.method, n, d, None, reason),
            Ok(m) => {
                let outcomes = pool.install(|| {
                    (0..config.replications as u64)
                        .map(|rep| {
                            let job = config.base_seed.derive_path(&[cell as u64, rep]);
                            let g = generate_gnm(n, m, job.derive(0))?;
                            timed_test(config, &g, job.derive(1))
                        })
                        .collect::<Result<Vec<_>>>()
                })?;
                summarise(Study::Timing, config.method, n, d, None, &outcomes)
            }
        };
        on_row(&row);
        rows.push(row);
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[ExperimentRow], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(rows: &[ExperimentRow], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    writeln!(out)?;
    Ok(())
}
