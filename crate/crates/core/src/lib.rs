//! Tests for homogeneity of edge probability in a single observed network.
//!
//! Subgraphs are drawn by uniform node sampling and their edge counts are
//! compared, by a binned chi-square goodness-of-fit test, with the
//! hypergeometric law they would follow if every node pair shared one edge
//! probability. The p-value comes either from the chi-square reference
//! distribution ([`approximation_test`]) or from simulated homogeneous
//! networks with the same size ([`empirical_test`]).
//!
//! ```
//! use netgof_core::{approximation_test, generate_gnm, optimal_subgraph_size, RngSeed};
//!
//! let g = generate_gnm(500, 1250, RngSeed(1)).unwrap();
//! let k = optimal_subgraph_size(g.node_count()).unwrap();
//! let result = approximation_test(&g, k, 1000, RngSeed(2)).unwrap();
//! assert!((0.0..=1.0).contains(&result.p_value));
//! ```

pub mod dist;
pub mod error;
pub mod experiments;
pub mod gof;
pub mod graph;
pub mod seed;

pub use dist::{
    chi_square_sf, hypergeom_cdf, hypergeom_pmf, hypergeom_quantile, optimal_subgraph_size,
    HypergeomNull,
};
pub use error::{Error, Result};
pub use experiments::{calibrate_two_colour, ExperimentConfig, ExperimentRow};
pub use gof::{
    approximation_test, build_bins, chi_square_statistic, empirical_test,
    exact_edge_count_distribution, BinSpec, BinnedCounts, Method, TestOptions, TestResult,
};
pub use graph::{
    generate_gnm, generate_gnp, generate_two_colour, parse_edge_list, sample_subgraph_edge_count,
    Graph, TwoColourParams,
};
pub use seed::RngSeed;
