//! Goodness-of-fit tests for edge-probability homogeneity.

mod bins;
mod exact;
mod stat;

pub use bins::{build_bins, BinSpec, MIN_EXPECTED};
pub use exact::{exact_edge_count_distribution, ExactDistribution, ENUMERATION_LIMIT};
pub use stat::{chi_square_statistic, BinnedCounts};
pub use test::{
    approximation_test, draw_edge_counts, empirical_p_value, empirical_p_value_add_one,
    empirical_test, BinRecord, Method, TestOptions, TestResult, DEFAULT_REPLICATES,
    DEFAULT_SUBGRAPHS,
};
