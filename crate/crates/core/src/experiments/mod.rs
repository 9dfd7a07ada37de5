//! Monte-Carlo studies of significance level, power and run time.

mod calibrate;
mod runner;
mod wilson;

pub use calibrate::calibrate_two_colour;
pub use runner::{
    full_sizes, run_power, run_power_with, run_significance, run_significance_with, run_timing,
    run_timing_with, write_csv, write_json, ExperimentConfig, ExperimentRow, Study,
    FULL_MEAN_DEGREES, FULL_RATIOS,
};
pub use wilson::{wilson_interval, Z_95};
