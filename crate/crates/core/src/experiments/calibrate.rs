use crate::error::{Error, Result};
use crate::graph::TwoColourParams;

/// Two equal classes whose edge probabilities have heterogeneity ratio
/// `r = (q - p) / (p + q)` and expected average degree `mean_degree`.
///
/// With `s = p + q`, the expected degree averaged over both classes is
/// `(s/2)(n/2 - 1) + sqrt(pq)(n/2)` and `sqrt(pq) = (s/2) sqrt(1 - r²)`, so
/// `s = 2 d / ((n/2 - 1) + (n/2) sqrt(1 - r²))`.
pub fn calibrate_two_colour(n: usize, mean_degree: f64, ratio: f64) -> Result<TwoColourParams> {
    if !n.is_multiple_of(2) || n < 2 {
        return Err(Error::param(format!(
            "two-colour model needs an even node count, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&ratio) {
        return Err(Error::param(format!("ratio r = {ratio} outside [0, 1]")));
    }
    if !mean_degree.is_finite() || mean_degree < 0.0 {
        return Err(Error::param(format!(
            "mean degree {mean_degree} must be non-negative"
        )));
    }
    let half = (n / 2) as f64;
    let denominator = (half - 1.0) + half * (1.0 - ratio * ratio).sqrt();
    if denominator <= 0.0 {
        return Err(Error::Calibration(format!(
            "no edges are possible for n = {n} at r = {ratio}"
        )));
    }
    let s = 2.0 * mean_degree / denominator;
    let p = s * (1.0 - ratio) / 2.0;
    let q = s * (1.0 + ratio) / 2.0;
    if !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&q) {
        return Err(Error::Calibration(format!(
            "n = {n}, mean degree {mean_degree}, r = {ratio} needs p = {p:.6}, q = {q:.6}"
        )));
    }
    TwoColourParams::new(n / 2, n / 2, p, q)
}
