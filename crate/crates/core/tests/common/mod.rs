//! Independent reference implementations shared by the test targets.
#![allow(dead_code)]

/// `ln Γ(df / 2)` by the recurrence from Γ(1) = 1 and Γ(½) = √π.
fn ln_gamma_half_integer(df: u64) -> f64 {
    if df.is_multiple_of(2) {
        (1..df / 2).map(|i| (i as f64).ln()).sum()
    } else {
        0.5 * std::f64::consts::PI.ln()
            + (0..(df - 1) / 2)
                .map(|j| (j as f64 + 0.5).ln())
                .sum::<f64>()
    }
}

fn chi_square_density(t: f64, df: u64) -> f64 {
    let a = df as f64 / 2.0;
    ((a - 1.0) * t.ln() - t / 2.0 - a * std::f64::consts::LN_2 - ln_gamma_half_integer(df)).exp()
}

#[allow(clippy::too_many_arguments)]
fn simpson(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
        return left + right + (left + right - whole) / 15.0;
    }
    simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
        + simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}

fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson(f, a, b, fa, fm, fb, whole, tol, 60)
}

/// Upper tail by adaptive quadrature over unit-width panels until the
/// density is negligible.
pub fn chi_square_sf_quadrature(x: f64, df: u64) -> f64 {
    let upper = x.max(df as f64) + 40.0 * (2.0 * df as f64).sqrt() + 200.0;
    let density = |t: f64| chi_square_density(t, df);
    let mut total = 0.0;
    let mut lo = x;
    while lo < upper {
        let hi = (lo + 1.0).min(upper);
        total += integrate(&density, lo, hi, 1e-14);
        lo = hi;
    }
    total
}

/// Kolmogorov distance between the sample and Uniform(0, 1).
pub fn ks_uniform(mut values: Vec<f64>) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len() as f64;
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| (v - i as f64 / n).abs().max(((i + 1) as f64 / n - v).abs()))
        .fold(0.0, f64::max)
}
