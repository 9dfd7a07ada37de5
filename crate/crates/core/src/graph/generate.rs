use std::collections::HashSet;

use rand::Rng as _;
use rand_distr::{Distribution, Geometric};
use serde::{Deserialize, Serialize};

use super::{pair_count, Graph};
use crate::error::{Error, Result};
use crate::seed::{Rng, RngSeed};

/// Uniform random graph with exactly `m` edges, G(n, m).
///
/// Sparse requests draw random pairs and reject repeats; when more than half
/// of all pairs are requested, the missing pairs are drawn instead.
pub fn generate_gnm(n: usize, m: u64, seed: RngSeed) -> Result<Graph> {
    let total = pair_count(n);
    if m > total {
        return Err(Error::param(format!(
            "G(n,m): m = {m} exceeds C({n}, 2) = {total}"
        )));
    }
    check_node_count(n)?;
    let mut rng = seed.rng();

    let edges = if m <= total / 2 {
        let mut chosen = draw_distinct_pairs(n, m, &mut rng);
        chosen.sort_unstable();
        chosen
    } else {
        let excluded: HashSet<(u32, u32)> = draw_distinct_pairs(n, total - m, &mut rng)
            .into_iter()
            .collect();
        let mut edges = Vec::with_capacity(m as usize);
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if !excluded.contains(&(u, v)) {
                    edges.push((u, v));
                }
            }
        }
        edges
    };
    debug_assert_eq!(edges.len() as u64, m);
    Ok(Graph::from_canonical(n, edges))
}

fn draw_distinct_pairs(n: usize, count: u64, rng: &mut Rng) -> Vec<(u32, u32)> {
    let mut seen = HashSet::with_capacity(count as usize);
    let mut pairs = Vec::with_capacity(count as usize);
    while (pairs.len() as u64) < count {
        let a = rng.random_range(0..n as u32);
        let b = rng.random_range(0..n as u32);
        if a == b {
            continue;
        }
        let pair = if a < b { (a, b) } else { (b, a) };
        if seen.insert(pair) {
            pairs.push(pair);
        }
    }
    pairs
}

/// Independent-edge random graph, G(n, p).
pub fn generate_gnp(n: usize, p: f64, seed: RngSeed) -> Result<Graph> {
    check_probability("p", p)?;
    check_node_count(n)?;
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    triangular_block(0, n, p, &mut rng, &mut edges);
    Ok(Graph::from_canonical(n, edges))
}

/// Two node classes with within-class edge probabilities `p` (red) and `q`
/// (blue), and `sqrt(p * q)` across classes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoColourParams {
    /// Red nodes, ids `0..n1`.
    pub n1: usize,
    /// Blue nodes, ids `n1..n1 + n2`.
    pub n2: usize,
    pub p: f64,
    pub q: f64,
}

impl TwoColourParams {
    pub fn new(n1: usize, n2: usize, p: f64, q: f64) -> Result<Self> {
        let params = TwoColourParams { n1, n2, p, q };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        check_probability("p", self.p)?;
        check_probability("q", self.q)?;
        check_node_count(self.n1 + self.n2)
    }

    pub fn node_count(&self) -> usize {
        self.n1 + self.n2
    }

    pub fn cross_probability(&self) -> f64 {
        (self.p * self.q).sqrt()
    }

    /// `(q - p) / (p + q)`, zero for an empty model.
    pub fn ratio(&self) -> f64 {
        let s = self.p + self.q;
        if s == 0.0 {
            0.0
        } else {
            (self.q - self.p) / s
        }
    }

    /// Expected number of edges.
    pub fn expected_edges(&self) -> f64 {
        self.p * pair_count(self.n1) as f64
            + self.q * pair_count(self.n2) as f64
            + self.cross_probability() * (self.n1 as f64) * (self.n2 as f64)
    }

    /// Expected average node degree, `2 E[|E|] / |V|`.
    pub fn expected_mean_degree(&self) -> f64 {
        let n = self.node_count();
        if n == 0 {
            0.0
        } else {
            2.0 * self.expected_edges() / n as f64
        }
    }
}

pub fn generate_two_colour(params: TwoColourParams, seed: RngSeed) -> Result<Graph> {
    params.validate()?;
    let TwoColourParams { n1, n2, p, q } = params;
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    triangular_block(0, n1, p, &mut rng, &mut edges);
    triangular_block(n1, n2, q, &mut rng, &mut edges);
    let cross = params.cross_probability();
    bernoulli_indices((n1 as u64) * (n2 as u64), cross, &mut rng, |idx| {
        let red = idx / n2 as u64;
        let blue = n1 as u64 + idx % n2 as u64;
        edges.push((red as u32, blue as u32));
    });
    edges.sort_unstable();
    Ok(Graph::from_canonical(n1 + n2, edges))
}

/// Bernoulli(p) edges among nodes `base..base + len`, appended in sorted order.
fn triangular_block(base: usize, len: usize, p: f64, rng: &mut Rng, edges: &mut Vec<(u32, u32)>) {
    let mut row = 0u64;
    let mut row_start = 0u64;
    let len = len as u64;
    bernoulli_indices(pair_count(len as usize), p, rng, |idx| {
        // Row `i` covers pairs (i, i+1..len) and holds len - 1 - i entries.
        while idx >= row_start + (len - 1 - row) {
            row_start += len - 1 - row;
            row += 1;
        }
        let col = row + 1 + (idx - row_start);
        edges.push(((base as u64 + row) as u32, (base as u64 + col) as u32));
    });
}

/// Visits, in increasing order, the indices in `0..len` that succeed in
/// independent Bernoulli(p) trials, skipping failures geometrically.
fn bernoulli_indices(len: u64, p: f64, rng: &mut Rng, mut emit: impl FnMut(u64)) {
    if len == 0 || p <= 0.0 {
        return;
    }
    if p >= 1.0 {
        (0..len).for_each(emit);
        return;
    }
    let skips = Geometric::new(p).expect("p checked to lie in (0, 1)");
    let mut next = 0u64;
    loop {
        let idx = match next.checked_add(skips.sample(rng)) {
            Some(idx) if idx < len => idx,
            _ => return,
        };
        emit(idx);
        next = idx + 1;
    }
}

fn check_probability(name: &str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::param(format!(
            "{name} = {value} is not a probability"
        )))
    }
}

fn check_node_count(n: usize) -> Result<()> {
    if n > u32::MAX as usize {
        Err(Error::param(format!("node count {n} exceeds u32 ids")))
    } else {
        Ok(())
    }
}
