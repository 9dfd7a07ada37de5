//! Criterion benchmarks for `netgof-core`; see `benches/`.
