//! Criterion benchmarks for the `moser` library; see `benches/algorithms.rs`.
