//! Criterion benchmarks for nullcover live under `benches/`.
