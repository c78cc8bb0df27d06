//! Criterion benchmarks for `phi4-core`; see `benches/`.
