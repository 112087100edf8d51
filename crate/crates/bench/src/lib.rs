//! Criterion benchmarks for the enumerators; see `benches/`.
