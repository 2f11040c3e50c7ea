//! Criterion benchmarks for the normalizers; see `benches/`.
