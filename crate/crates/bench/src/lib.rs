//! Benchmarks for the verification suites live in `benches/`.
