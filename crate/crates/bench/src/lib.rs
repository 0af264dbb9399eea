//! Benchmark fixtures; the benchmarks live in `benches/`.
