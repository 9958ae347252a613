//! Benchmark-only crate; the measured workloads live in `benches/`.
