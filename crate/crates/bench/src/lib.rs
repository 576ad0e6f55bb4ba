//! Benchmark-only crate; the criterion targets are in `benches/kernels.rs`.
