//! Benchmark-only crate; see `benches/representations.rs`.
