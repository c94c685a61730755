//! Benchmark-only crate; see `benches/identities.rs`.
