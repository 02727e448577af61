//! Criterion benchmarks for `polycontact`; see `benches/`.
