//! Benchmark-only package; the measurements live in `benches/core_ops.rs`.
