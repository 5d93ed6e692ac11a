//! Criterion benchmarks for the `superbgg` kernels live in `benches/`.
