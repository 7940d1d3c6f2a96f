//! Benchmark-only crate; see `benches/invariants.rs`.

use cosmo_core::BigInt;

/// Coprime `(p, q)` pairs spread over several magnitudes.
pub fn dedekind_inputs() -> Vec<(BigInt, BigInt)> {
    [(1, 7), (5, 101), (377, 610), (9_973, 10_007), (123_457, 1_000_003)]
        .into_iter()
        .map(|(p, q): (i64, i64)| (BigInt::from(p), BigInt::from(q)))
        .collect()
}
