//! Invariants read off a Seifert matrix: the Conway polynomial, `Δ''(1)`,
//! Levine–Tristram signatures and the Casson–Gordon surgery formula.

mod alexander;
mod matrix;
mod signature;

use num_traits::{Signed, ToPrimitive, Zero};

pub use alexander::{alexander_second_derivative, conway_from_seifert, is_knot_matrix, second_derivative_from_conway};
pub use matrix::{seifert_torus2, SeifertMatrix};
pub use signature::{levine_tristram_signature, symmetric_eigenvalues, total_p_signature};

use crate::arith::{dedekind_sum_fast, Rational, Slope};
use crate::{Error, Result};

/// `τ(Σ_K(p/q)) = -4p s(q, p) - σ(K, p)` for `p > 0`.
pub fn casson_gordon_tau(s: &SeifertMatrix, slope: &Slope) -> Result<Rational> {
    let (p, q) = (slope.p(), slope.q());
    if !p.is_positive() {
        return Err(Error::OutOfRange(format!("Casson-Gordon formula needs p > 0, got slope {slope}")));
    }
    let p_small = p
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter(format!("p = {p} too large to enumerate roots of unity")))?;
    let dedekind = Rational::integer(-4 * p) * dedekind_sum_fast(q, p)?;
    let sigma = if s.size().is_zero() { 0 } else { total_p_signature(s, p_small)? };
    Ok(dedekind - Rational::from(sigma))
}
