//! Exact arithmetic: rationals, slopes and Dedekind sums.

mod dedekind;
mod rational;
mod slope;

pub use dedekind::{
    dedekind_sum_fast, dedekind_sum_naive, dedekind_symbol, dedekind_symbol_pq, sawtooth,
    symbol_reciprocity_rhs,
};
pub use rational::Rational;
pub use slope::Slope;
