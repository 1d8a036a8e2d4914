//! Exact coefficient rings: the rational field, univariate rational
//! function fields, and multivariate polynomial rings over the rationals,
//! together with their endomorphisms, sigma-derivations, and
//! coefficient-level Ore pairs.
//!
//! All shipped rings are commutative domains, so the regular elements are
//! exactly the nonzero ones and Ore pairs are immediate. Values are
//! immutable and canonical: two values are equal in the ring if and only
//! if their representations are equal.

mod endo;
mod multipoly;
mod orepair;
mod ratfunc;
pub mod text;
mod unipoly;
mod value;

pub use endo::{apply_deriv, apply_endo, apply_endo_inv, DerivSpec, EndoSpec};
pub use multipoly::{format_multipoly, MultiPoly};
pub use orepair::{ore_pair_left, ore_pair_right};
pub use ratfunc::{format_ratfunc, RatFunc};
pub use unipoly::{format_rat, rat, rat_int, Rat, UniPoly};
pub use value::{
    add, arith, div, invert, is_display_negative, mul, poly_degree, pow_int, sub, ArithOp,
    CoeffRingSpec, CoeffValue,
};
