//! Exact symbolic computation in skew PBW extensions.
//!
//! A skew PBW extension is a ring `A` containing a coefficient ring `R`,
//! free as a left `R`-module on the standard monomials
//! `x_1^{a_1} ... x_n^{a_n}`, whose generators satisfy
//!
//! ```text
//! x_i r   = sigma_i(r) x_i + delta_i(r)           (r in R)
//! x_j x_i = c_ij x_i x_j + d^1 x_1 + ... + d^n x_n + d^0   (i < j)
//! ```
//!
//! This crate provides:
//!
//! - [`coeff`]: exact coefficient rings (rationals, univariate rational
//!   functions, multivariate polynomials) with endomorphisms,
//!   sigma-derivations, and coefficient-level Ore pairs;
//! - [`pbw`]: finite presentations, canonical elements under the graded
//!   lexicographic order, and the rewriting engine that computes normal
//!   forms of products;
//! - [`graded`]: the degree filtration, principal symbols, and the
//!   associated graded (quasi-commutative) presentation;
//! - [`ore`]: constructive Ore solvers relative to a multiplicative set of
//!   coefficients, fraction arithmetic, and localized presentations over
//!   the coefficient fraction field;
//! - [`quantum`]: multiparametric skew quantum spaces, the Laurent engine
//!   for the partially inverted ring, and the dual-route structure check
//!   for its localization;
//! - [`algebras`]: a catalog of benchmark presentations (Weyl, shift,
//!   quantum plane/space, enveloping algebras) together with independent
//!   brute-force oracles used by the test suites;
//! - [`sample`]: deterministic random sampling of ring values, elements,
//!   and fractions.

pub mod algebras;
pub mod coeff;
pub mod error;
pub mod graded;
pub mod ore;
pub mod pbw;
pub mod quantum;
pub mod sample;

pub use error::{Error, Result};
