//! Presentations of skew PBW extensions, canonical elements under the
//! graded lexicographic order, and the rewriting engine that turns the
//! defining relations into executable normal-form arithmetic.

mod check;
mod element;
mod monomial;
mod presentation;
mod rewrite;

pub use check::{check_presentation, CheckReport, Violation};
pub use element::Element;
pub use monomial::{compare_monomials, Monomial};
pub use presentation::{PairRelation, Presentation, Tail};
