//! Numerical semigroups closed under affine maps.
//!
//! Given tuples `a`, `b` of positive integers, a set `X` and integers
//! `g`, `r`, this crate finds every `g`-element set `C ⊆ {r + 1, →}` such
//! that
//!
//! - if `x, y ≥ r + 1` and `x + y ∈ C` then `x ∈ C` or `y ∈ C`,
//! - if `x ∈ C` and `(x - b_i) / a_i` is an integer `≥ r + 1` then it is in `C`,
//! - `C` and `X` are disjoint.
//!
//! The complements of such sets are numerical semigroups in a Frobenius
//! (pseudo-)variety. [`closure`] computes the smallest member-closed monoid
//! and decides feasibility; [`tree`] enumerates the variety level by level;
//! [`oracle`] is a brute-force cross-check.

pub mod closure;
pub mod error;
pub mod instance;
pub mod oracle;
pub mod semigroup;
pub mod tree;

pub use closure::{
    closure, closure_traced, feasible, instance_closure, is_ab_monoid, one_solution, AbMonoid,
    ClosureOptions, ClosureStep, ClosureTrace, Feasibility, Origin, SubmonoidRep,
};
pub use error::{Error, Result};
pub use instance::ProblemInstance;
pub use oracle::{check_conditions, oracle_solve, CandidateSet, OracleOptions};
pub use semigroup::NumericalSemigroup;
pub use tree::{
    children, enumerate, export_tree, in_variety, solve, SolutionSet, TreeOptions, VarietyNode,
    VarietyTree,
};

/// Greatest common divisor; `gcd(0, n) = n`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Greatest common divisor of all values; `0` for an empty sequence.
pub fn gcd_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(0, gcd)
}
