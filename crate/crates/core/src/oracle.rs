//! Brute-force reference solver.
//!
//! Checks the four defining conditions directly on every `g`-subset of a
//! bounded candidate universe. Intentionally naive; used as ground truth.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::instance::ProblemInstance;
use crate::tree::SolutionSet;

pub const DEFAULT_MAX_SCALE: u64 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    /// Largest `r + g` accepted.
    pub max_scale: u64,
    /// Extra integers appended to the candidate universe past `2(r + g) - 1`.
    pub universe_slack: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            max_scale: DEFAULT_MAX_SCALE,
            universe_slack: 0,
        }
    }
}

/// A finite set of integers proposed as a solution.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CandidateSet(Vec<u64>);

impl CandidateSet {
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Self {
        let mut v: Vec<u64> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

/// Whether `c` solves `P_r(a, b, X, g)`:
///
/// 1. `|C| = g` and `C ⊆ {r + 1, →}`;
/// 2. `x, y ≥ r + 1` with `x + y ∈ C` implies `x ∈ C` or `y ∈ C`;
/// 3. `x ∈ C` and `(x - b_i) / a_i ∈ {r + 1, →}` implies that quotient is in `C`;
/// 4. `X ∩ C = ∅`.
pub fn check_conditions(c: &CandidateSet, inst: &ProblemInstance) -> bool {
    let r = inst.r();
    let elems = c.elements();
    if elems.len() as u64 != inst.g() || elems.first().is_some_and(|&lo| lo <= r) {
        return false;
    }
    let sums_ok = elems.iter().all(|&z| {
        (r + 1..)
            .take_while(|&x| x <= z.saturating_sub(r + 1))
            .all(|x| c.contains(x) || c.contains(z - x))
    });
    let divisors_ok = elems.iter().all(|&x| {
        inst.maps().all(|(a, b)| {
            if x <= b || (x - b) % a != 0 {
                return true;
            }
            let q = (x - b) / a;
            q <= r || c.contains(q)
        })
    });
    let avoids_x = inst.x().iter().all(|&v| !c.contains(v));
    sums_ok && divisors_ok && avoids_x
}

/// Every solution of `P_r(a, b, X, g)` found by exhaustive search.
///
/// The complement `{0, r + 1, →} ∖ C` of a solution is a numerical
/// semigroup `S` of genus `r + g`. For any member `0 < s < F(S)` the
/// integer `F(S) - s` must be a gap (else `F(S)` would be a sum of members),
/// so at most half of `{1, ..., F(S) - 1}` are members and
/// `F(S) ≤ 2·g(S) - 1`. Hence every solution lies inside
/// `{r + 1, ..., 2(r + g) - 1}`.
pub fn oracle_solve(inst: &ProblemInstance, options: &OracleOptions) -> Result<SolutionSet> {
    let r = inst.r();
    let g = inst.g();
    let scale = r.checked_add(g).ok_or(Error::Overflow)?;
    if scale > options.max_scale {
        return Err(Error::ScaleTooLarge {
            scale,
            bound: options.max_scale,
        });
    }
    let top = (2 * scale).saturating_sub(1) + options.universe_slack;
    let mut examined = 0usize;
    let solutions: Vec<Vec<u64>> = (r + 1..=top)
        .combinations(g as usize)
        .filter(|subset| {
            examined += 1;
            check_conditions(&CandidateSet(subset.clone()), inst)
        })
        .collect();
    Ok(SolutionSet {
        solutions,
        node_count: examined,
        truncated: false,
    })
}
