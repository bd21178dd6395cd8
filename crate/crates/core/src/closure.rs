//! Smallest `(a, b)`-monoids.
//!
//! A submonoid `M` of `(ℕ, +)` is an `(a, b)`-monoid when `a_i·m + b_i ∈ M`
//! for every non-zero `m ∈ M` and every `i`. The smallest one containing a
//! set `X` is computed by a worklist over candidate generators after
//! factoring out `d = gcd(X ∪ {b_1, ..., b_n})`, which turns the problem into
//! one whose answer is a numerical semigroup.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Bound;

use crate::error::{Error, Result};
use crate::instance::{validate_maps, ProblemInstance};
use crate::semigroup::NumericalSemigroup;
use crate::{gcd, gcd_all};

/// Default bound on the number of generators the worklist may accumulate.
pub const DEFAULT_MAX_GENERATORS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureOptions {
    pub max_generators: usize,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        Self {
            max_generators: DEFAULT_MAX_GENERATORS,
        }
    }
}

/// The monoid `d·S` for a numerical semigroup `S`.
///
/// It has finite complement in `ℕ` exactly when `d = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubmonoidRep {
    d: u64,
    base: NumericalSemigroup,
}

impl SubmonoidRep {
    pub fn new(d: u64, base: NumericalSemigroup) -> Self {
        assert!(d > 0, "scale factor must be positive");
        Self { d, base }
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn finite_complement(&self) -> bool {
        self.d == 1
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x as u64).is_multiple_of(self.d) && self.base.contains(x / self.d as i64)
    }

    /// Minimal generators of `d·S`, i.e. `d·msg(S)`.
    pub fn generators(&self) -> Result<Vec<u64>> {
        self.base
            .msg()
            .iter()
            .map(|&g| g.checked_mul(self.d).ok_or(Error::Overflow))
            .collect()
    }

    /// `|ℕ ∖ M|`, or `None` when infinite.
    pub fn gap_count(&self) -> Option<u64> {
        self.finite_complement().then(|| self.base.genus() as u64)
    }

    /// `{0, r + 1, →} ∖ M` in ascending order. Unbounded when `d > 1`.
    pub fn gaps_within(&self, r: u64) -> impl Iterator<Item = u64> + '_ {
        let last = match self.d {
            1 => self.base.gaps().last().copied().unwrap_or(0),
            _ => u64::MAX,
        };
        (r + 1..=last).filter(move |&x| !self.contains(x as i64))
    }
}

/// `M(a, b, X)` for a possibly empty `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbMonoid {
    /// The monoid `{0}`, obtained for `X = ∅`.
    Trivial,
    Generated(SubmonoidRep),
}

impl AbMonoid {
    pub fn contains(&self, x: i64) -> bool {
        match self {
            AbMonoid::Trivial => x == 0,
            AbMonoid::Generated(rep) => rep.contains(x),
        }
    }

    pub fn finite_complement(&self) -> bool {
        matches!(self, AbMonoid::Generated(rep) if rep.finite_complement())
    }

    /// `|{0, r + 1, →} ∖ M|`, or `None` when infinite.
    pub fn gap_count_within(&self, r: u64) -> Option<u64> {
        match self {
            AbMonoid::Trivial => None,
            AbMonoid::Generated(rep) => rep.gap_count().map(|c| c.saturating_sub(r)),
        }
    }

    /// `{0, r + 1, →} ∖ M` in ascending order, possibly unbounded.
    pub fn gaps_within(&self, r: u64) -> Box<dyn Iterator<Item = u64> + '_> {
        match self {
            AbMonoid::Trivial => Box::new(r + 1..),
            AbMonoid::Generated(rep) => Box::new(rep.gaps_within(r)),
        }
    }
}

/// One pass of the worklist: the processed element `m` and the images
/// `a_i·m + b_i` that were not yet in the generated monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureStep {
    pub m: u64,
    pub added: Vec<u64>,
}

/// Where a generator of the worklist came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Seed,
    /// `a_map·of + b_map`.
    Image {
        of: u64,
        map: usize,
    },
}

/// Full record of a closure computation, in the reduced coordinates
/// (after dividing by `d`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureTrace {
    pub result: SubmonoidRep,
    pub steps: Vec<ClosureStep>,
    pub origins: BTreeMap<u64, Origin>,
}

/// Membership in the monoid generated by a growing set, via a lazily
/// extended dynamic-programming table.
struct GeneratedMonoid {
    gens: Vec<u64>,
    table: Vec<bool>,
}

impl GeneratedMonoid {
    fn new(gens: impl IntoIterator<Item = u64>) -> Self {
        let mut gens: Vec<u64> = gens.into_iter().collect();
        gens.sort_unstable();
        Self {
            gens,
            table: vec![true],
        }
    }

    fn extend_generators(&mut self, new: &[u64]) {
        self.gens.extend_from_slice(new);
        self.gens.sort_unstable();
        self.table.truncate(1);
    }

    fn contains(&mut self, v: u64) -> bool {
        let v = v as usize;
        while self.table.len() <= v {
            let n = self.table.len();
            let member = self
                .gens
                .iter()
                .take_while(|&&g| g as usize <= n)
                .any(|&g| self.table[n - g as usize]);
            self.table.push(member);
        }
        self.table[v]
    }
}

fn image(a: u64, b: u64, x: u64) -> Result<u64> {
    a.checked_mul(x)
        .and_then(|v| v.checked_add(b))
        .ok_or(Error::Overflow)
}

/// Whether `⟨gens⟩` is an `(a, b)`-monoid. It suffices to check
/// `a_i·x + b_i ∈ ⟨gens⟩` for the generators `x` alone.
pub fn is_ab_monoid(gens: &[u64], a: &[u64], b: &[u64]) -> Result<bool> {
    validate_maps(a, b)?;
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if gens.contains(&0) {
        return Err(Error::ZeroGenerator);
    }
    let d = gcd_all(gens.iter().copied());
    let reduced: Vec<u64> = gens.iter().map(|&g| g / d).collect();
    let monoid = NumericalSemigroup::from_generators(&reduced)?;
    for &x in gens {
        for (&ai, &bi) in a.iter().zip(b) {
            let v = image(ai, bi, x)?;
            if v % d != 0 || !monoid.contains((v / d) as i64) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `M(a, b, X)` for a non-empty `X` of positive integers.
pub fn closure(a: &[u64], b: &[u64], x: &[u64]) -> Result<SubmonoidRep> {
    closure_traced(a, b, x, &ClosureOptions::default()).map(|t| t.result)
}

/// [`closure`] with the worklist history and a generator budget.
pub fn closure_traced(
    a: &[u64],
    b: &[u64],
    x: &[u64],
    options: &ClosureOptions,
) -> Result<ClosureTrace> {
    validate_maps(a, b)?;
    if x.is_empty() {
        return Err(Error::EmptyX);
    }
    if x.contains(&0) {
        return Err(Error::InvalidInstance(
            "X must contain positive integers".into(),
        ));
    }
    let d = gcd(gcd_all(x.iter().copied()), gcd_all(b.iter().copied()));
    let reduced_b: Vec<u64> = b.iter().map(|&v| v / d).collect();
    let seeds: BTreeSet<u64> = x.iter().map(|&v| v / d).collect();

    let mut origins: BTreeMap<u64, Origin> = seeds.iter().map(|&s| (s, Origin::Seed)).collect();
    let mut gens = seeds.clone();
    let mut monoid = GeneratedMonoid::new(gens.iter().copied());
    let mut steps = Vec::new();

    // Every image a_i·m + b_i exceeds m, so the processed elements always
    // form a prefix of the sorted generator set.
    let mut cursor = Bound::Unbounded;
    while let Some(&m) = gens.range((cursor, Bound::Unbounded)).next() {
        let mut added = Vec::new();
        for (i, (&ai, &bi)) in a.iter().zip(&reduced_b).enumerate() {
            let v = image(ai, bi, m)?;
            if !added.contains(&v) && !monoid.contains(v) {
                added.push(v);
                origins.insert(v, Origin::Image { of: m, map: i });
            }
        }
        added.sort_unstable();
        if !added.is_empty() {
            gens.extend(added.iter().copied());
            if gens.len() > options.max_generators {
                return Err(Error::ResourceLimit {
                    nodes: gens.len(),
                    depth: steps.len(),
                });
            }
            monoid.extend_generators(&added);
        }
        steps.push(ClosureStep { m, added });
        cursor = Bound::Excluded(m);
    }

    let gens: Vec<u64> = gens.into_iter().collect();
    let base = NumericalSemigroup::from_generators(&gens)?;
    Ok(ClosureTrace {
        result: SubmonoidRep::new(d, base),
        steps,
        origins,
    })
}

/// `M(a, b, X)` for the data of an instance. `M_r` coincides with `M`, so
/// `r` plays no part.
pub fn instance_closure(inst: &ProblemInstance) -> Result<AbMonoid> {
    if inst.x().is_empty() {
        return Ok(AbMonoid::Trivial);
    }
    closure(inst.a(), inst.b(), inst.x()).map(AbMonoid::Generated)
}

/// Outcome of the feasibility test for `P_r(a, b, X, g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Feasibility {
    pub feasible: bool,
    /// `|{0, r + 1, →} ∖ M(a, b, X)|`; `None` when infinite.
    pub gap_count: Option<u64>,
}

/// `P_r(a, b, X, g)` has a solution iff `{0, r + 1, →} ∖ M(a, b, X)` has at
/// least `g` elements.
pub fn feasible(inst: &ProblemInstance) -> Result<Feasibility> {
    let monoid = instance_closure(inst)?;
    let gap_count = monoid.gap_count_within(inst.r());
    Ok(Feasibility {
        feasible: gap_count.is_none_or(|c| c >= inst.g()),
        gap_count,
    })
}

/// The first `g` elements of `{0, r + 1, →} ∖ M(a, b, X)`. Their complement
/// in `{0, r + 1, →}` is `M ∪ {c_g + 1, →}`, which lies in the variety.
pub fn one_solution(inst: &ProblemInstance) -> Result<Vec<u64>> {
    let monoid = instance_closure(inst)?;
    let solution: Vec<u64> = monoid
        .gaps_within(inst.r())
        .take(inst.g() as usize)
        .collect();
    if (solution.len() as u64) < inst.g() {
        return Err(Error::Infeasible);
    }
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(a: &[u64], b: &[u64], x: &[u64], g: u64, r: u64) -> ProblemInstance {
        ProblemInstance::new(a.to_vec(), b.to_vec(), x.to_vec(), g, r).unwrap()
    }

    #[test]
    fn ab_monoid_predicate() {
        assert!(is_ab_monoid(&[4, 5, 11], &[1, 2], &[4, 1]).unwrap());
        assert!(!is_ab_monoid(&[5, 7, 9], &[1, 2], &[4, 1]).unwrap());
        assert!(is_ab_monoid(&[1], &[3, 7], &[2, 9]).unwrap());
        assert!(is_ab_monoid(&[6, 8], &[2, 3], &[4, 2]).unwrap());
        assert!(!is_ab_monoid(&[6, 8], &[1], &[1]).unwrap());
        assert_eq!(is_ab_monoid(&[], &[1], &[1]), Err(Error::EmptyGenerators));
    }

    #[test]
    fn worklist_trace_matches_hand_computation() {
        let trace = closure_traced(&[1, 2], &[4, 1], &[5], &ClosureOptions::default()).unwrap();
        let steps: Vec<(u64, Vec<u64>)> =
            trace.steps.iter().map(|s| (s.m, s.added.clone())).collect();
        assert_eq!(
            steps,
            vec![
                (5, vec![9, 11]),
                (9, vec![13]),
                (11, vec![]),
                (13, vec![17]),
                (17, vec![]),
            ]
        );
        assert_eq!(trace.result.d(), 1);
        assert_eq!(trace.result.base().msg(), &[5, 9, 11, 13, 17]);
        assert_eq!(trace.origins[&17], Origin::Image { of: 13, map: 0 });
        assert_eq!(trace.origins[&11], Origin::Image { of: 5, map: 1 });
    }

    #[test]
    fn gcd_reduction() {
        let m = closure(&[2, 3], &[4, 2], &[6, 8]).unwrap();
        assert_eq!(m.d(), 2);
        assert_eq!(m.base().msg(), &[3, 4]);
        assert_eq!(m.generators().unwrap(), vec![6, 8]);
        assert!(!m.finite_complement());
        assert_eq!(m.gap_count(), None);
        let members: Vec<u64> = (0..=16).filter(|&v| m.contains(v as i64)).collect();
        assert_eq!(members, vec![0, 6, 8, 12, 14, 16]);
    }

    #[test]
    fn successor_map_from_two() {
        // smallest monoid containing 2 and closed under m -> m + 1 for m >= 2
        let mut member = [false; 11];
        member[0] = true;
        member[2] = true;
        loop {
            let mut changed = false;
            for v in 1..=10 {
                if !member[v] {
                    continue;
                }
                let mut add = vec![v + 1];
                add.extend((1..=10 - v).filter(|&w| member[w]).map(|w| v + w));
                for s in add.into_iter().filter(|&s| s <= 10) {
                    if !member[s] {
                        member[s] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let oracle_gaps: Vec<u64> = (1..=10).filter(|&v| !member[v as usize]).collect();
        assert_eq!(oracle_gaps, vec![1]);

        let m = closure(&[1], &[1], &[2]).unwrap();
        assert_eq!(m.d(), 1);
        assert_eq!(m.base().msg(), &[2, 3]);
        assert_eq!(m.base().gaps(), oracle_gaps.as_slice());
    }

    #[test]
    fn no_maps_gives_generated_monoid() {
        let m = closure(&[], &[], &[6, 9, 15]).unwrap();
        assert_eq!(m.d(), 3);
        assert_eq!(m.base().msg(), &[2, 3]);
    }

    #[test]
    fn empty_x_and_budget() {
        assert_eq!(closure(&[1], &[1], &[]), Err(Error::EmptyX));
        let tight = ClosureOptions { max_generators: 2 };
        assert!(matches!(
            closure_traced(&[1, 2], &[4, 1], &[5], &tight),
            Err(Error::ResourceLimit { .. })
        ));
        assert_eq!(closure(&[u64::MAX], &[1], &[5]), Err(Error::Overflow));
    }

    #[test]
    fn trivial_closure_for_empty_x() {
        let m = instance_closure(&inst(&[1, 2], &[4, 1], &[], 3, 0)).unwrap();
        assert_eq!(m, AbMonoid::Trivial);
        assert!(m.contains(0));
        assert!(!m.contains(7));
        assert_eq!(m.gaps_within(2).take(3).collect::<Vec<_>>(), vec![3, 4, 5]);
    }

    #[test]
    fn feasibility() {
        let f = feasible(&inst(&[1, 2], &[4, 1], &[5], 6, 0)).unwrap();
        assert_eq!(
            f,
            Feasibility {
                feasible: true,
                gap_count: Some(8)
            }
        );
        let f = feasible(&inst(&[1, 2], &[4, 1], &[5], 6, 3)).unwrap();
        assert_eq!(
            f,
            Feasibility {
                feasible: false,
                gap_count: Some(5)
            }
        );
        let f = feasible(&inst(&[2, 3], &[4, 2], &[6, 8], 9, 0)).unwrap();
        assert_eq!(
            f,
            Feasibility {
                feasible: true,
                gap_count: None
            }
        );
    }

    #[test]
    fn greedy_solutions() {
        assert_eq!(
            one_solution(&inst(&[1, 2], &[4, 1], &[5], 6, 0)).unwrap(),
            vec![1, 2, 3, 4, 6, 7]
        );
        assert_eq!(
            one_solution(&inst(&[2, 3], &[4, 2], &[6, 8], 9, 0)).unwrap(),
            vec![1, 2, 3, 4, 5, 7, 9, 10, 11]
        );
        assert_eq!(
            one_solution(&inst(&[2, 3], &[4, 2], &[6, 8], 9, 3)).unwrap(),
            vec![4, 5, 7, 9, 10, 11, 13, 15, 17]
        );
        assert_eq!(
            one_solution(&inst(&[1, 2], &[4, 1], &[5], 0, 2)).unwrap(),
            Vec::<u64>::new()
        );
        assert_eq!(
            one_solution(&inst(&[1, 2], &[4, 1], &[5], 9, 0)),
            Err(Error::Infeasible)
        );
    }
}
