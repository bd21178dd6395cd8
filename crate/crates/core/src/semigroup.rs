//! Canonical numerical semigroups.
//!
//! A [`NumericalSemigroup`] stores its minimal system of generators together
//! with a membership table covering `{0, ..., F + 1}`; every integer above the
//! Frobenius number is a member, so queries past the table short-circuit.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::gcd_all;

/// A submonoid of `(ℕ, +)` with finite complement.
///
/// Equality, ordering and hashing use the minimal generators only, which
/// determine the semigroup uniquely.
#[derive(Clone)]
pub struct NumericalSemigroup {
    msg: Vec<u64>,
    frobenius: i64,
    gaps: Vec<u64>,
    /// `table[x]` is membership of `x` for `0 <= x <= frobenius + 1`.
    table: Vec<bool>,
}

impl NumericalSemigroup {
    /// The whole of `ℕ`, minimally generated by `{1}`.
    pub fn naturals() -> Self {
        Self {
            msg: vec![1],
            frobenius: -1,
            gaps: Vec::new(),
            table: vec![true],
        }
    }

    /// `{0, k, →}`, minimally generated by `{k, ..., 2k - 1}`.
    pub fn ordinary(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroGenerator);
        }
        if k == 1 {
            return Ok(Self::naturals());
        }
        let top = k.checked_mul(2).ok_or(Error::Overflow)?;
        let mut table = vec![false; k as usize + 1];
        table[0] = true;
        table[k as usize] = true;
        Ok(Self {
            msg: (k..top).collect(),
            frobenius: k as i64 - 1,
            gaps: (1..k).collect(),
            table,
        })
    }

    /// The semigroup `⟨gens⟩`. The generators must be positive and coprime;
    /// redundant generators are dropped.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let gcd = gcd_all(gens.iter().copied());
        if gcd != 1 {
            return Err(Error::NonCoprime { gcd });
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let multiplicity = sorted[0] as usize;

        // Once `multiplicity` consecutive members appear, every larger
        // integer is a member.
        let mut table = vec![true];
        let mut run = 1usize;
        while run < multiplicity {
            let n = table.len() as u64;
            let member = sorted
                .iter()
                .take_while(|&&g| g <= n)
                .any(|&g| table[(n - g) as usize]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
        }
        let frobenius = table.len() as i64 - 1 - run as i64;
        table.truncate((frobenius + 2) as usize);
        Ok(Self::from_table(table))
    }

    /// The semigroup whose complement in `ℕ` is exactly `gaps`.
    ///
    /// Fails with [`Error::NotASemigroup`] when `ℕ ∖ gaps` is not closed
    /// under addition or `0` is listed as a gap.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        let top = gaps.iter().copied().max();
        let Some(top) = top else {
            return Ok(Self::naturals());
        };
        if gaps.contains(&0) {
            return Err(Error::NotASemigroup);
        }
        let mut table = vec![true; top as usize + 2];
        for &gap in gaps {
            table[gap as usize] = false;
        }
        let members: Vec<usize> = (1..=top as usize).filter(|&x| table[x]).collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i..] {
                if x + y > top as usize {
                    break;
                }
                if !table[x + y] {
                    return Err(Error::NotASemigroup);
                }
            }
        }
        Ok(Self::from_table(table))
    }

    /// Builds the canonical value from a membership table whose entries past
    /// its end are all members. The table must describe a semigroup.
    fn from_table(mut table: Vec<bool>) -> Self {
        debug_assert!(table[0]);
        let frobenius = table.iter().rposition(|&m| !m).map_or(-1, |f| f as i64);
        table.truncate((frobenius + 2) as usize);
        let gaps: Vec<u64> = (1..table.len() as u64)
            .filter(|&x| !table[x as usize])
            .collect();
        let mut sg = Self {
            msg: Vec::new(),
            frobenius,
            gaps,
            table,
        };
        sg.msg = sg.msg_from_table();
        sg
    }

    /// `(S ∖ {0}) ∖ ((S ∖ {0}) + (S ∖ {0}))`, evaluated on the membership
    /// table. Every minimal generator is at most `F + multiplicity`.
    pub fn msg_from_table(&self) -> Vec<u64> {
        let multiplicity = self.multiplicity();
        let limit = (self.frobenius + 1) as u64 + multiplicity;
        (multiplicity..=limit)
            .filter(|&s| self.contains(s as i64))
            .filter(|&s| {
                !(multiplicity..=s / 2)
                    .any(|x| self.contains(x as i64) && self.contains((s - x) as i64))
            })
            .collect()
    }

    pub fn msg(&self) -> &[u64] {
        &self.msg
    }

    /// `F(S)`; `-1` for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Smallest non-zero element.
    pub fn multiplicity(&self) -> u64 {
        self.table
            .iter()
            .skip(1)
            .position(|&m| m)
            .map_or(self.table.len() as u64, |p| p as u64 + 1)
    }

    /// Membership table for `{0, ..., F + 1}`.
    pub fn small_elements(&self) -> &[bool] {
        &self.table
    }

    pub fn is_naturals(&self) -> bool {
        self.frobenius == -1
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x > self.frobenius {
            true
        } else {
            self.table[x as usize]
        }
    }

    /// `S ∖ {m}` for a minimal generator `m > F(S)`, with the minimal
    /// generators updated incrementally rather than recomputed.
    pub fn remove_generator(&self, m: u64) -> Result<Self> {
        let idx = self
            .msg
            .binary_search(&m)
            .map_err(|_| Error::NotMinimalGenerator(m))?;
        if (m as i64) <= self.frobenius {
            return Err(Error::NotAboveFrobenius {
                m,
                frobenius: self.frobenius,
            });
        }

        let mut table = self.table.clone();
        table.resize(m as usize + 2, true);
        table[m as usize] = false;
        let mut gaps = self.gaps.clone();
        gaps.push(m);

        let msg = if idx == 0 {
            // S = {0, m, →}
            let top = m.checked_mul(2).and_then(|v| v.checked_add(1));
            let top = top.ok_or(Error::Overflow)?;
            (m + 1..=top).collect()
        } else {
            let n1 = self.msg[0];
            let shifted = m.checked_add(n1).ok_or(Error::Overflow)?;
            let covered = self.msg[1..idx]
                .iter()
                .any(|&nj| self.contains((shifted - nj) as i64));
            let mut msg = self.msg.clone();
            msg.remove(idx);
            if !covered {
                let pos = msg.partition_point(|&x| x < shifted);
                msg.insert(pos, shifted);
            }
            msg
        };

        Ok(Self {
            msg,
            frobenius: m as i64,
            gaps,
            table,
        })
    }

    /// `S ∩ T`.
    pub fn intersect(&self, other: &Self) -> Self {
        let len = self.table.len().max(other.table.len());
        let table = (0..len as i64)
            .map(|x| self.contains(x) && other.contains(x))
            .collect();
        Self::from_table(table)
    }

    /// `{0, r + 1, →} ∖ S` in ascending order: the gaps of `S` above `r`.
    pub fn gaps_within(&self, r: u64) -> Vec<u64> {
        let start = self.gaps.partition_point(|&g| g <= r);
        self.gaps[start..].to_vec()
    }

    /// Whether `S ⊆ {0, r + 1, →}`.
    pub fn within_ordinary(&self, r: u64) -> bool {
        (1..=r as i64).all(|x| !self.contains(x))
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.msg == other.msg
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.msg.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.msg.cmp(&other.msg)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

/// Formats as `<g1,g2,...>` with the minimal generators ascending.
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.msg.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}
