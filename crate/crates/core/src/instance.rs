use std::fmt;

use crate::error::{Error, Result};

/// The data `(a, b, X, g, r)` of a problem `P_r(a, b, X, g)`: find every
/// `g`-element set `C ⊆ {r + 1, →}` that is closed under the sum condition,
/// the affine divisor condition for each `(a_i, b_i)`, and avoids `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    a: Vec<u64>,
    b: Vec<u64>,
    x: Vec<u64>,
    g: u64,
    r: u64,
}

impl ProblemInstance {
    /// Validates and builds an instance. `X` is sorted and deduplicated.
    ///
    /// `a` and `b` must have equal length with positive entries, and every
    /// element of `X` must be at least `r + 1`. Both `X` and the tuples may
    /// be empty.
    pub fn new(a: Vec<u64>, b: Vec<u64>, x: Vec<u64>, g: u64, r: u64) -> Result<Self> {
        validate_maps(&a, &b)?;
        let mut x = x;
        x.sort_unstable();
        x.dedup();
        if let Some(&low) = x.first() {
            if low == 0 {
                return Err(Error::InvalidInstance(
                    "X must contain positive integers".into(),
                ));
            }
            if low <= r {
                return Err(Error::InvalidInstance(format!(
                    "X must be a subset of {{{},→}}, found {low}",
                    r + 1
                )));
            }
        }
        Ok(Self { a, b, x, g, r })
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn b(&self) -> &[u64] {
        &self.b
    }

    pub fn x(&self) -> &[u64] {
        &self.x
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// Number of affine maps `n`.
    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// The pairs `(a_i, b_i)`.
    pub fn maps(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.a.iter().copied().zip(self.b.iter().copied())
    }

    /// Same `(a, b, X, r)` with a different cardinality.
    pub fn with_g(&self, g: u64) -> Self {
        Self { g, ..self.clone() }
    }

    /// Same `(a, b, X, g)` with a different offset. Fails when `X` is no
    /// longer inside `{r + 1, →}`.
    pub fn with_r(&self, r: u64) -> Result<Self> {
        Self::new(self.a.clone(), self.b.clone(), self.x.clone(), self.g, r)
    }
}

pub(crate) fn validate_maps(a: &[u64], b: &[u64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::InvalidInstance(format!(
            "a has {} entries but b has {}",
            a.len(),
            b.len()
        )));
    }
    if a.iter().chain(b).any(|&v| v == 0) {
        return Err(Error::InvalidInstance("a and b must be positive".into()));
    }
    Ok(())
}

impl fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P_{}({:?},{:?},{:?},{})",
            self.r, self.a, self.b, self.x, self.g
        )
    }
}
