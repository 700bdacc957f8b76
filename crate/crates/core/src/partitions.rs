//! Partitions, bipartitions and the row-index bookkeeping used by the
//! transition rules.
//!
//! Rows are numbered from 1 throughout, and every accessor reads past the
//! end of a partition as 0, so `mu.part(m + 1)` is always meaningful.

use std::cmp::{Ordering, Reverse};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, but part {index} is {value} after part {prev_index} = {prev}")]
    NotDecreasing {
        index: usize,
        value: usize,
        prev_index: usize,
        prev: usize,
    },
    #[error("row index {m} out of range 1..={len}")]
    RowOutOfRange { m: usize, len: usize },
    #[error("malformed bipartition {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are stripped; any other zero or increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for i in 1..parts.len() {
            if parts[i] > parts[i - 1] || parts[i] == 0 {
                return Err(PartitionError::NotDecreasing {
                    index: i + 1,
                    value: parts[i],
                    prev_index: i,
                    prev: parts[i - 1],
                });
            }
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).as_ref() == Ok(&Partition(parts.clone())));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (1-based), 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "partition rows are numbered from 1");
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Rows whose last box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }

    /// Rows that can take one more box.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .collect()
    }

    /// Removes one box from row `i`, if that leaves a partition.
    pub fn remove_box(&self, i: usize) -> Option<Partition> {
        if i == 0 || self.part(i) == 0 || self.part(i) <= self.part(i + 1) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            parts.pop();
        }
        Some(Partition(parts))
    }

    /// Adds one box to row `i`, if that leaves a partition.
    pub fn add_box(&self, i: usize) -> Option<Partition> {
        if i == 0 || i > self.len() + 1 || (i > 1 && self.part(i - 1) <= self.part(i)) {
            return None;
        }
        let mut parts = self.0.clone();
        if i == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Some(Partition(parts))
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(acc.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                acc.push(p);
                go(rest - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// An ordered pair of partitions `(mu, nu)`, the shape of a bitableau.
///
/// Ordering: larger `|mu|` first, then decreasing lexicographic on `mu`,
/// then on `nu`. This is the order of [`enumerate_bipartitions`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub mu: Partition,
    pub nu: Partition,
}

impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |b: &Bipartition| {
            (
                Reverse(b.mu.size()),
                Reverse(b.mu.clone()),
                Reverse(b.nu.clone()),
            )
        };
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The index sets attached to a row `m` of a bipartition. Each is a
/// contiguous run of row indices in `1..=len(lambda)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSets {
    pub m: usize,
    pub lambda: Vec<usize>,
    pub gamma: Vec<usize>,
    pub delta: Vec<usize>,
}

impl IndexSets {
    pub fn delta_leq(&self) -> Vec<usize> {
        self.delta
            .iter()
            .copied()
            .filter(|&i| i <= self.m)
            .collect()
    }

    pub fn delta_lt(&self) -> Vec<usize> {
        self.delta.iter().copied().filter(|&i| i < self.m).collect()
    }

    pub fn max_gamma(&self) -> usize {
        *self.gamma.last().expect("m is always in its own set")
    }

    pub fn max_delta(&self) -> usize {
        *self.delta.last().expect("m is always in its own set")
    }
}

impl Bipartition {
    pub fn new(mu: Partition, nu: Partition) -> Self {
        Bipartition { mu, nu }
    }

    pub fn from_parts(mu: Vec<usize>, nu: Vec<usize>) -> Result<Self, PartitionError> {
        Ok(Bipartition {
            mu: Partition::new(mu)?,
            nu: Partition::new(nu)?,
        })
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    pub fn size(&self) -> usize {
        self.mu.size() + self.nu.size()
    }

    /// The componentwise sum `mu + nu`.
    pub fn lambda(&self) -> Partition {
        let len = self.mu.len().max(self.nu.len());
        Partition::from_parts_unchecked(
            (1..=len)
                .map(|i| self.mu.part(i) + self.nu.part(i))
                .collect(),
        )
    }

    pub fn mu(&self, i: usize) -> usize {
        self.mu.part(i)
    }

    pub fn nu(&self, i: usize) -> usize {
        self.nu.part(i)
    }

    pub fn lambda_part(&self, i: usize) -> usize {
        self.mu(i) + self.nu(i)
    }

    /// Number of rows of `lambda`.
    pub fn height(&self) -> usize {
        self.mu.len().max(self.nu.len())
    }

    pub fn index_sets(&self, m: usize) -> Result<IndexSets, PartitionError> {
        let len = self.height();
        if m == 0 || m > len {
            return Err(PartitionError::RowOutOfRange { m, len });
        }
        let run = |f: &dyn Fn(usize) -> usize| -> Vec<usize> {
            (1..=len).filter(|&i| f(i) == f(m)).collect()
        };
        Ok(IndexSets {
            m,
            lambda: run(&|i| self.lambda_part(i)),
            gamma: run(&|i| self.mu(i)),
            delta: run(&|i| self.nu(i)),
        })
    }

    /// Last row of the run of equal `mu` parts containing row `m`.
    ///
    /// Rows past the height of `lambda` are treated as singleton runs.
    pub fn max_gamma(&self, m: usize) -> usize {
        run_end(&self.mu, m, self.height())
    }

    /// Last row of the run of equal `nu` parts containing row `m`.
    pub fn max_delta(&self, m: usize) -> usize {
        run_end(&self.nu, m, self.height())
    }

    /// `|nu| + sum_i (i - 1) * lambda_i`.
    pub fn dimension_b(&self) -> usize {
        self.nu.size()
            + self
                .lambda()
                .parts()
                .iter()
                .enumerate()
                .map(|(i, l)| i * l)
                .sum::<usize>()
    }
}

fn run_end(p: &Partition, m: usize, height: usize) -> usize {
    assert!(m >= 1);
    if m > height {
        return m;
    }
    (m..=height)
        .take_while(|&i| p.part(i) == p.part(m))
        .last()
        .unwrap_or(m)
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu={};nu={}", self.mu, self.nu)
    }
}

impl FromStr for Bipartition {
    type Err = PartitionError;

    /// Parses the canonical form `mu=[3,1];nu=[2,2,1]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| PartitionError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (mu, nu) = s
            .trim()
            .split_once(';')
            .ok_or_else(|| bad("expected `;`"))?;
        let list = |part: &str, key: &str| -> Result<Vec<usize>, PartitionError> {
            let body = part
                .trim()
                .strip_prefix(key)
                .and_then(|r| r.trim_start().strip_prefix('='))
                .map(str::trim)
                .and_then(|r| r.strip_prefix('['))
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| bad(&format!("expected `{key}=[...]`")))?;
            if body.trim().is_empty() {
                return Ok(Vec::new());
            }
            body.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| bad(&format!("bad part {t:?}")))
                })
                .collect()
        };
        Bipartition::from_parts(list(mu, "mu")?, list(nu, "nu")?)
    }
}

/// Every bipartition of `n`, each exactly once, in [`Bipartition`] order.
pub fn enumerate_bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        let nus = Partition::all_of(n - k);
        for mu in Partition::all_of(k) {
            for nu in &nus {
                out.push(Bipartition::new(mu.clone(), nu.clone()));
            }
        }
    }
    out
}

/// Memoized count of standard bitableaux per shape.
#[derive(Debug, Default)]
pub struct BitableauCounter {
    cache: HashMap<Bipartition, u128>,
}

impl BitableauCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sum over removable corners of either component; the largest entry
    /// of a standard bitableau always sits in one of them.
    pub fn count(&mut self, bp: &Bipartition) -> u128 {
        if bp.size() == 0 {
            return 1;
        }
        if let Some(&c) = self.cache.get(bp) {
            return c;
        }
        let mut total = 0;
        for i in bp.mu.removable_rows() {
            let mu = bp.mu.remove_box(i).expect("removable");
            total += self.count(&Bipartition::new(mu, bp.nu.clone()));
        }
        for i in bp.nu.removable_rows() {
            let nu = bp.nu.remove_box(i).expect("removable");
            total += self.count(&Bipartition::new(bp.mu.clone(), nu));
        }
        self.cache.insert(bp.clone(), total);
        total
    }
}

pub fn count_bitableaux(bp: &Bipartition) -> u128 {
    BitableauCounter::new().count(bp)
}
