//! Partitions, hooks, abacus cores and quotients, and the degrees of the
//! corresponding irreducible characters of the symmetric group.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{nu, nu_factorial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(usize),
    #[error("{core} is not a {p}-core")]
    NotACore { core: Partition, p: usize },
    #[error("expected {expected} quotient components, got {got}")]
    QuotientLength { expected: usize, got: usize },
}

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the partition of zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&x| x > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(PartitionError::NotAPartition(parts))
        }
    }

    /// Builds a partition from arbitrary non-negative parts, sorting and
    /// dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Partition {
            parts: (1..=k).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&r| r > j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// One hook length per cell, listed row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// Beta set with `beads` beads: `parts[i] - i + beads - 1` for each `i`.
    pub fn beta_set(&self, beads: usize) -> BetaSet {
        assert!(beads >= self.len(), "bead count below number of parts");
        let positions = (0..beads).map(|i| self.part(i) + beads - 1 - i).collect();
        BetaSet { beads: positions }
    }

    pub fn core_quotient(&self, p: usize) -> Result<CoreQuotient, PartitionError> {
        if p < 2 {
            return Err(PartitionError::BadModulus(p));
        }
        let beads = self.len().div_ceil(p) * p;
        let beta = self.beta_set(beads);
        let mut runners: Vec<Vec<usize>> = vec![Vec::new(); p];
        for &b in &beta.beads {
            runners[b % p].push(b / p);
        }
        let mut core_beads = Vec::with_capacity(beads);
        let mut quotient = Vec::with_capacity(p);
        for (r, runner) in runners.iter().enumerate() {
            // beads arrive in decreasing order
            let count = runner.len();
            let parts = runner
                .iter()
                .enumerate()
                .map(|(j, &pos)| pos - (count - 1 - j))
                .collect();
            quotient.push(Partition::from_unsorted(parts));
            core_beads.extend((0..count).map(|k| k * p + r));
        }
        let core = BetaSet::from_positions(core_beads).to_partition();
        let weight = quotient.iter().map(Partition::size).sum();
        Ok(CoreQuotient {
            core,
            quotient,
            p,
            weight,
        })
    }

    pub fn is_core(&self, p: usize) -> Result<bool, PartitionError> {
        Ok(self.core_quotient(p)?.weight == 0)
    }

    /// `nu_p` of the character degree, via Legendre and the hook lengths.
    pub fn char_valuation(&self, p: usize) -> Result<u32, PartitionError> {
        if p < 2 {
            return Err(PartitionError::BadModulus(p));
        }
        let p = p as u64;
        let hooks: u32 = self.hook_lengths().iter().map(|&h| nu(h as u64, p)).sum();
        Ok(nu_factorial(self.size() as u64, p) - hooks)
    }

    /// Exact degree `n! / prod(hooks)`.
    pub fn char_degree_exact(&self) -> BigUint {
        let n = self.size();
        let fact: BigUint = (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k);
        let hooks: BigUint = self
            .hook_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, h| acc * h as u64);
        debug_assert!((&fact % &hooks) == BigUint::from(0u32));
        fact / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Strictly decreasing bead positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSet {
    beads: Vec<usize>,
}

impl BetaSet {
    pub fn from_positions(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable_by(|a, b| b.cmp(a));
        positions.dedup();
        BetaSet { beads: positions }
    }

    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn bead_count(&self) -> usize {
        self.beads.len()
    }

    pub fn to_partition(&self) -> Partition {
        let b = self.beads.len();
        Partition::from_unsorted(
            self.beads
                .iter()
                .enumerate()
                .map(|(i, &x)| x + 1 + i - b)
                .collect(),
        )
    }
}

/// `p`-core and `p`-quotient. Quotient component `r` is read from the runner
/// of positions congruent to `r` modulo `p`, with the bead count rounded up
/// to a multiple of `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub p: usize,
    pub weight: usize,
}

impl CoreQuotient {
    /// Rebuilds the partition with the given core and quotient.
    pub fn to_partition(&self) -> Result<Partition, PartitionError> {
        let p = self.p;
        if p < 2 {
            return Err(PartitionError::BadModulus(p));
        }
        if self.quotient.len() != p {
            return Err(PartitionError::QuotientLength {
                expected: p,
                got: self.quotient.len(),
            });
        }
        if !self.core.is_core(p)? {
            return Err(PartitionError::NotACore {
                core: self.core.clone(),
                p,
            });
        }
        let weight: usize = self.quotient.iter().map(Partition::size).sum();
        let longest = self.quotient.iter().map(Partition::len).max().unwrap_or(0);
        let beads = (self.core.len().div_ceil(p) + longest) * p;
        let mut runners: Vec<usize> = vec![0; p];
        for &b in &self.core.beta_set(beads).beads {
            runners[b % p] += 1;
        }
        let mut positions = Vec::with_capacity(beads);
        for (r, (&count, q)) in runners.iter().zip(&self.quotient).enumerate() {
            debug_assert!(count >= q.len());
            for j in 0..count {
                let level = q.part(j) + count - 1 - j;
                positions.push(level * p + r);
            }
        }
        let lambda = BetaSet::from_positions(positions).to_partition();
        debug_assert_eq!(lambda.size(), self.core.size() + p * weight);
        Ok(lambda)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=rest.min(max)).rev() {
        current.push(part);
        fill(rest - part, part, current, out);
        current.pop();
    }
}

/// Number of partitions of each `k <= n` (Euler recurrence).
pub fn partition_counts(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            counts[k] += counts[k - part];
        }
    }
    counts
}

/// All `k`-tuples of partitions whose sizes sum to `total`.
pub fn multipartitions(k: usize, total: usize) -> Vec<Vec<Partition>> {
    let by_size: Vec<Vec<Partition>> = (0..=total).map(partitions).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    multi_fill(k, total, &by_size, &mut current, &mut out);
    out
}

fn multi_fill(
    k: usize,
    rest: usize,
    by_size: &[Vec<Partition>],
    current: &mut Vec<Partition>,
    out: &mut Vec<Vec<Partition>>,
) {
    if current.len() + 1 == k {
        for lam in &by_size[rest] {
            current.push(lam.clone());
            out.push(current.clone());
            current.pop();
        }
        return;
    }
    if k == 0 {
        if rest == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for size in 0..=rest {
        for lam in &by_size[size] {
            current.push(lam.clone());
            multi_fill(k, rest - size, by_size, current, out);
            current.pop();
        }
    }
}
