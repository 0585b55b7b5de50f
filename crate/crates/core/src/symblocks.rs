//! `p`-blocks of symmetric and alternating groups, their height multisets
//! and minimal positive heights.
//!
//! Blocks of `S_n` are labelled by `p`-cores (Nakayama). A block of `A_n` of
//! positive weight is the one covered by the `S_n`-block with the same core;
//! the `S_n`-blocks with cores `k` and `k'` cover the same `A_n`-block, so
//! alternating labels carry one core from each conjugate pair.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{nu, nu_factorial};
use crate::height::MinHeight;
use crate::partition::{multipartitions, partitions, CoreQuotient, Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("{core} is not a {p}-core")]
    NotACore { core: Partition, p: usize },
    #[error("block label inconsistent: |core| + p*w = {expected}, n = {n}")]
    SizeMismatch { expected: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Symmetric,
    Alternating,
}

/// One of the two `A_n`-constituents of a self-conjugate `S_n` character of
/// defect zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SplitHalf {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BlockLabel {
    pub group: GroupKind,
    pub n: usize,
    pub p: usize,
    pub weight: usize,
    pub core: Partition,
    pub split: Option<SplitHalf>,
}

impl BlockLabel {
    pub fn symmetric(core: Partition, weight: usize, p: usize) -> Self {
        BlockLabel {
            group: GroupKind::Symmetric,
            n: core.size() + p * weight,
            p,
            weight,
            core,
            split: None,
        }
    }

    pub fn alternating(core: Partition, weight: usize, p: usize) -> Self {
        BlockLabel {
            group: GroupKind::Alternating,
            ..Self::symmetric(core, weight, p)
        }
    }

    fn validate(&self) -> Result<(), BlockError> {
        if self.p < 2 {
            return Err(PartitionError::BadModulus(self.p).into());
        }
        let expected = self.core.size() + self.p * self.weight;
        if expected != self.n {
            return Err(BlockError::SizeMismatch {
                expected,
                n: self.n,
            });
        }
        if !self.core.is_core(self.p)? {
            return Err(BlockError::NotACore {
                core: self.core.clone(),
                p: self.p,
            });
        }
        Ok(())
    }

    /// Short identifier used in reports: `core=(2,1) w=3`.
    pub fn id(&self) -> String {
        let mut s = format!("core={} w={}", self.core, self.weight);
        match self.split {
            Some(SplitHalf::Plus) => s.push_str(" +"),
            Some(SplitHalf::Minus) => s.push_str(" -"),
            None => {}
        }
        s
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.group {
            GroupKind::Symmetric => "S",
            GroupKind::Alternating => "A",
        };
        write!(f, "{g}{} p={} {}", self.n, self.p, self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeightMultiset {
    pub heights: BTreeMap<u32, usize>,
    pub defect: u32,
    pub min_valuation: u32,
}

impl HeightMultiset {
    pub fn character_count(&self) -> usize {
        self.heights.values().sum()
    }

    pub fn min_height(&self) -> MinHeight {
        MinHeight::from_heights(self.heights.keys().copied())
    }

    fn from_valuations(valuations: &[u32], group_valuation: u32) -> Self {
        let min_valuation = valuations.iter().copied().min().unwrap_or(0);
        let mut heights = BTreeMap::new();
        for &v in valuations {
            *heights.entry(v - min_valuation).or_insert(0) += 1;
        }
        HeightMultiset {
            heights,
            defect: group_valuation - min_valuation,
            min_valuation,
        }
    }
}

/// `p`-cores of size `m`.
pub fn cores_of_size(m: usize, p: usize) -> Vec<Partition> {
    partitions(m)
        .into_iter()
        .filter(|lam| lam.is_core(p).unwrap_or(false))
        .collect()
}

/// One label per `p`-core of size `n - p*w`, ordered by weight then core.
pub fn blocks_sym(n: usize, p: usize) -> Vec<BlockLabel> {
    let mut out = Vec::new();
    for w in 0..=n / p {
        for core in cores_of_size(n - p * w, p) {
            out.push(BlockLabel::symmetric(core, w, p));
        }
    }
    out
}

/// Labels for the `p`-blocks of `A_n`. A self-conjugate core of weight zero
/// yields two labels, one per constituent.
pub fn blocks_alt(n: usize, p: usize) -> Vec<BlockLabel> {
    let mut out = Vec::new();
    for label in blocks_sym(n, p) {
        let conj = label.core.conjugate();
        if conj > label.core {
            continue;
        }
        let alt = BlockLabel {
            group: GroupKind::Alternating,
            ..label
        };
        if alt.weight == 0 && conj == alt.core && n >= 2 {
            for half in [SplitHalf::Plus, SplitHalf::Minus] {
                out.push(BlockLabel {
                    split: Some(half),
                    ..alt.clone()
                });
            }
        } else {
            out.push(alt);
        }
    }
    out
}

/// Characters of the `S_n`-block via `p`-quotient tuples.
pub fn block_partitions(core: &Partition, weight: usize, p: usize) -> Result<Vec<Partition>, BlockError> {
    multipartitions(p, weight)
        .into_iter()
        .map(|quotient| {
            CoreQuotient {
                core: core.clone(),
                quotient,
                p,
                weight,
            }
            .to_partition()
            .map_err(BlockError::from)
        })
        .collect()
}

/// `p`-adic valuations of the degrees of the irreducible characters in the
/// block, one entry per character.
pub fn block_valuations(b: &BlockLabel) -> Result<Vec<u32>, BlockError> {
    b.validate()?;
    let p = b.p;
    let members = block_partitions(&b.core, b.weight, p)?;
    let mut vals = Vec::with_capacity(members.len());
    match b.group {
        GroupKind::Symmetric => {
            for lam in &members {
                vals.push(lam.char_valuation(p)?);
            }
        }
        GroupKind::Alternating => {
            let two = nu(2, p as u64);
            let splits = b.n >= 2;
            if b.split.is_some() {
                vals.push(b.core.char_valuation(p)? - two);
                return Ok(vals);
            }
            let self_conj_core = b.core.is_self_conjugate();
            for lam in &members {
                let conj = lam.conjugate();
                let v = lam.char_valuation(p)?;
                if conj == *lam && splits {
                    vals.push(v - two);
                    vals.push(v - two);
                } else if !self_conj_core || *lam > conj || !splits {
                    vals.push(v);
                }
            }
        }
    }
    Ok(vals)
}

fn group_valuation(group: GroupKind, n: usize, p: usize) -> u32 {
    let sym = nu_factorial(n as u64, p as u64);
    match group {
        GroupKind::Alternating if n >= 2 => sym - nu(2, p as u64),
        _ => sym,
    }
}

pub fn block_heights(b: &BlockLabel) -> Result<HeightMultiset, BlockError> {
    let vals = block_valuations(b)?;
    Ok(HeightMultiset::from_valuations(
        &vals,
        group_valuation(b.group, b.n, b.p),
    ))
}

pub fn mh_block(b: &BlockLabel) -> Result<MinHeight, BlockError> {
    Ok(block_heights(b)?.min_height())
}

/// Defect a block of this label must have.
pub fn expected_defect(b: &BlockLabel) -> u32 {
    let p = b.p as u64;
    let full = nu_factorial((b.p * b.weight) as u64, p);
    match b.group {
        GroupKind::Alternating if b.p == 2 && b.weight >= 1 => full - 1,
        _ => full,
    }
}

/// Compares the computed defect with the defect of a Sylow `p`-subgroup of
/// `S_{pw}` (or of `A_{2w}` for alternating groups at `p = 2`).
pub fn defect_check(b: &BlockLabel) -> Result<bool, BlockError> {
    Ok(block_heights(b)?.defect == expected_defect(b))
}

/// Whether the defect group is non-abelian: a Sylow `p`-subgroup of `S_{pw}`
/// is non-abelian iff `w >= p`; for `A_{2w}` at `p = 2` iff `w >= 3`.
pub fn nonabelian_defect(b: &BlockLabel) -> bool {
    match b.group {
        GroupKind::Alternating if b.p == 2 => b.weight >= 3,
        _ => b.weight >= b.p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition_counts;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Members of a block by scanning every partition of `n`.
    fn members_by_scan(core: &Partition, n: usize, p: usize) -> Vec<Partition> {
        let mut v: Vec<Partition> = partitions(n)
            .into_iter()
            .filter(|l| l.core_quotient(p).unwrap().core == *core)
            .collect();
        v.sort();
        v
    }

    #[test]
    fn blocks_of_s4_at_2() {
        // 2-cores among partitions of 4, 2 and 0: only the empty core (the
        // staircase (2,1) has size 3, which has the wrong parity)
        let blocks = blocks_sym(4, 2);
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].core, Partition::empty());
        assert_eq!(blocks[0].weight, 2);
    }

    #[test]
    fn blocks_of_sp_at_p() {
        for p in [2usize, 3, 5, 7] {
            let mut got: Vec<Partition> = blocks_sym(p, p).into_iter().map(|b| b.core).collect();
            got.sort();
            let mut expected: Vec<Partition> = partitions(p)
                .into_iter()
                .map(|l| l.core_quotient(p).unwrap().core)
                .collect();
            expected.sort();
            expected.dedup();
            assert_eq!(got, expected);
        }
        let single = blocks_sym(1, 3);
        assert_eq!(single, vec![BlockLabel::symmetric(part(&[1]), 0, 3)]);
    }

    #[test]
    fn quotient_route_matches_scan() {
        for p in [2, 3, 5] {
            for n in 1..=12 {
                for b in blocks_sym(n, p) {
                    let mut fast = block_partitions(&b.core, b.weight, p).unwrap();
                    fast.sort();
                    assert_eq!(fast, members_by_scan(&b.core, n, p));
                }
            }
        }
    }

    #[test]
    fn principal_2_block_of_s4() {
        let b = BlockLabel::symmetric(Partition::empty(), 2, 2);
        let h = block_heights(&b).unwrap();
        assert_eq!(h.heights, BTreeMap::from([(0, 4), (1, 1)]));
        assert_eq!(h.defect, 3);
        assert_eq!(mh_block(&b).unwrap(), MinHeight::Finite(1));
        assert!(defect_check(&b).unwrap());
    }

    #[test]
    fn weight_zero_blocks() {
        let b = BlockLabel::symmetric(part(&[2, 1]), 0, 2);
        let h = block_heights(&b).unwrap();
        assert_eq!(h.heights, BTreeMap::from([(0, 1)]));
        assert_eq!(h.defect, 0);
        assert_eq!(mh_block(&b).unwrap(), MinHeight::Infinity);
    }

    #[test]
    fn principal_3_block_of_s5() {
        let b = BlockLabel::symmetric(part(&[2]), 1, 3);
        assert_eq!(b.n, 5);
        // weight 1: cyclic defect, no positive heights
        assert_eq!(mh_block(&b).unwrap(), MinHeight::Infinity);
        // the block of S_5 containing the trivial character has 3-core (2)
        assert_eq!(part(&[5]).core_quotient(3).unwrap().core, part(&[2]));
        let scan: Vec<u32> = members_by_scan(&part(&[2]), 5, 3)
            .iter()
            .map(|l| l.char_valuation(3).unwrap())
            .collect();
        let min = *scan.iter().min().unwrap();
        let h = block_heights(&b).unwrap();
        assert_eq!(h.min_valuation, min);
    }

    #[test]
    fn principal_3_block_of_s6_has_height_one() {
        // weight 2 < p: abelian defect C3 x C3
        let b = BlockLabel::symmetric(Partition::empty(), 2, 3);
        assert_eq!(mh_block(&b).unwrap(), MinHeight::Infinity);
        // weight 3 = p: Sylow 3-subgroup of S_9 is non-abelian
        let b = BlockLabel::symmetric(Partition::empty(), 3, 3);
        assert_eq!(mh_block(&b).unwrap(), MinHeight::Finite(1));
    }

    #[test]
    fn rejects_non_core_label() {
        let b = BlockLabel::symmetric(part(&[2]), 1, 2);
        assert!(matches!(block_heights(&b), Err(BlockError::NotACore { .. })));
    }

    #[test]
    fn alternating_a6_at_2() {
        let blocks = blocks_alt(6, 2);
        let principal = blocks.iter().find(|b| b.weight == 3).unwrap();
        let h = block_heights(principal).unwrap();
        assert_eq!(h.defect, nu_factorial(6, 2) - 1);
        assert_eq!(h.defect, 3);
        assert!(defect_check(principal).unwrap());
        assert_eq!(mh_block(principal).unwrap(), MinHeight::Finite(1));
    }

    #[test]
    fn alternating_character_counts() {
        // k(A_n) for n = 2..=10
        let known = [1usize, 3, 4, 5, 7, 9, 14, 18, 24];
        for (n, &k) in (2..=10).zip(&known) {
            for p in [2, 3, 5] {
                let total: usize = blocks_alt(n, p)
                    .iter()
                    .map(|b| block_heights(b).unwrap().character_count())
                    .sum();
                assert_eq!(total, k, "A_{n} p={p}");
            }
        }
    }

    #[test]
    fn split_defect_zero_halves() {
        // (2,1) is a self-conjugate 3-core of size 3
        let blocks = blocks_alt(3, 3);
        let halves: Vec<_> = blocks.iter().filter(|b| b.split.is_some()).collect();
        assert_eq!(halves.len(), 0, "(2,1) is not a 3-core");
        let blocks = blocks_alt(3, 2);
        let halves: Vec<_> = blocks.iter().filter(|b| b.split.is_some()).collect();
        assert_eq!(halves.len(), 2);
        for h in halves {
            let hm = block_heights(h).unwrap();
            assert_eq!(hm.defect, 0);
            assert_eq!(mh_block(h).unwrap(), MinHeight::Infinity);
        }
    }

    #[test]
    fn every_partition_lands_in_one_block() {
        let counts = partition_counts(20);
        for p in [2, 3, 5, 7] {
            for n in 1..=20 {
                let total: usize = blocks_sym(n, p)
                    .iter()
                    .map(|b| block_heights(b).unwrap().character_count())
                    .sum();
                assert_eq!(total as u64, counts[n]);
            }
        }
    }
}
