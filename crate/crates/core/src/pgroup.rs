//! Character degree multisets of Sylow `p`-subgroups of symmetric and
//! alternating groups, built from iterated wreath products with `C_p`.
//!
//! Every degree of a `p`-group is a power of `p`, so a multiset is stored as
//! a map from exponent to multiplicity and products become exponent
//! convolutions.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{digits, nu_factorial};
use crate::height::MinHeight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PGroupError {
    #[error("multisets over different primes ({0} and {1})")]
    PrimeMismatch(u32, u32),
    #[error("character count overflow")]
    Overflow,
    #[error("group order {p}^{exponent} exceeds the oracle bound {bound}")]
    BoundExceeded { p: u32, exponent: u32, bound: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PDegreeMultiset {
    pub p: u32,
    /// exponent `k` -> number of irreducible characters of degree `p^k`
    pub counts: BTreeMap<u32, u128>,
    /// `log_p` of the group order
    pub order: u32,
}

impl PDegreeMultiset {
    pub fn trivial(p: u32) -> Self {
        PDegreeMultiset {
            p,
            counts: BTreeMap::from([(0, 1)]),
            order: 0,
        }
    }

    pub fn cyclic(p: u32) -> Self {
        PDegreeMultiset {
            p,
            counts: BTreeMap::from([(0, p as u128)]),
            order: 1,
        }
    }

    pub fn class_count(&self) -> u128 {
        self.counts.values().sum()
    }

    pub fn is_abelian(&self) -> bool {
        self.counts.keys().all(|&k| k == 0)
    }

    pub fn min_height(&self) -> MinHeight {
        MinHeight::from_heights(self.counts.keys().copied())
    }

    /// `sum counts[k] * p^(2k) == p^order`, or `None` if the sum does not
    /// fit in 128 bits.
    pub fn sum_of_squares_holds(&self) -> Option<bool> {
        let p = self.p as u128;
        let mut total: u128 = 0;
        for (&k, &c) in &self.counts {
            let sq = p.checked_pow(2 * k)?;
            total = total.checked_add(c.checked_mul(sq)?)?;
        }
        Some(total == p.checked_pow(self.order)?)
    }

    /// Degree multiset of the direct product.
    pub fn product(&self, other: &Self) -> Result<Self, PGroupError> {
        if self.p != other.p {
            return Err(PGroupError::PrimeMismatch(self.p, other.p));
        }
        let mut counts = BTreeMap::new();
        for (&a, &ca) in &self.counts {
            for (&b, &cb) in &other.counts {
                let prod = ca.checked_mul(cb).ok_or(PGroupError::Overflow)?;
                let slot = counts.entry(a + b).or_insert(0u128);
                *slot = slot.checked_add(prod).ok_or(PGroupError::Overflow)?;
            }
        }
        Ok(PDegreeMultiset {
            p: self.p,
            counts,
            order: self.order + other.order,
        })
    }
}

fn poly_mul(a: &BTreeMap<u32, u128>, b: &BTreeMap<u32, u128>) -> Result<BTreeMap<u32, u128>, PGroupError> {
    let mut out = BTreeMap::new();
    for (&i, &x) in a {
        for (&j, &y) in b {
            let prod = x.checked_mul(y).ok_or(PGroupError::Overflow)?;
            let slot = out.entry(i + j).or_insert(0u128);
            *slot = slot.checked_add(prod).ok_or(PGroupError::Overflow)?;
        }
    }
    Ok(out)
}

/// Degrees of `base ≀ C_p`.
///
/// A diagonal tuple `(chi, ..., chi)` is fixed by the cyclic shift and
/// extends in `p` ways to characters of degree `chi(1)^p`. The remaining
/// tuples fall into orbits of length `p`, each inducing to one irreducible
/// character of degree `p * prod chi_i(1)`.
pub fn wreath_cyclic_p(base: &PDegreeMultiset, p: u32) -> Result<PDegreeMultiset, PGroupError> {
    if base.p != p {
        return Err(PGroupError::PrimeMismatch(base.p, p));
    }
    let mut power = BTreeMap::from([(0u32, 1u128)]);
    for _ in 0..p {
        power = poly_mul(&power, &base.counts)?;
    }
    let mut counts = BTreeMap::new();
    for (&k, &c) in &base.counts {
        let fixed = c.checked_mul(p as u128).ok_or(PGroupError::Overflow)?;
        *counts.entry(k * p).or_insert(0u128) += fixed;
    }
    for (&s, &total) in &power {
        let diagonal = if s % p == 0 {
            base.counts.get(&(s / p)).copied().unwrap_or(0)
        } else {
            0
        };
        let moving = total - diagonal;
        debug_assert_eq!(moving % p as u128, 0);
        let orbits = moving / p as u128;
        if orbits > 0 {
            let slot = counts.entry(s + 1).or_insert(0u128);
            *slot = slot.checked_add(orbits).ok_or(PGroupError::Overflow)?;
        }
    }
    Ok(PDegreeMultiset {
        p,
        counts,
        order: p * base.order + 1,
    })
}

/// The `i`-fold iterated wreath product `C_p ≀ ... ≀ C_p`, a Sylow
/// `p`-subgroup of `S_{p^i}`.
pub fn iterated_wreath(i: u32, p: u32) -> Result<PDegreeMultiset, PGroupError> {
    let mut w = PDegreeMultiset::trivial(p);
    for _ in 0..i {
        w = wreath_cyclic_p(&w, p)?;
    }
    Ok(w)
}

/// Sylow `p`-subgroup of `S_n`: product over the base-`p` digits `a_i` of
/// `W_i^{a_i}`.
pub fn sylow_degrees_sym(n: u64, p: u32) -> Result<PDegreeMultiset, PGroupError> {
    let mut out = PDegreeMultiset::trivial(p);
    let mut w = PDegreeMultiset::trivial(p);
    for (i, a) in digits(n, p as u64).into_iter().enumerate() {
        if i > 0 {
            w = wreath_cyclic_p(&w, p)?;
        }
        for _ in 0..a {
            out = out.product(&w)?;
        }
    }
    debug_assert_eq!(out.order, nu_factorial(n, p as u64));
    Ok(out)
}

pub fn mh_sylow_sym(n: u64, p: u32) -> Result<MinHeight, PGroupError> {
    Ok(sylow_degrees_sym(n, p)?.min_height())
}

/// Minimal positive height of a Sylow 2-subgroup of `A_n` (`n = 2w`).
///
/// For `w <= 2` the subgroup is abelian. For `w = 3` it is dihedral of order
/// 8. For `w > 3` the Sylow 2-subgroup of `S_{2w}` has the quotient
/// `(C_2 ≀ C_2) ≀ C_2` and with it a degree-2 character not fixed by the sign,
/// which restricts irreducibly.
pub fn mh_sylow_alt(n: u64) -> MinHeight {
    let w = n / 2;
    if w <= 2 {
        MinHeight::Infinity
    } else {
        MinHeight::Finite(1)
    }
}

/// Permutations on `0..n` generating a Sylow `p`-subgroup of `S_n`, as
/// image arrays. Fails when `p^{nu_p(n!)}` exceeds `bound`.
pub fn sylow_generators_sym(n: usize, p: usize, bound: u64) -> Result<Vec<Vec<usize>>, PGroupError> {
    let exponent = nu_factorial(n as u64, p as u64);
    let order = (p as u64).checked_pow(exponent);
    if order.is_none_or(|o| o > bound) {
        return Err(PGroupError::BoundExceeded {
            p: p as u32,
            exponent,
            bound,
        });
    }
    let mut gens = Vec::new();
    let mut offset = 0;
    for (i, a) in digits(n as u64, p as u64).into_iter().enumerate() {
        let block = p.pow(i as u32);
        for _ in 0..a {
            wreath_generators(n, offset, i as u32, p, &mut gens);
            offset += block;
        }
    }
    Ok(gens)
}

/// Generators of `W_level` acting on `offset .. offset + p^level`.
fn wreath_generators(n: usize, offset: usize, level: u32, p: usize, out: &mut Vec<Vec<usize>>) {
    if level == 0 {
        return;
    }
    wreath_generators(n, offset, level - 1, p, out);
    let sub = p.pow(level - 1);
    let span = sub * p;
    let mut shift: Vec<usize> = (0..n).collect();
    for x in 0..span {
        shift[offset + x] = offset + (x + sub) % span;
    }
    out.push(shift);
}
