//! Irreducible character degrees from the class algebra modulo a prime.
//!
//! Let `c = sum_j C_j C_{j*} / |C_j|` in the centre of the group algebra,
//! where `C_j` are class sums and `j*` is the class of inverses. On the
//! central idempotent of `chi` it acts by `|G| / chi(1)^2`. Working modulo a
//! prime `l` not dividing `|G|`, with `l > 2 sqrt|G|` so that distinct degrees
//! give distinct eigenvalues, the multiplicity of degree `d` is the dimension
//! of the `|G|/d^2` eigenspace of multiplication by `c` on the centre.

use std::collections::BTreeMap;

use serde::Serialize;

use super::group::ConcreteGroup;
use super::EngineError;
use crate::arith::{divisors, is_prime};

/// Largest modulus searched for before giving up.
const PRIME_SEARCH_LIMIT: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub order: u64,
    /// degree -> multiplicity
    pub degrees: BTreeMap<u64, u64>,
    pub class_count: u64,
    pub linear_count: u64,
    pub derived_order: u64,
    pub modular_prime: u64,
}

impl DegreeReport {
    /// Sum of squares, class count and linear count are consistent.
    pub fn invariants_hold(&self) -> bool {
        let squares: u64 = self.degrees.iter().map(|(d, m)| d * d * m).sum();
        let count: u64 = self.degrees.values().sum();
        let linear = self.degrees.get(&1).copied().unwrap_or(0);
        squares == self.order
            && count == self.class_count
            && linear == self.linear_count
            && self.order == self.linear_count * self.derived_order
    }

    /// Least positive exponent `k` with a degree `p^k`, for a `p`-group.
    pub fn min_positive_exponent(&self, p: u64) -> Option<u32> {
        self.degrees
            .keys()
            .filter(|&&d| d > 1)
            .map(|&d| crate::arith::nu(d, p))
            .min()
    }
}

/// Least prime `l = 1 (mod exponent)` with `l^2 > 4 |G|`.
pub fn dixon_prime(order: u64, exponent: u64) -> Result<u64, EngineError> {
    let mut l = exponent + 1;
    while l * l <= 4 * order {
        l += exponent;
    }
    while l < PRIME_SEARCH_LIMIT {
        if is_prime(l) {
            return Ok(l);
        }
        l += exponent;
    }
    Err(EngineError::NoModularPrime {
        exponent,
        limit: PRIME_SEARCH_LIMIT,
    })
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

/// Rank of a square matrix over `F_l`.
fn rank_mod(mut m: Vec<Vec<u64>>, l: u64) -> usize {
    let n = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][col], l);
        for x in m[rank].iter_mut() {
            *x = *x * inv % l;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = (*x + l - f * y % l) % l;
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

pub fn char_degrees(g: &ConcreteGroup) -> Result<DegreeReport, EngineError> {
    let order = g.order() as u64;
    let k = g.class_count();
    let exponent = g.exponent();
    let l = dixon_prime(order, exponent)?;
    let classes = g.classes();

    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    for i in 0..g.order() {
        members[g.class_of(i)].push(i);
    }
    let inverse_class: Vec<usize> = classes
        .iter()
        .map(|c| g.class_of(g.inverse_index(c.representative)))
        .collect();
    let size_inv: Vec<u64> = classes
        .iter()
        .map(|c| inv_mod(c.size as u64 % l, l))
        .collect();

    let mut scratch = vec![0u8; g.kind().word_len()];

    // coordinates of c: c_i = (1/|C_i|) sum_j #{y in C_{j*} : x_j y in C_i}
    let mut c_coord = vec![0u64; k];
    for (j, class) in classes.iter().enumerate() {
        for &y in &members[inverse_class[j]] {
            let prod = g.mul_index(class.representative, y, &mut scratch);
            c_coord[g.class_of(prod)] += 1;
        }
    }
    for (i, x) in c_coord.iter_mut().enumerate() {
        *x = *x % l * size_inv[i] % l;
    }

    // multiplication by c in the class-sum basis:
    // L[m][t] = (1/|C_m|) sum_i c_i |C_i| #{y in C_t : x_i y in C_m}
    let mut mult = vec![vec![0u64; k]; k];
    for (i, class) in classes.iter().enumerate() {
        if c_coord[i] == 0 {
            continue;
        }
        let weight = c_coord[i] * (class.size as u64 % l) % l;
        for y in 0..g.order() {
            let prod = g.mul_index(class.representative, y, &mut scratch);
            let (m, t) = (g.class_of(prod), g.class_of(y));
            mult[m][t] = (mult[m][t] + weight) % l;
        }
    }
    for (m, row) in mult.iter_mut().enumerate() {
        for x in row.iter_mut() {
            *x = *x * size_inv[m] % l;
        }
    }

    let mut degrees = BTreeMap::new();
    let mut found = 0u64;
    for d in divisors(order) {
        if d * d > order {
            break;
        }
        let mu = order % l * inv_mod(d * d % l, l) % l;
        let mut shifted = mult.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = (row[i] + l - mu) % l;
        }
        let mult_d = (k - rank_mod(shifted, l)) as u64;
        if mult_d > 0 {
            degrees.insert(d, mult_d);
            found += mult_d;
        }
    }
    if found != k as u64 {
        return Err(EngineError::Inconsistent(format!(
            "eigenspaces account for {found} of {k} classes"
        )));
    }

    let derived_order = g.derived_subgroup_order() as u64;
    let report = DegreeReport {
        order,
        degrees,
        class_count: k as u64,
        linear_count: order / derived_order,
        derived_order,
        modular_prime: l,
    };
    if !report.invariants_hold() {
        return Err(EngineError::Inconsistent(format!(
            "degree report violates its invariants: {report:?}"
        )));
    }
    Ok(report)
}
