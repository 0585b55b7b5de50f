//! Explicit small groups: permutation groups from image arrays, the group
//! `Y` of order `q^5`, and unipotent Sylow subgroups of small classical
//! groups as unitriangular matrix groups.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::field::FiniteField;
use super::group::{ConcreteGroup, ElementKind};
use super::EngineError;
use crate::arith::prime_power;

pub fn permutation_group(degree: usize, gens: &[Vec<usize>], bound: usize) -> Result<ConcreteGroup, EngineError> {
    if degree > 256 {
        return Err(EngineError::InconsistentGenerators(format!(
            "permutation degree {degree} above 256"
        )));
    }
    let words = gens
        .iter()
        .map(|g| g.iter().map(|&x| x as u8).collect())
        .collect();
    ConcreteGroup::closure(ElementKind::Permutation { degree }, words, bound)
}

/// The subgroup of even permutations of a permutation group.
pub fn even_part(g: &ConcreteGroup, bound: usize) -> Result<ConcreteGroup, EngineError> {
    let even: Vec<Vec<u8>> = g
        .elements()
        .filter(|w| is_even(w))
        .map(<[u8]>::to_vec)
        .collect();
    ConcreteGroup::from_subset(g.kind().clone(), &even, bound)
}

fn is_even(word: &[u8]) -> bool {
    let mut seen = vec![false; word.len()];
    let mut transpositions = 0;
    for start in 0..word.len() {
        let mut x = start;
        let mut len = 0;
        while !seen[x] {
            seen[x] = true;
            x = word[x] as usize;
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

fn field_for(q: u64) -> Result<Arc<FiniteField>, EngineError> {
    let (p, f) = prime_power(q).ok_or(EngineError::NotAPrimePower(q))?;
    Ok(Arc::new(FiniteField::new(p as u32, f)?))
}

fn elementary(dim: usize, i: usize, j: usize, t: u8) -> Vec<u8> {
    let mut m = vec![0u8; dim * dim];
    for k in 0..dim {
        m[k * dim + k] = 1;
    }
    m[i * dim + j] = t;
    m
}

fn check_order(order: u128, bound: usize) -> Result<(), EngineError> {
    if order > bound as u128 {
        Err(EngineError::BoundExceeded { bound })
    } else {
        Ok(())
    }
}

/// `Y`: 3x3 upper unitriangular matrices over `F_{q^2}` whose `(2,3)` entry
/// lies in `F_q`. It has order `q^5`.
pub fn build_lemma33_group(q: u64, bound: usize) -> Result<ConcreteGroup, EngineError> {
    let (p, _) = prime_power(q).ok_or(EngineError::NotAPrimePower(q))?;
    if p == 2 {
        return Err(EngineError::Unsupported(
            "the group Y is defined for odd characteristic".into(),
        ));
    }
    check_order((q as u128).pow(5), bound)?;
    let big = field_for(q * q)?;
    let small = big.subfield(big.degree() / 2);
    let mut gens = Vec::new();
    for t in big.elements().filter(|&t| t != 0) {
        gens.push(elementary(3, 0, 1, t));
    }
    for &t in small.iter().filter(|&&t| t != 0) {
        gens.push(elementary(3, 1, 2, t));
    }
    let kind = ElementKind::Matrix { dim: 3, field: big };
    let g = ConcreteGroup::closure(kind, gens, bound)?;
    debug_assert_eq!(g.order() as u64, q.pow(5));
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SylowFamily {
    /// upper unitriangular matrices of `SL_n(q)`
    SL,
    /// Sylow subgroup of `Sp_4(q)`
    Sp4,
    /// Sylow subgroup of `SU_3(q)`
    SU3,
    /// Sylow subgroup of `SU_4(q)`
    SU4,
}

impl fmt::Display for SylowFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SylowFamily::SL => "SL",
            SylowFamily::Sp4 => "Sp4",
            SylowFamily::SU3 => "SU3",
            SylowFamily::SU4 => "SU4",
        })
    }
}

/// Largest number of candidate matrices scanned when a model is built by
/// filtering unitriangular matrices.
const CANDIDATE_LIMIT: u128 = 1 << 20;

/// Unipotent radical of a Borel subgroup: a Sylow `p`-subgroup, where `p`
/// divides `q`.
pub fn build_sylow_lie(family: SylowFamily, n: usize, q: u64, bound: usize) -> Result<ConcreteGroup, EngineError> {
    match family {
        SylowFamily::SL => {
            if n < 2 {
                return Err(EngineError::Unsupported(format!("SL_{n}")));
            }
            check_order((q as u128).pow((n * (n - 1) / 2) as u32), bound)?;
            let field = field_for(q)?;
            let mut gens = Vec::new();
            for i in 0..n - 1 {
                for t in field.elements().filter(|&t| t != 0) {
                    gens.push(elementary(n, i, i + 1, t));
                }
            }
            ConcreteGroup::closure(ElementKind::Matrix { dim: n, field }, gens, bound)
        }
        SylowFamily::Sp4 => {
            check_order((q as u128).pow(4), bound)?;
            let field = field_for(q)?;
            // symplectic form with antidiagonal (1, 1, -1, -1)
            let one = 1u8;
            let minus = field.neg(1);
            let form = antidiagonal(4, &[one, one, minus, minus]);
            let members = unitriangular_preserving(4, &field, &form, false)?;
            ConcreteGroup::from_subset(ElementKind::Matrix { dim: 4, field }, &members, bound)
        }
        SylowFamily::SU3 | SylowFamily::SU4 => {
            let dim = if family == SylowFamily::SU3 { 3 } else { 4 };
            prime_power(q).ok_or(EngineError::NotAPrimePower(q))?;
            if family == SylowFamily::SU3 && q == 2 {
                return Err(EngineError::Unsupported(
                    "SU_3(2) is solvable and excluded".into(),
                ));
            }
            check_order((q as u128).pow((dim * (dim - 1) / 2) as u32), bound)?;
            let field = field_for(q * q)?;
            let form = antidiagonal(dim, &vec![1u8; dim]);
            let members = unitriangular_preserving(dim, &field, &form, true)?;
            ConcreteGroup::from_subset(ElementKind::Matrix { dim, field }, &members, bound)
        }
    }
}

fn antidiagonal(dim: usize, entries: &[u8]) -> Vec<u8> {
    let mut m = vec![0u8; dim * dim];
    for (i, &e) in entries.iter().enumerate() {
        m[i * dim + (dim - 1 - i)] = e;
    }
    m
}

/// Upper unitriangular `A` with `A^T J A = J`, or `conj(A)^T J A = J` with
/// the involution `x -> x^q` of `F_{q^2}` when `hermitian`.
fn unitriangular_preserving(
    dim: usize,
    field: &Arc<FiniteField>,
    form: &[u8],
    hermitian: bool,
) -> Result<Vec<Vec<u8>>, EngineError> {
    let slots: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
        .collect();
    let q = field.size() as u128;
    let candidates = q.pow(slots.len() as u32);
    if candidates > CANDIDATE_LIMIT {
        return Err(EngineError::Unsupported(format!(
            "{candidates} candidate matrices exceed the scan limit"
        )));
    }
    let kind = ElementKind::Matrix {
        dim,
        field: field.clone(),
    };
    let conj_exp = if hermitian {
        let half = field.degree() / 2;
        (field.characteristic() as u64).pow(half)
    } else {
        1
    };
    let mut out = Vec::new();
    let mut m = kind.identity();
    for code in 0..candidates {
        let mut c = code;
        for &(i, j) in &slots {
            m[i * dim + j] = (c % q) as u8;
            c /= q;
        }
        let mut transposed = vec![0u8; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let x = m[j * dim + i];
                transposed[i * dim + j] = if hermitian { field.pow(x, conj_exp) } else { x };
            }
        }
        let lhs = kind.mul(&kind.mul(&transposed, form), &m);
        if lhs == form {
            out.push(m.clone());
        }
    }
    Ok(out)
}
