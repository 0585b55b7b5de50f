//! Cyclotomic polynomials over the integers, factored degree polynomials,
//! and the integer form of the cyclotomic valuation lemma.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{divisors, is_prime, mobius, multiplicative_order};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("cyclotomic index must be positive")]
    ZeroIndex,
    #[error("{value} is not divisible by the denominator {denominator}")]
    NonIntegral { value: String, denominator: u64 },
    #[error("q must satisfy |q| >= 2, got {0}")]
    BadArgument(i64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{d} does not divide {p} - 1")]
    BadOrder { p: u64, d: u64 },
}

/// `Phi_m`, coefficients listed from the constant term up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPoly {
    index: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicPoly {
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }
}

impl fmt::Display for CyclotomicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.coeffs))
    }
}

/// Dense polynomial in `X`, highest term first.
pub fn format_poly(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = match deg {
            0 => String::new(),
            1 => "X".to_string(),
            _ => format!("X^{deg}"),
        };
        if mono.is_empty() || !abs.is_one() {
            out.push_str(&abs.to_string());
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial; `None` if the remainder is non-zero.
fn poly_div_monic(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let dd = den.len() - 1;
    if num.len() <= dd {
        return num.iter().all(Zero::is_zero).then(Vec::new);
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let lead = rem[k + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (i, c) in den.iter().enumerate() {
            rem[k + i] -= &lead * c;
        }
        quot[k] = lead;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

fn x_pow_minus_one(m: u64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); m as usize + 1];
    v[0] = BigInt::from(-1);
    v[m as usize] = BigInt::one();
    v
}

/// Memo table of cyclotomic polynomials. Not shared between threads; each
/// worker owns its table.
#[derive(Debug, Default)]
pub struct CyclotomicTable {
    memo: HashMap<u64, CyclotomicPoly>,
}

impl CyclotomicTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, m: u64) -> Result<&CyclotomicPoly, CycloError> {
        if m == 0 {
            return Err(CycloError::ZeroIndex);
        }
        if !self.memo.contains_key(&m) {
            let mut den = vec![BigInt::one()];
            for d in divisors(m) {
                if d < m {
                    den = poly_mul(&den, &self.get(d)?.coeffs);
                }
            }
            let coeffs = poly_div_monic(&x_pow_minus_one(m), &den)
                .expect("X^m - 1 is divisible by its proper cyclotomic factors");
            self.memo.insert(m, CyclotomicPoly { index: m, coeffs });
        }
        Ok(&self.memo[&m])
    }
}

pub fn cyclotomic(m: u64) -> Result<CyclotomicPoly, CycloError> {
    CyclotomicTable::new().get(m).cloned()
}

/// `prod_{d | m} Phi_d(X) == X^m - 1`, by exact polynomial multiplication.
pub fn product_identity_holds(table: &mut CyclotomicTable, m: u64) -> Result<bool, CycloError> {
    let mut prod = vec![BigInt::one()];
    for d in divisors(m) {
        prod = poly_mul(&prod, &table.get(d)?.coeffs);
    }
    Ok(prod == x_pow_minus_one(m))
}

/// `nu_p(x)` for a non-zero integer.
pub fn nu_big(x: &BigInt, p: u64) -> u32 {
    assert!(!x.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut k = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        x = q;
        k += 1;
    }
}

/// `Phi_e(q)` as `prod_{d | e} (q^d - 1)^{mu(e/d)}`.
pub fn phi_value(e: u64, q: &BigInt) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for d in divisors(e) {
        let term = q.pow(d as u32) - 1;
        match mobius(e / d) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    num / den
}

/// `sign * q^a * prod Phi_e(q)^k / (c d)`, stored factored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DegreePolynomial {
    pub sign: i8,
    pub q_power: u32,
    pub c: u64,
    pub d: u64,
    /// cyclotomic index -> multiplicity
    pub factors: BTreeMap<u64, u32>,
}

impl DegreePolynomial {
    pub fn one() -> Self {
        DegreePolynomial {
            sign: 1,
            q_power: 0,
            c: 1,
            d: 1,
            factors: BTreeMap::new(),
        }
    }

    pub fn q_power(a: u32) -> Self {
        DegreePolynomial {
            q_power: a,
            ..Self::one()
        }
    }

    pub fn denominator(&self) -> u64 {
        self.c * self.d
    }

    pub fn is_pure_q_power(&self) -> bool {
        self.factors.is_empty() && self.denominator() == 1
    }

    /// Degree in `q` of the numerator.
    pub fn degree(&self) -> u64 {
        let phi: u64 = self
            .factors
            .iter()
            .map(|(&e, &k)| totient(e) * k as u64)
            .sum();
        self.q_power as u64 + phi
    }

    pub fn eval(&self, q: i64) -> Result<BigInt, CycloError> {
        if q.abs() < 2 {
            return Err(CycloError::BadArgument(q));
        }
        let qb = BigInt::from(q);
        let mut value = BigInt::from(self.sign) * qb.pow(self.q_power);
        for (&e, &k) in &self.factors {
            value *= phi_value(e, &qb).pow(k);
        }
        let den = BigInt::from(self.denominator());
        let (quot, rem) = value.div_rem(&den);
        if !rem.is_zero() {
            return Err(CycloError::NonIntegral {
                value: value.to_string(),
                denominator: self.denominator(),
            });
        }
        Ok(quot)
    }

    pub fn eval_valuation(&self, q: i64, p: u64) -> Result<(BigInt, u32), CycloError> {
        let v = self.eval(q)?;
        let nu = nu_big(&v, p);
        Ok((v, nu))
    }

    /// Shape violations at the given arguments: non-integral or
    /// non-positive values, denominators involving good primes, or `c`
    /// not dividing the centre order.
    pub fn shape_violations(&self, qs: &[i64], bad_primes: &[u64], centre_order: u64) -> Vec<String> {
        let mut out = Vec::new();
        if self.sign != 1 && self.sign != -1 {
            out.push(format!("sign {} is not +1 or -1", self.sign));
        }
        if self.c == 0 || self.d == 0 {
            out.push("zero denominator".to_string());
            return out;
        }
        let mut d = self.d;
        for &p in bad_primes {
            while d % p == 0 {
                d /= p;
            }
        }
        if d != 1 {
            out.push(format!("denominator d = {} has a good prime factor", self.d));
        }
        if centre_order % self.c != 0 {
            out.push(format!("c = {} does not divide {}", self.c, centre_order));
        }
        for &q in qs {
            match self.eval(q) {
                Ok(v) if v.is_positive() => {}
                Ok(v) => out.push(format!("value {v} at q = {q} is not positive")),
                Err(e) => out.push(format!("q = {q}: {e}")),
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&e, &k) in &other.factors {
            *factors.entry(e).or_insert(0) += k;
        }
        DegreePolynomial {
            sign: self.sign * other.sign,
            q_power: self.q_power + other.q_power,
            c: self.c * other.c,
            d: self.d * other.d,
            factors,
        }
    }
}

impl fmt::Display for DegreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.sign < 0 {
            parts.push("-".to_string());
        }
        if self.denominator() != 1 {
            parts.push(format!("1/{}", self.denominator()));
        }
        match self.q_power {
            0 => {}
            1 => parts.push("q".into()),
            a => parts.push(format!("q^{a}")),
        }
        for (&e, &k) in &self.factors {
            parts.push(if k == 1 {
                format!("P{e}")
            } else {
                format!("P{e}^{k}")
            });
        }
        if parts.is_empty() || parts == ["-"] {
            parts.push("1".into());
        }
        f.write_str(&parts.join(" "))
    }
}

pub fn totient(n: u64) -> u64 {
    divisors(n)
        .into_iter()
        .map(|d| mobius(n / d) as i64 * d as i64)
        .sum::<i64>() as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma42Violation {
    pub q: u64,
    pub d: u64,
    pub m: u64,
    pub nu: u32,
    pub expected: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma42Report {
    pub p: u64,
    pub d: u64,
    pub i_max: u32,
    pub q_max: u64,
    /// arguments `q` of multiplicative order `d` modulo `p`
    pub qs: Vec<u64>,
    /// number of valuations checked
    pub checks: u64,
    /// least `nu_p(Phi_{d p^i}(q))` over all checks with `i >= 1`
    pub min_nu: Option<u32>,
    pub violations: Vec<Lemma42Violation>,
}

/// For each `q <= q_max` of order `d` modulo `p`: `nu_p(Phi_{d p^i}(q)) = 1`
/// for `1 <= i <= i_max`, and `nu_p(Phi_m(q)) = 0` for every other
/// `m <= d p^{i_max}` except `m = d`.
pub fn lemma42_scan(p: u64, d: u64, i_max: u32, q_max: u64) -> Result<Lemma42Report, CycloError> {
    if p < 3 || !is_prime(p) {
        return Err(CycloError::NotOddPrime(p));
    }
    if d == 0 || (p - 1) % d != 0 {
        return Err(CycloError::BadOrder { p, d });
    }
    let m_max = d * p.pow(i_max);
    let special: Vec<u64> = (1..=i_max).map(|i| d * p.pow(i)).collect();
    let qs: Vec<u64> = (2..=q_max)
        .filter(|&q| multiplicative_order(q, p) == Some(d))
        .collect();
    let mut report = Lemma42Report {
        p,
        d,
        i_max,
        q_max,
        qs: qs.clone(),
        checks: 0,
        min_nu: None,
        violations: Vec::new(),
    };
    for &q in &qs {
        let qb = BigInt::from(q);
        // q^k - 1 for k <= m_max, shared by every Phi_m below
        let powers: Vec<BigInt> = std::iter::successors(Some(BigInt::one()), |x| Some(x * &qb))
            .take(m_max as usize + 1)
            .map(|x| x - 1)
            .collect();
        for m in 1..=m_max {
            if m == d {
                continue;
            }
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for e in divisors(m) {
                match mobius(m / e) {
                    1 => num *= &powers[e as usize],
                    -1 => den *= &powers[e as usize],
                    _ => {}
                }
            }
            let value = num / den;
            let nu = nu_big(&value, p);
            let expected = u32::from(special.contains(&m));
            if expected == 1 {
                report.min_nu = Some(report.min_nu.map_or(nu, |x| x.min(nu)));
            }
            report.checks += 1;
            if nu != expected {
                report.violations.push(Lemma42Violation {
                    q,
                    d,
                    m,
                    nu,
                    expected,
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap().coefficients(), ints(&[-1, 1]).as_slice());
        assert_eq!(cyclotomic(6).unwrap().coefficients(), ints(&[1, -1, 1]).as_slice());
        assert_eq!(
            cyclotomic(20).unwrap().coefficients(),
            ints(&[1, 0, -1, 0, 1, 0, -1, 0, 1]).as_slice()
        );
        assert_eq!(cyclotomic(20).unwrap().to_string(), "X^8 - X^6 + X^4 - X^2 + 1");
        assert_eq!(cyclotomic(0), Err(CycloError::ZeroIndex));
    }

    #[test]
    fn phi_105_has_coefficient_minus_two() {
        let c = cyclotomic(105).unwrap();
        assert_eq!(c.degree(), 48);
        assert!(c.coefficients().contains(&BigInt::from(-2)));
    }

    #[test]
    fn evaluations() {
        let two = BigInt::from(2);
        let v = cyclotomic(6).unwrap().eval(&two);
        assert_eq!((v.clone(), nu_big(&v, 3)), (BigInt::from(3), 1));
        assert_eq!(cyclotomic(1).unwrap().eval(&two), BigInt::one());
        let v = cyclotomic(20).unwrap().eval(&two);
        assert_eq!((v.clone(), nu_big(&v, 5)), (BigInt::from(205), 1));
        assert_eq!(phi_value(20, &two), BigInt::from(205));
        assert_eq!(phi_value(18, &two), BigInt::from(57));
        assert_eq!(phi_value(4, &two), BigInt::from(5));
        assert_eq!(phi_value(1, &BigInt::from(-2)), BigInt::from(-3));
        assert_eq!(phi_value(2, &BigInt::from(-2)), BigInt::from(-1));
    }

    #[test]
    fn degree_polynomial_eval() {
        // 1/2 q P2^2 at q = 3 is 24
        let d = DegreePolynomial {
            sign: 1,
            q_power: 1,
            c: 1,
            d: 2,
            factors: BTreeMap::from([(2, 2)]),
        };
        assert_eq!(d.eval(3).unwrap(), BigInt::from(24));
        assert_eq!(d.eval_valuation(3, 3).unwrap().1, 1);
        assert_eq!(d.degree(), 3);
        assert_eq!(d.to_string(), "1/2 q P2^2");
        let bad = DegreePolynomial {
            d: 5,
            ..d.clone()
        };
        assert!(matches!(bad.eval(3), Err(CycloError::NonIntegral { .. })));
        assert!(!bad.shape_violations(&[3], &[2], 1).is_empty());
        assert!(d.shape_violations(&[2, 3, 4, 5], &[2], 1).is_empty());
        assert_eq!(d.eval(1), Err(CycloError::BadArgument(1)));
    }

    #[test]
    fn lemma42_examples() {
        let r = lemma42_scan(5, 4, 1, 2).unwrap();
        assert_eq!(r.qs, vec![2]);
        assert!(r.violations.is_empty());
        assert_eq!(r.min_nu, Some(1));
        let r = lemma42_scan(3, 2, 2, 2).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(lemma42_scan(4, 1, 1, 5).unwrap_err(), CycloError::NotOddPrime(4));
        assert_eq!(lemma42_scan(7, 4, 1, 5).unwrap_err(), CycloError::BadOrder { p: 7, d: 4 });
    }

    #[test]
    fn totients() {
        let phi: Vec<u64> = (1..=12).map(totient).collect();
        assert_eq!(phi, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }
}
