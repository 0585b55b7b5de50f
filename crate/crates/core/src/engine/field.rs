use std::fmt;

use thiserror::Error;

use crate::arith::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field of order {0} is too large for the table-driven model")]
    TooLarge(u64),
    #[error("extension degree must be positive")]
    ZeroDegree,
}

/// `F_{p^k}` as polynomials over `F_p` modulo a fixed monic irreducible.
///
/// Element `x` (an integer below `p^k`) encodes the polynomial whose
/// coefficient of `t^i` is the `i`-th base-`p` digit of `x`. The modulus is
/// the smallest monic irreducible of degree `k` in this encoding.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: u32,
    size: u32,
    /// low coefficients `c_0 .. c_{k-1}` of the monic modulus
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {})", self.p, self.k, self.modulus_string())
    }
}

impl FiniteField {
    pub fn new(p: u32, k: u32) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let size = (p as u64).pow(k);
        if size > 256 {
            return Err(FieldError::TooLarge(size));
        }
        let size = size as u32;
        let modulus = smallest_irreducible(p, k);
        let mut field = FiniteField {
            p,
            k,
            size,
            modulus,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.size as usize;
        self.add = vec![0; q * q];
        self.mul = vec![0; q * q];
        self.neg = vec![0; q];
        self.inv = vec![0; q];
        for a in 0..q {
            let da = self.to_coeffs(a as u32);
            for b in 0..q {
                let db = self.to_coeffs(b as u32);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
                self.add[a * q + b] = self.from_coeffs(&sum) as u8;
                self.mul[a * q + b] = self.poly_mul_mod(&da, &db) as u8;
            }
            let neg: Vec<u32> = da.iter().map(|x| (self.p - x) % self.p).collect();
            self.neg[a] = self.from_coeffs(&neg) as u8;
        }
        for a in 1..q {
            let b = (1..q).find(|&b| self.mul[a * q + b] == 1).expect("field inverse");
            self.inv[a] = b as u8;
        }
    }

    fn to_coeffs(&self, mut x: u32) -> Vec<u32> {
        (0..self.k)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn from_coeffs(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn poly_mul_mod(&self, a: &[u32], b: &[u32]) -> u32 {
        let k = self.k as usize;
        let p = self.p;
        let mut prod = vec![0u32; 2 * k];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // t^k = -(c_0 + ... + c_{k-1} t^{k-1})
        for deg in (k..2 * k).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &c) in self.modulus.iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - lead) * c) % p;
            }
        }
        self.from_coeffs(&prod[..k])
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// `t^k + c_{k-1} t^{k-1} + ... + c_0`, written from the top.
    pub fn modulus_string(&self) -> String {
        let mut terms = vec![format!("t^{}", self.k)];
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            terms.push(match (c, mono.is_empty()) {
                (1, false) => mono,
                (_, true) => c.to_string(),
                _ => format!("{c}{mono}"),
            });
        }
        terms.join(" + ")
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.size as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.size as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn frobenius(&self, a: u8) -> u8 {
        self.pow(a, self.p as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        (0..self.size).map(|x| x as u8)
    }

    /// Elements of the subfield of order `p^d` (`d` must divide `k`).
    pub fn subfield(&self, d: u32) -> Vec<u8> {
        assert_eq!(self.k % d, 0, "subfield degree must divide the field degree");
        let q = (self.p as u64).pow(d);
        self.elements().filter(|&x| self.pow(x, q) == x).collect()
    }
}

fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    if k == 1 {
        return vec![0];
    }
    let count = (p as u64).pow(k) as u32;
    for code in 0..count {
        let low: Vec<u32> = {
            let mut x = code;
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let mut poly = low.clone();
        poly.push(1);
        if is_irreducible(&poly, p) {
            return low;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32) as u32;
        for code in 0..count {
            let mut div: Vec<u32> = {
                let mut x = code;
                (0..d)
                    .map(|_| {
                        let r = x % p;
                        x /= p;
                        r
                    })
                    .collect()
            };
            div.push(1);
            if poly_rem_is_zero(poly, &div, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(num: &[u32], monic: &[u32], p: u32) -> bool {
    let mut r = num.to_vec();
    let dd = monic.len() - 1;
    while r.len() > dd {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (i, &c) in monic.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * c) % p;
            }
        }
        r.pop();
    }
    r.iter().all(|&c| c == 0)
}
