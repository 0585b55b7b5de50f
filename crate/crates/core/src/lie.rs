//! Finite groups of Lie type in defining characteristic: the exponent
//! `m(G, p)`, unipotent character degrees as factored polynomials in `q`,
//! and minimal positive heights of unipotent characters.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{divisors, is_prime, prime_power};
use crate::cyclo::{CycloError, DegreePolynomial};
use crate::height::MinHeight;
use crate::partition::{multipartitions, partitions, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("type A_1 is excluded")]
    TypeA1,
    #[error("{family} requires characteristic {required}, got {p}")]
    Characteristic { family: Family, required: u64, p: u64 },
    #[error("{family} does not exist in rank {rank}")]
    Rank { family: Family, rank: u32 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
    #[error("unipotent degrees of {0} are not enumerated")]
    Unsupported(Family),
    #[error("malformed symbol: {0}")]
    MalformedSymbol(String),
    #[error("degree data: {0}")]
    Data(String),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    #[serde(rename = "2A")]
    TwoA,
    B,
    C,
    D,
    #[serde(rename = "2D")]
    TwoD,
    #[serde(rename = "3D4")]
    ThreeD4,
    G2,
    F4,
    E6,
    #[serde(rename = "2E6")]
    TwoE6,
    E7,
    E8,
    #[serde(rename = "2B2")]
    TwoB2,
    #[serde(rename = "2G2")]
    TwoG2,
    #[serde(rename = "2F4")]
    TwoF4,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::A,
        Family::TwoA,
        Family::B,
        Family::C,
        Family::D,
        Family::TwoD,
        Family::ThreeD4,
        Family::G2,
        Family::F4,
        Family::E6,
        Family::TwoE6,
        Family::E7,
        Family::E8,
        Family::TwoB2,
        Family::TwoG2,
        Family::TwoF4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::TwoA => "2A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::TwoD => "2D",
            Family::ThreeD4 => "3D4",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::TwoE6 => "2E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::TwoB2 => "2B2",
            Family::TwoG2 => "2G2",
            Family::TwoF4 => "2F4",
        }
    }

    /// Rank for families whose rank is part of the name.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            Family::ThreeD4 | Family::F4 | Family::TwoF4 => Some(4),
            Family::G2 | Family::TwoB2 | Family::TwoG2 => Some(2),
            Family::E6 | Family::TwoE6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }

    pub fn min_rank(self) -> u32 {
        match self {
            Family::A | Family::TwoA | Family::B | Family::C => 2,
            Family::D | Family::TwoD => 4,
            _ => self.fixed_rank().unwrap_or(1),
        }
    }

    pub fn is_suzuki_ree(self) -> bool {
        matches!(self, Family::TwoB2 | Family::TwoG2 | Family::TwoF4)
    }

    pub fn bad_primes(self) -> &'static [u64] {
        match self {
            Family::A | Family::TwoA => &[],
            Family::B | Family::C | Family::D | Family::TwoD | Family::ThreeD4 | Family::TwoB2 => &[2],
            Family::G2 | Family::F4 | Family::E6 | Family::TwoE6 | Family::E7 | Family::TwoG2 | Family::TwoF4 => {
                &[2, 3]
            }
            Family::E8 => &[2, 3, 5],
        }
    }

    /// Number of positive roots of the root system in rank `n`.
    pub fn positive_roots(self, n: u32) -> u32 {
        match self {
            Family::A | Family::TwoA => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D | Family::TwoD => n * (n - 1),
            Family::ThreeD4 => 12,
            Family::G2 | Family::TwoG2 => 6,
            Family::F4 | Family::TwoF4 => 24,
            Family::E6 | Family::TwoE6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
            Family::TwoB2 => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_uppercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == t)
            .ok_or_else(|| LieError::UnknownFamily(s.to_string()))
    }
}

/// `G = G(q)` with `q = p^f`, or `q^2 = p^{2f+1}` for Suzuki and Ree groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupSpec {
    pub family: Family,
    pub rank: u32,
    pub p: u64,
    pub f: u32,
}

impl GroupSpec {
    pub fn new(family: Family, rank: u32, p: u64, f: u32) -> Result<Self, LieError> {
        if !is_prime(p) {
            return Err(LieError::NotPrime(p));
        }
        if matches!(family, Family::A | Family::TwoA) && rank == 1 {
            return Err(LieError::TypeA1);
        }
        let rank_ok = match family.fixed_rank() {
            Some(r) => rank == r,
            None => rank >= family.min_rank(),
        };
        if !rank_ok {
            return Err(LieError::Rank { family, rank });
        }
        let required = match family {
            Family::TwoB2 | Family::TwoF4 => Some(2),
            Family::TwoG2 => Some(3),
            _ => None,
        };
        if let Some(required) = required {
            if p != required {
                return Err(LieError::Characteristic { family, required, p });
            }
            if f == 0 {
                return Err(LieError::Inadmissible(format!(
                    "{family} needs q^2 = {p}^(2f+1) > {p}"
                )));
            }
        } else if f == 0 {
            return Err(LieError::Inadmissible("f must be positive".into()));
        }
        Ok(GroupSpec { family, rank, p, f })
    }

    /// `G(q)` with `q` an ordinary prime power.
    pub fn with_q(family: Family, rank: u32, q: u64) -> Result<Self, LieError> {
        if family.is_suzuki_ree() {
            return Err(LieError::Inadmissible(format!(
                "{family} is parametrised by q^2 = p^(2f+1)"
            )));
        }
        let (p, f) = prime_power(q).ok_or(LieError::NotAPrimePower(q))?;
        Self::new(family, rank, p, f)
    }

    /// `q = p^f`; `None` for Suzuki and Ree groups.
    pub fn q(&self) -> Option<u64> {
        (!self.family.is_suzuki_ree()).then(|| self.p.pow(self.f))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = if self.family.fixed_rank().is_some() {
            String::new()
        } else {
            self.rank.to_string()
        };
        match self.q() {
            Some(q) => write!(f, "{}{}({})", self.family, rank, q),
            None => write!(f, "{}{}(q^2={}^{})", self.family, rank, self.p, 2 * self.f + 1),
        }
    }
}

/// `p^value = p^{m(G,p)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MExponent {
    pub value: u32,
}

pub fn m_of(g: &GroupSpec) -> Result<MExponent, LieError> {
    let half_q = match g.family {
        Family::B | Family::C | Family::F4 | Family::G2 => g.p == 2 && g.f > 1,
        _ => false,
    };
    let third_q = g.family == Family::G2 && g.p == 3 && g.f > 1;
    let value = if half_q || third_q { g.f - 1 } else { g.f };
    if value == 0 {
        return Err(LieError::Inadmissible(g.to_string()));
    }
    Ok(MExponent { value })
}

/// Factor bookkeeping for products and quotients of `q^k -+ 1`.
#[derive(Debug, Default)]
struct Factored {
    q_power: i64,
    two: i64,
    phi: BTreeMap<u64, i64>,
}

impl Factored {
    /// `(q^m - 1)^s`
    fn minus_one(&mut self, m: u64, s: i64) {
        for e in divisors(m) {
            *self.phi.entry(e).or_insert(0) += s;
        }
    }

    /// `(q^k + 1)^s`
    fn plus_one(&mut self, k: u64, s: i64) {
        for e in divisors(2 * k) {
            if k % e != 0 {
                *self.phi.entry(e).or_insert(0) += s;
            }
        }
    }

    fn finish(self) -> Result<DegreePolynomial, LieError> {
        if self.q_power < 0 || self.two > 0 || self.phi.values().any(|&k| k < 0) {
            return Err(LieError::Data(format!("degree is not a polynomial: {self:?}")));
        }
        Ok(DegreePolynomial {
            sign: 1,
            q_power: self.q_power as u32,
            c: 1,
            d: 1u64 << (-self.two),
            factors: self
                .phi
                .into_iter()
                .filter(|&(_, k)| k > 0)
                .map(|(e, k)| (e, k as u32))
                .collect(),
        })
    }
}

/// Unipotent degree of `GL_{n}` (or `SL_n`) labelled by `lambda`, via the
/// `q`-hook formula; with `twisted`, the unitary degree `|deg(-q)|`.
pub fn type_a_degree(lambda: &Partition, twisted: bool) -> DegreePolynomial {
    let n = lambda.size() as u64;
    let mut acc = Factored {
        q_power: lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &x)| (i * x) as i64)
            .sum(),
        ..Factored::default()
    };
    for e in 1..=n {
        acc.phi.insert(e, (n / e) as i64);
    }
    for h in lambda.hook_lengths() {
        acc.minus_one(h as u64, -1);
    }
    let deg = acc.finish().expect("q-hook degrees are polynomials");
    if twisted {
        DegreePolynomial {
            sign: 1,
            ..ennola(&deg)
        }
    } else {
        deg
    }
}

/// `deg(-q)` written as a degree polynomial in `q`, sign included.
pub fn ennola(deg: &DegreePolynomial) -> DegreePolynomial {
    let mut sign = deg.sign;
    if deg.q_power % 2 == 1 {
        sign = -sign;
    }
    let mut factors = BTreeMap::new();
    for (&e, &k) in &deg.factors {
        let image = match e {
            1 => 2,
            2 => 1,
            e if e % 2 == 1 => 2 * e,
            e if e % 4 == 2 => e / 2,
            e => e,
        };
        if e <= 2 && k % 2 == 1 {
            sign = -sign;
        }
        *factors.entry(image).or_insert(0) += k;
    }
    DegreePolynomial {
        sign,
        factors,
        ..deg.clone()
    }
}

/// A symbol: two rows of distinct non-negative integers, stored ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl Symbol {
    pub fn new(mut top: Vec<u32>, mut bottom: Vec<u32>) -> Result<Self, LieError> {
        for row in [&mut top, &mut bottom] {
            row.sort_unstable();
            if row.windows(2).any(|w| w[0] == w[1]) {
                return Err(LieError::MalformedSymbol(format!(
                    "repeated entry in row {row:?}"
                )));
            }
        }
        Ok(Symbol { top, bottom })
    }

    /// Symbol of the bipartition `(alpha, beta)` with the given defect; the
    /// top row is the longer one.
    pub fn from_bipartition(alpha: &Partition, beta: &Partition, defect: usize) -> Self {
        let m = beta.len().max(alpha.len().saturating_sub(defect));
        let row = |lam: &Partition, len: usize| -> Vec<u32> {
            (0..len)
                .map(|i| {
                    let part = lam.parts().get(len - 1 - i).copied().unwrap_or(0);
                    (part + i) as u32
                })
                .collect()
        };
        Symbol {
            top: row(alpha, m + defect),
            bottom: row(beta, m),
        }
        .reduced()
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Removes shifts: `({0} u (S+1), {0} u (T+1))` becomes `(S, T)`.
    pub fn reduced(&self) -> Self {
        let mut s = self.clone();
        while s.top.first() == Some(&0) && s.bottom.first() == Some(&0) {
            s.top = s.top[1..].iter().map(|x| x - 1).collect();
            s.bottom = s.bottom[1..].iter().map(|x| x - 1).collect();
        }
        s
    }

    pub fn is_reduced(&self) -> bool {
        !(self.top.first() == Some(&0) && self.bottom.first() == Some(&0))
    }

    pub fn defect(&self) -> usize {
        self.top.len().abs_diff(self.bottom.len())
    }

    pub fn is_degenerate(&self) -> bool {
        self.top == self.bottom
    }

    pub fn rank(&self) -> u64 {
        let total: u64 = self.top.iter().chain(&self.bottom).map(|&x| x as u64).sum();
        let s = (self.top.len() + self.bottom.len()) as u64;
        let shift = if s == 0 { 0 } else { (s - 1) * (s - 1) / 4 };
        total - shift
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.top), join(&self.bottom))
    }
}

fn defect_fits(family: Family, defect: usize) -> bool {
    match family {
        Family::B | Family::C => defect % 2 == 1,
        Family::D => defect % 4 == 0,
        Family::TwoD => defect % 4 == 2,
        _ => false,
    }
}

/// Generic degree of the unipotent character of a classical group labelled
/// by a symbol.
pub fn symbol_degree(sym: &Symbol, family: Family) -> Result<DegreePolynomial, LieError> {
    if !matches!(family, Family::B | Family::C | Family::D | Family::TwoD) {
        return Err(LieError::Unsupported(family));
    }
    if !defect_fits(family, sym.defect()) {
        return Err(LieError::MalformedSymbol(format!(
            "{sym} has defect {} which does not occur for {family}",
            sym.defect()
        )));
    }
    let sym = sym.reduced();
    let n = sym.rank();
    if n < 2 {
        return Err(LieError::MalformedSymbol(format!("{sym} has rank {n}")));
    }
    let (s, t) = (&sym.top, &sym.bottom);
    let ab = (s.len() + t.len()) as i64;
    let mut acc = Factored::default();
    match family {
        Family::B | Family::C => {
            for i in 1..=n {
                acc.minus_one(2 * i, 1);
            }
        }
        _ => {
            for i in 1..n {
                acc.minus_one(2 * i, 1);
            }
            if family == Family::D {
                acc.minus_one(n, 1);
            } else {
                acc.plus_one(n, 1);
            }
        }
    }
    for row in [s, t] {
        for (i, &x) in row.iter().enumerate() {
            for &y in &row[i + 1..] {
                acc.q_power += x as i64;
                acc.minus_one((y - x) as u64, 1);
            }
            for k in 1..=x as u64 {
                acc.minus_one(2 * k, -1);
            }
        }
    }
    for &x in s {
        for &y in t {
            acc.q_power += x.min(y) as i64;
            if x == y {
                acc.two += 1;
            } else {
                acc.plus_one(x.abs_diff(y) as u64, 1);
            }
        }
    }
    acc.two -= match family {
        Family::B | Family::C => (ab - 1) / 2,
        Family::D if sym.is_degenerate() => ab / 2,
        _ => (ab - 2) / 2,
    };
    let mut k = ab - 2;
    while k >= 2 {
        acc.q_power -= k * (k - 1) / 2;
        k -= 2;
    }
    acc.finish()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnipotentCharacter {
    pub label: String,
    pub degree: DegreePolynomial,
}

fn bipartitions(k: usize) -> Vec<(Partition, Partition)> {
    multipartitions(2, k)
        .into_iter()
        .map(|mut v| {
            let beta = v.pop().expect("pair");
            let alpha = v.pop().expect("pair");
            (alpha, beta)
        })
        .collect()
}

/// Reduced symbols of rank `n` for a classical family, each with the number
/// of unipotent characters it labels.
pub fn symbols(family: Family, n: u32) -> Result<Vec<(Symbol, usize)>, LieError> {
    let n = n as usize;
    let mut out = Vec::new();
    let mut defect = match family {
        Family::B | Family::C => 1,
        Family::D => 0,
        Family::TwoD => 2,
        _ => return Err(LieError::Unsupported(family)),
    };
    let step = if matches!(family, Family::B | Family::C) { 2 } else { 4 };
    loop {
        let shift = if defect % 2 == 1 {
            (defect * defect - 1) / 4
        } else {
            defect * defect / 4
        };
        if shift > n {
            break;
        }
        for (alpha, beta) in bipartitions(n - shift) {
            if defect == 0 && alpha < beta {
                continue;
            }
            let sym = Symbol::from_bipartition(&alpha, &beta, defect);
            let count = if defect == 0 && alpha == beta { 2 } else { 1 };
            out.push((sym, count));
        }
        defect += step;
    }
    Ok(out)
}

fn static_family_file(family: Family) -> Option<(&'static str, &'static str)> {
    match family {
        Family::G2 => Some(("g2.txt", include_str!("../data/g2.txt"))),
        Family::ThreeD4 => Some(("3d4.txt", include_str!("../data/3d4.txt"))),
        _ => None,
    }
}

/// Complete list of unipotent characters of `G(q)` of the given family and
/// rank, with generic degrees.
pub fn unipotent_degrees(family: Family, n: u32) -> Result<Vec<UnipotentCharacter>, LieError> {
    match family {
        Family::A | Family::TwoA => {
            if n < 1 {
                return Err(LieError::Rank { family, rank: n });
            }
            Ok(partitions(n as usize + 1)
                .into_iter()
                .map(|lam| UnipotentCharacter {
                    label: lam.to_string(),
                    degree: type_a_degree(&lam, family == Family::TwoA),
                })
                .collect())
        }
        Family::B | Family::C | Family::D | Family::TwoD => {
            if n < family.min_rank() {
                return Err(LieError::Rank { family, rank: n });
            }
            let mut out = Vec::new();
            for (sym, count) in symbols(family, n)? {
                let degree = symbol_degree(&sym, family)?;
                if count == 1 {
                    out.push(UnipotentCharacter {
                        label: sym.to_string(),
                        degree,
                    });
                } else {
                    for tag in ["+", "-"] {
                        out.push(UnipotentCharacter {
                            label: format!("{sym}{tag}"),
                            degree: degree.clone(),
                        });
                    }
                }
            }
            Ok(out)
        }
        Family::G2 | Family::ThreeD4 => Ok(load_static(family)?
            .into_iter()
            .map(|r| UnipotentCharacter {
                label: r.name,
                degree: r.degree,
            })
            .collect()),
        _ => Err(LieError::Unsupported(family)),
    }
}

/// Least positive `nu_p` of a unipotent character degree of `G(q)`, `p` the
/// defining characteristic.
pub fn unipotent_mh(family: Family, n: u32, q: u64) -> Result<MinHeight, LieError> {
    let spec = GroupSpec::with_q(family, n, q)?;
    let chars = unipotent_degrees(family, spec.rank)?;
    let mut vals = Vec::with_capacity(chars.len());
    for ch in &chars {
        let (value, nu) = ch.degree.eval_valuation(q as i64, spec.p)?;
        if !value.is_positive() {
            return Err(LieError::Data(format!("{} has value {value} at q = {q}", ch.label)));
        }
        vals.push(nu);
    }
    Ok(MinHeight::from_heights(vals))
}

/// Groups left out of the unipotent comparison: those that are not
/// quasi-simple, and those whose minimal height is attained only outside the
/// unipotent characters and is read off a character table.
pub fn unipotent_exception(spec: &GroupSpec) -> Option<&'static str> {
    match (spec.family, spec.rank, spec.q()) {
        (Family::B | Family::C, 2, Some(2)) | (Family::G2, 2, Some(2)) | (Family::TwoA, 2, Some(2)) => {
            Some("not quasi-simple")
        }
        (Family::B | Family::C, 3, Some(2)) | (Family::G2, 2, Some(3)) | (Family::F4, 4, Some(2)) => {
            Some("height 1 read from the character table")
        }
        _ => None,
    }
}

/// One line of a static degree file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeRecord {
    pub name: String,
    pub family: Family,
    pub rank: u32,
    pub degree: DegreePolynomial,
}

impl DegreeRecord {
    pub fn to_line(&self) -> String {
        let d = &self.degree;
        let factors = if d.factors.is_empty() {
            "-".to_string()
        } else {
            d.factors
                .iter()
                .map(|(e, k)| format!("{e}:{k}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "name={} family={} rank={} sign={} qpower={} c={} d={} factors={}",
            self.name,
            self.family,
            self.rank,
            if d.sign < 0 { "-1" } else { "+1" },
            d.q_power,
            d.c,
            d.d,
            factors
        )
    }
}

impl FromStr for DegreeRecord {
    type Err = LieError;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        const KEYS: [&str; 8] = ["name", "family", "rank", "sign", "qpower", "c", "d", "factors"];
        let bad = |what: &str| LieError::Data(format!("{what} in line {line:?}"));
        let fields: Vec<&str> = line.split(' ').collect();
        if fields.len() != KEYS.len() {
            return Err(bad("wrong number of fields"));
        }
        let mut values = Vec::with_capacity(KEYS.len());
        for (field, key) in fields.iter().zip(KEYS) {
            let (k, v) = field.split_once('=').ok_or_else(|| bad("missing '='"))?;
            if k != key {
                return Err(bad(&format!("expected key {key}")));
            }
            values.push(v);
        }
        let num = |s: &str| s.parse::<u64>().map_err(|_| bad("bad number"));
        let sign = match values[3] {
            "+1" => 1,
            "-1" => -1,
            _ => return Err(bad("bad sign")),
        };
        let mut factors = BTreeMap::new();
        if values[7] != "-" {
            for pair in values[7].split(',') {
                let (e, k) = pair.split_once(':').ok_or_else(|| bad("bad factor"))?;
                let (e, k) = (num(e)?, num(k)? as u32);
                if e == 0 || k == 0 || factors.insert(e, k).is_some() {
                    return Err(bad("bad factor"));
                }
            }
        }
        let (c, d) = (num(values[5])?, num(values[6])?);
        if c == 0 || d == 0 {
            return Err(bad("zero denominator"));
        }
        Ok(DegreeRecord {
            name: values[0].to_string(),
            family: values[1].parse()?,
            rank: num(values[2])? as u32,
            degree: DegreePolynomial {
                sign,
                q_power: num(values[4])? as u32,
                c,
                d,
                factors,
            },
        })
    }
}

pub fn parse_degree_file(text: &str) -> Result<Vec<DegreeRecord>, LieError> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

/// Static records for `G2` or `3D4`. The directory in `EMVERIFY_DATA`, when
/// set, replaces the built-in files.
pub fn load_static(family: Family) -> Result<Vec<DegreeRecord>, LieError> {
    let (file, builtin) = static_family_file(family).ok_or(LieError::Unsupported(family))?;
    let text = match std::env::var_os("EMVERIFY_DATA") {
        Some(dir) => {
            let path = PathBuf::from(dir).join(file);
            std::fs::read_to_string(&path)
                .map_err(|e| LieError::Data(format!("{}: {e}", path.display())))?
        }
        None => builtin.to_string(),
    };
    let records = parse_degree_file(&text)?;
    if let Some(r) = records.iter().find(|r| r.family != family) {
        return Err(LieError::Data(format!("{} belongs to {}", r.name, r.family)));
    }
    Ok(records)
}

/// Arguments at which degree data is checked.
pub const SAMPLE_Q: [i64; 7] = [2, 3, 4, 5, 7, 8, 9];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DataValidation {
    pub records: usize,
    pub violations: Vec<String>,
}

impl DataValidation {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Shape checks on every degree polynomial the crate produces: positive
/// integral values at the sample arguments, denominators built from bad
/// primes, a unique Steinberg degree `q^N`, and expected record counts.
pub fn validate_degree_data() -> Result<DataValidation, LieError> {
    let mut report = DataValidation {
        records: 0,
        violations: Vec::new(),
    };
    let mut cases: Vec<(Family, u32)> = Vec::new();
    for n in 2..=5 {
        cases.extend([(Family::A, n), (Family::TwoA, n), (Family::B, n), (Family::C, n)]);
    }
    for n in 4..=5 {
        cases.extend([(Family::D, n), (Family::TwoD, n)]);
    }
    cases.extend([(Family::G2, 2), (Family::ThreeD4, 4)]);
    for (family, n) in cases {
        let chars = unipotent_degrees(family, n)?;
        report.records += chars.len();
        let expected_count = match family {
            Family::G2 => Some(10),
            Family::ThreeD4 => Some(8),
            _ => None,
        };
        if let Some(k) = expected_count {
            if chars.len() != k {
                report
                    .violations
                    .push(format!("{family}: {} records, expected {k}", chars.len()));
            }
        }
        let roots = family.positive_roots(n);
        let steinberg = chars
            .iter()
            .filter(|c| c.degree.is_pure_q_power() && c.degree.q_power > 0)
            .collect::<Vec<_>>();
        if steinberg.len() != 1 || steinberg[0].degree.q_power != roots {
            report
                .violations
                .push(format!("{family}{n}: no unique degree q^{roots}"));
        }
        for ch in &chars {
            let d = &ch.degree;
            for v in d.shape_violations(&SAMPLE_Q, family.bad_primes(), 1) {
                report.violations.push(format!("{family}{n} {}: {v}", ch.label));
            }
            let allowed = match family {
                Family::A | Family::TwoA => d.d == 1,
                Family::G2 => [1, 2, 3, 6].contains(&d.d),
                _ => d.d.is_power_of_two(),
            };
            if !allowed {
                report
                    .violations
                    .push(format!("{family}{n} {}: denominator {}", ch.label, d.d));
            }
        }
    }
    Ok(report)
}
