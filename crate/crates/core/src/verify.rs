//! Verification records: each pairs a block-side minimal height with a
//! defect-group-side one. Suites build sorted record lists together with
//! any invariant violations met along the way.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::{divisors, nu_factorial};
use crate::cyclo::lemma42_scan;
use crate::engine::{
    build_lemma33_group, build_sylow_lie, char_degrees, even_part, permutation_group, DegreeReport, SylowFamily,
    DEFAULT_BOUND,
};
use crate::height::MinHeight;
use crate::lie::{m_of, unipotent_exception, unipotent_mh, validate_degree_data, Family, GroupSpec};
use crate::partition::{partition_counts, partitions, Partition};
use crate::pgroup::{mh_sylow_alt, mh_sylow_sym, sylow_degrees_sym, sylow_generators_sym, PDegreeMultiset};
use crate::symblocks::{
    block_heights, blocks_alt, blocks_sym, expected_defect, nonabelian_defect, BlockLabel, SplitHalf,
};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Target {
    Sym { n: usize, p: usize },
    Alt { n: usize, p: usize },
    SylowSym { n: usize, p: usize },
    SylowAlt { n: usize },
    Lie(GroupSpec),
    LieSylow { family: SylowFamily, n: usize, q: u64 },
    Lemma42 { p: u64, d: u64 },
    Lemma33 { q: u64 },
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Sym { n, p } => write!(f, "S{n} p={p}"),
            Target::Alt { n, p } => write!(f, "A{n} p={p}"),
            Target::SylowSym { n, p } => write!(f, "Syl{p}(S{n})"),
            Target::SylowAlt { n } => write!(f, "Syl2(A{n})"),
            Target::Lie(spec) => write!(f, "{spec} p={}", spec.p),
            Target::LieSylow { family, n, q } => match family {
                SylowFamily::SL => write!(f, "Sylow of SL{n}({q})"),
                _ => write!(f, "Sylow of {family}({q})"),
            },
            Target::Lemma42 { p, d } => write!(f, "cyclotomic p={p} d={d}"),
            Target::Lemma33 { q } => write!(f, "Y({q})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockKey {
    Block {
        weight: usize,
        core: Partition,
        split: Option<SplitHalf>,
    },
    Principal,
    Sylow,
    Scan,
    Whole,
}

impl BlockKey {
    fn of(label: &BlockLabel) -> Self {
        BlockKey::Block {
            weight: label.weight,
            core: label.core.clone(),
            split: label.split,
        }
    }
}

impl fmt::Display for BlockKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockKey::Block { weight, core, split } => {
                write!(f, "core={core} w={weight}")?;
                match split {
                    Some(SplitHalf::Plus) => f.write_str(" +"),
                    Some(SplitHalf::Minus) => f.write_str(" -"),
                    None => Ok(()),
                }
            }
            BlockKey::Principal => f.write_str("principal"),
            BlockKey::Sylow => f.write_str("sylow"),
            BlockKey::Scan => f.write_str("scan"),
            BlockKey::Whole => f.write_str("group"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Match,
    Mismatch,
    Skipped(String),
}

impl Status {
    pub fn compare(b: MinHeight, d: MinHeight) -> Self {
        if b == d {
            Status::Match
        } else {
            Status::Mismatch
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Match => f.write_str("match"),
            Status::Mismatch => f.write_str("mismatch"),
            Status::Skipped(reason) => write!(f, "skipped({reason})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub target: Target,
    pub block: BlockKey,
    pub mh_b: MinHeight,
    pub mh_d: MinHeight,
    pub status: Status,
    pub provenance: &'static str,
    pub detail: Option<String>,
}

impl VerificationRecord {
    pub fn new(target: Target, block: BlockKey, mh_b: MinHeight, mh_d: MinHeight, provenance: &'static str) -> Self {
        VerificationRecord {
            status: Status::compare(mh_b, mh_d),
            target,
            block,
            mh_b,
            mh_d,
            provenance,
            detail: None,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped(reason.into());
        self
    }
}

impl Serialize for VerificationRecord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            target: String,
            block: String,
            #[serde(rename = "mhB")]
            mh_b: MinHeight,
            #[serde(rename = "mhD")]
            mh_d: MinHeight,
            status: String,
            provenance: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            detail: Option<&'a str>,
        }
        Row {
            target: self.target.to_string(),
            block: self.block.to_string(),
            mh_b: self.mh_b,
            mh_d: self.mh_d,
            status: self.status.to_string(),
            provenance: self.provenance,
            detail: self.detail.as_deref(),
        }
        .serialize(s)
    }
}

/// Records in output order plus invariant violations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<VerificationRecord>,
    pub violations: Vec<String>,
}

impl Report {
    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
        self.violations.extend(other.violations);
    }

    fn finish(mut self) -> Self {
        self.records
            .sort_by(|a, b| (&a.target, &a.block).cmp(&(&b.target, &b.block)));
        self
    }

    pub fn mismatches(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.status == Status::Mismatch)
            .count()
    }

    /// No mismatching record and no violation.
    pub fn ok(&self) -> bool {
        self.mismatches() == 0 && self.violations.is_empty()
    }
}

fn merge(parts: Vec<Report>) -> Report {
    let mut out = Report::default();
    for r in parts {
        out.extend(r);
    }
    out.finish()
}

/// Predicted value for a block: `1` for a non-abelian defect group, else
/// infinity.
fn predicted(label: &BlockLabel) -> MinHeight {
    if nonabelian_defect(label) {
        MinHeight::Finite(1)
    } else {
        MinHeight::Infinity
    }
}

fn block_record(label: &BlockLabel, mh_d: MinHeight, target: Target, report: &mut Report) {
    let heights = match block_heights(label) {
        Ok(h) => h,
        Err(e) => {
            report.violations.push(format!("{label}: {e}"));
            return;
        }
    };
    if heights.defect != expected_defect(label) {
        report.violations.push(format!(
            "{label}: defect {} but the defect group has order p^{}",
            heights.defect,
            expected_defect(label)
        ));
    }
    if !heights.heights.contains_key(&0) {
        report.violations.push(format!("{label}: no character of height zero"));
    }
    let mh_b = heights.min_height();
    if mh_b != predicted(label) {
        report.violations.push(format!(
            "{label}: minimal height {mh_b}, predicted {}",
            predicted(label)
        ));
    }
    report.records.push(
        VerificationRecord::new(target, BlockKey::of(label), mh_b, mh_d, "symblocks/pgroup-chars").with_detail(format!(
            "defect={} characters={}",
            heights.defect,
            heights.character_count()
        )),
    );
}

fn sym_case(n: usize, p: usize) -> Report {
    let mut report = Report::default();
    let mut characters = 0;
    for label in blocks_sym(n, p) {
        characters += crate::symblocks::block_partitions(&label.core, label.weight, p)
            .map(|v| v.len())
            .unwrap_or(0);
        let mh_d = match mh_sylow_sym((p * label.weight) as u64, p as u32) {
            Ok(m) => m,
            Err(e) => {
                report.violations.push(format!("{label}: {e}"));
                continue;
            }
        };
        block_record(&label, mh_d, Target::Sym { n, p }, &mut report);
    }
    let expected = partition_counts(n)[n] as usize;
    if characters != expected {
        report.violations.push(format!(
            "S{n} p={p}: blocks hold {characters} characters, expected {expected}"
        ));
    }
    report
}

/// Every `S_n`-block for `1 <= n <= n_max` and each prime.
pub fn sym_records(n_max: usize, primes: &[usize]) -> Report {
    let cases: Vec<(usize, usize)> = (1..=n_max)
        .flat_map(|n| primes.iter().map(move |&p| (n, p)))
        .collect();
    merge(cases.into_par_iter().map(|(n, p)| sym_case(n, p)).collect())
}

/// Irreducible characters of `A_n`: one per pair `{l, l'}` with `l != l'`,
/// two per self-conjugate `l`.
fn alternating_class_count(n: usize) -> usize {
    partitions(n)
        .iter()
        .map(|l| {
            let c = l.conjugate();
            if c == *l {
                2
            } else if *l > c {
                1
            } else {
                0
            }
        })
        .sum()
}

fn alt_case(n: usize, p: usize) -> Report {
    let mut report = Report::default();
    let mut characters = 0;
    for label in blocks_alt(n, p) {
        if let Ok(h) = block_heights(&label) {
            characters += h.character_count();
        }
        let mh_d = if p == 2 {
            Ok(mh_sylow_alt(2 * label.weight as u64))
        } else {
            mh_sylow_sym((p * label.weight) as u64, p as u32)
        };
        match mh_d {
            Ok(m) => block_record(&label, m, Target::Alt { n, p }, &mut report),
            Err(e) => report.violations.push(format!("{label}: {e}")),
        }
    }
    let expected = alternating_class_count(n);
    if characters != expected {
        report.violations.push(format!(
            "A{n} p={p}: blocks hold {characters} characters, expected {expected}"
        ));
    }
    report
}

/// Every `A_n`-block for `2 <= n <= n_max` and each prime.
pub fn alt_records(n_max: usize, primes: &[usize]) -> Report {
    let cases: Vec<(usize, usize)> = (2..=n_max)
        .flat_map(|n| primes.iter().map(move |&p| (n, p)))
        .collect();
    merge(cases.into_par_iter().map(|(n, p)| alt_case(n, p)).collect())
}

fn engine_min_height(report: &DegreeReport, p: u64) -> MinHeight {
    report
        .min_positive_exponent(p)
        .map_or(MinHeight::Infinity, MinHeight::Finite)
}

/// Degree multiset `{k: #characters of degree p^k}` of an engine report, or
/// `None` if some degree is not a power of `p`.
fn exponent_multiset(report: &DegreeReport, p: u64) -> Option<BTreeMap<u32, u128>> {
    let mut out = BTreeMap::new();
    for (&d, &m) in &report.degrees {
        let k = crate::arith::nu(d, p);
        if p.pow(k) != d {
            return None;
        }
        out.insert(k, m as u128);
    }
    Some(out)
}

fn sylow_sym_case(n: usize, p: usize, bound: u64) -> Report {
    let mut report = Report::default();
    let target = Target::SylowSym { n, p };
    let recursion: PDegreeMultiset = match sylow_degrees_sym(n as u64, p as u32) {
        Ok(m) => m,
        Err(e) => {
            report.violations.push(format!("{target}: {e}"));
            return report;
        }
    };
    let engine = sylow_generators_sym(n, p, bound)
        .map_err(|e| e.to_string())
        .and_then(|gens| permutation_group(n, &gens, bound as usize).map_err(|e| e.to_string()))
        .and_then(|g| char_degrees(&g).map(|r| (g, r)).map_err(|e| e.to_string()));
    let (group, degrees) = match engine {
        Ok(x) => x,
        Err(e) => {
            report.violations.push(format!("{target}: {e}"));
            return report;
        }
    };
    if exponent_multiset(&degrees, p as u64).as_ref() != Some(&recursion.counts) {
        report.violations.push(format!(
            "{target}: recursion {:?} differs from engine {:?}",
            recursion.counts, degrees.degrees
        ));
    }
    report.records.push(
        VerificationRecord::new(
            target,
            BlockKey::Sylow,
            recursion.min_height(),
            engine_min_height(&degrees, p as u64),
            "pgroup-chars/groupengine",
        )
        .with_detail(format!(
            "order={} classes={} degrees={}",
            group.order(),
            degrees.class_count,
            format_degrees(&degrees.degrees)
        )),
    );
    if p == 2 {
        let target = Target::SylowAlt { n };
        match even_part(&group, bound as usize).and_then(|h| char_degrees(&h).map(|r| (h, r))) {
            Ok((h, r)) => report.records.push(
                VerificationRecord::new(
                    target,
                    BlockKey::Sylow,
                    mh_sylow_alt(n as u64),
                    engine_min_height(&r, 2),
                    "pgroup-chars/groupengine",
                )
                .with_detail(format!(
                    "order={} classes={} degrees={}",
                    h.order(),
                    r.class_count,
                    format_degrees(&r.degrees)
                )),
            ),
            Err(e) => report.violations.push(format!("{target}: {e}")),
        }
    }
    report
}

pub fn format_degrees(degrees: &BTreeMap<u64, u64>) -> String {
    let parts: Vec<String> = degrees.iter().map(|(d, m)| format!("{d}:{m}")).collect();
    format!("{{{}}}", parts.join(","))
}

/// Recursion against engine for Sylow subgroups of `S_n` (and, for `p = 2`,
/// of `A_n`) of order at most `bound`.
pub fn sylow_oracle_records(bound: u64, primes: &[usize]) -> Report {
    let mut cases = Vec::new();
    for &p in primes {
        let mut n = 2;
        while n <= 256 && (p as u64).checked_pow(nu_factorial(n as u64, p as u64)).is_some_and(|o| o <= bound) {
            cases.push((n, p));
            n += 1;
        }
    }
    merge(
        cases
            .into_par_iter()
            .map(|(n, p)| sylow_sym_case(n, p, bound))
            .collect(),
    )
}

fn lie_case(family: Family, rank: u32, q: u64) -> Report {
    let mut report = Report::default();
    let spec = match GroupSpec::with_q(family, rank, q) {
        Ok(s) => s,
        Err(e) => {
            report.violations.push(format!("{family}{rank}({q}): {e}"));
            return report;
        }
    };
    let m = match m_of(&spec) {
        Ok(m) => MinHeight::Finite(m.value),
        Err(e) => {
            report.violations.push(format!("{spec}: {e}"));
            return report;
        }
    };
    let target = Target::Lie(spec);
    let record = match unipotent_mh(family, rank, q) {
        Ok(mh) => {
            let r = VerificationRecord::new(target, BlockKey::Principal, mh, m, "lieheights")
                .with_detail("unipotent characters");
            match unipotent_exception(&spec) {
                Some(reason) => r.skipped(reason),
                None => r,
            }
        }
        Err(crate::lie::LieError::Unsupported(_)) => {
            VerificationRecord::new(target, BlockKey::Principal, MinHeight::Infinity, m, "lieheights")
                .skipped("unipotent degrees not enumerated")
        }
        Err(e) => {
            report.violations.push(format!("{spec}: {e}"));
            return report;
        }
    };
    report.records.push(record);
    report
}

/// Family of `G` whose Sylow subgroup a unitriangular model realises.
fn sylow_model_family(family: SylowFamily, n: usize) -> (Family, u32) {
    match family {
        SylowFamily::SL => (Family::A, n as u32 - 1),
        SylowFamily::Sp4 => (Family::C, 2),
        SylowFamily::SU3 => (Family::TwoA, 2),
        SylowFamily::SU4 => (Family::TwoA, 3),
    }
}

/// Explicit Sylow models compared with `m(G, p)`.
pub fn lie_sylow_instances(q_list: &[u64]) -> Vec<(SylowFamily, usize, u64)> {
    let mut out = Vec::new();
    for &q in q_list {
        out.push((SylowFamily::SL, 3, q));
        if q <= 3 {
            out.push((SylowFamily::SL, 4, q));
        }
        out.push((SylowFamily::Sp4, 4, q));
        if q > 2 && q <= 5 {
            out.push((SylowFamily::SU3, 3, q));
        }
        if q <= 3 {
            out.push((SylowFamily::SU4, 4, q));
        }
    }
    out
}

fn lie_sylow_case(family: SylowFamily, n: usize, q: u64, bound: usize) -> Report {
    let mut report = Report::default();
    let target = Target::LieSylow { family, n, q };
    let (lie_family, rank) = sylow_model_family(family, n);
    let m = match GroupSpec::with_q(lie_family, rank, q).and_then(|s| m_of(&s)) {
        Ok(m) => MinHeight::Finite(m.value),
        Err(e) => {
            report.violations.push(format!("{target}: {e}"));
            return report;
        }
    };
    let p = crate::arith::prime_power(q).map_or(q, |(p, _)| p);
    match build_sylow_lie(family, n, q, bound).and_then(|g| char_degrees(&g).map(|r| (g, r))) {
        Ok((g, r)) => {
            report.records.push(
                VerificationRecord::new(target, BlockKey::Sylow, m, engine_min_height(&r, p), "lieheights/groupengine")
                    .with_detail(format!(
                        "order={} classes={} degrees={} field={:?}",
                        g.order(),
                        r.class_count,
                        format_degrees(&r.degrees),
                        field_of(&g)
                    )),
            );
        }
        Err(e) => report.violations.push(format!("{target}: {e}")),
    }
    report
}

fn field_of(g: &crate::engine::ConcreteGroup) -> String {
    match g.kind() {
        crate::engine::ElementKind::Matrix { field, .. } => field.modulus_string(),
        crate::engine::ElementKind::Permutation { .. } => String::new(),
    }
}

/// Unipotent minimal heights against `m(G, p)` for the families, ranks up to
/// `rank_max` and `q` values given, plus explicit Sylow models.
pub fn lie_records(families: &[Family], rank_max: u32, q_list: &[u64], bound: usize) -> Report {
    let mut cases = Vec::new();
    for &family in families {
        let ranks: Vec<u32> = match family.fixed_rank() {
            Some(r) => vec![r],
            None => (family.min_rank()..=rank_max).collect(),
        };
        for rank in ranks {
            for &q in q_list {
                cases.push((family, rank, q));
            }
        }
    }
    let mut parts: Vec<Report> = cases
        .into_par_iter()
        .map(|(family, rank, q)| lie_case(family, rank, q))
        .collect();
    let models: Vec<_> = lie_sylow_instances(q_list)
        .into_iter()
        .filter(|&(family, n, _)| {
            let (f, rank) = sylow_model_family(family, n);
            families.contains(&f) && rank <= rank_max
        })
        .collect();
    parts.extend(
        models
            .into_par_iter()
            .map(|(family, n, q)| lie_sylow_case(family, n, q, bound))
            .collect::<Vec<_>>(),
    );
    let mut data = Report::default();
    match validate_degree_data() {
        Ok(v) => data.violations.extend(v.violations),
        Err(e) => data.violations.push(e.to_string()),
    }
    parts.push(data);
    merge(parts)
}

/// Cyclotomic valuation scan for every `d | p - 1`.
pub fn lemma42_records(primes: &[u64], q_max: u64, i_max: u32) -> Report {
    let cases: Vec<(u64, u64)> = primes
        .iter()
        .flat_map(|&p| divisors(p.saturating_sub(1).max(1)).into_iter().map(move |d| (p, d)))
        .collect();
    merge(
        cases
            .into_par_iter()
            .map(|(p, d)| {
                let mut report = Report::default();
                let target = Target::Lemma42 { p, d };
                match lemma42_scan(p, d, i_max, q_max) {
                    Ok(scan) => {
                        for v in &scan.violations {
                            report.violations.push(format!(
                                "{target}: nu_{p}(Phi_{}({})) = {}, expected {}",
                                v.m, v.q, v.nu, v.expected
                            ));
                        }
                        let observed = scan.min_nu.map_or(MinHeight::Infinity, MinHeight::Finite);
                        let mut r =
                            VerificationRecord::new(target, BlockKey::Scan, observed, MinHeight::Finite(1), "cyclo")
                                .with_detail(format!(
                                    "q={:?} checks={} violations={}",
                                    scan.qs,
                                    scan.checks,
                                    scan.violations.len()
                                ));
                        if scan.qs.is_empty() {
                            r = r.skipped(format!("no q <= {q_max} of order {d}"));
                        }
                        report.records.push(r);
                    }
                    Err(e) => report.violations.push(format!("{target}: {e}")),
                }
                report
            })
            .collect(),
    )
}

/// Builds `Y(q)` and checks its degrees `{1: q^3, q: q^3 - q}`, class count
/// `2q^3 - q` and derived subgroup of order `q^2`.
pub fn lemma33_records(q_list: &[u64], bound: usize) -> Report {
    merge(
        q_list
            .par_iter()
            .map(|&q| {
                let mut report = Report::default();
                let target = Target::Lemma33 { q };
                let Some((p, f)) = crate::arith::prime_power(q) else {
                    report.violations.push(format!("{target}: {q} is not a prime power"));
                    return report;
                };
                match build_lemma33_group(q, bound).and_then(|g| char_degrees(&g).map(|r| (g, r))) {
                    Ok((g, r)) => {
                        let q3 = q.pow(3);
                        let expected = BTreeMap::from([(1, q3), (q, q3 - q)]);
                        if r.degrees != expected {
                            report.violations.push(format!(
                                "{target}: degrees {} expected {}",
                                format_degrees(&r.degrees),
                                format_degrees(&expected)
                            ));
                        }
                        if r.class_count != 2 * q3 - q {
                            report
                                .violations
                                .push(format!("{target}: {} classes, expected {}", r.class_count, 2 * q3 - q));
                        }
                        if r.derived_order != q * q {
                            report.violations.push(format!(
                                "{target}: derived subgroup of order {}, expected {}",
                                r.derived_order,
                                q * q
                            ));
                        }
                        report.records.push(
                            VerificationRecord::new(
                                target,
                                BlockKey::Whole,
                                MinHeight::Finite(f),
                                engine_min_height(&r, p),
                                "groupengine",
                            )
                            .with_detail(format!(
                                "order={} classes={} linear={} degrees={} field={}",
                                g.order(),
                                r.class_count,
                                r.linear_count,
                                format_degrees(&r.degrees),
                                field_of(&g)
                            )),
                        );
                    }
                    Err(e) => report.violations.push(format!("{target}: {e}")),
                }
                report
            })
            .collect(),
    )
}

/// Parameters of the full suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub primes: Vec<usize>,
    pub oracle_bound: u64,
    pub families: Vec<Family>,
    pub rank_max: u32,
    pub q_list: Vec<u64>,
    pub lemma42_primes: Vec<u64>,
    pub lemma42_q_max: u64,
    pub lemma42_i_max: u32,
    pub lemma33_q: Vec<u64>,
    pub engine_bound: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 20,
            primes: vec![2, 3, 5],
            oracle_bound: 1 << 14,
            families: vec![
                Family::A,
                Family::TwoA,
                Family::B,
                Family::C,
                Family::D,
                Family::TwoD,
                Family::ThreeD4,
                Family::G2,
            ],
            rank_max: 4,
            q_list: vec![2, 3, 4, 5, 7, 8, 9],
            lemma42_primes: vec![3, 5, 7, 11],
            lemma42_q_max: 50,
            lemma42_i_max: 2,
            lemma33_q: vec![3, 5],
            engine_bound: DEFAULT_BOUND,
        }
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Report {
    let mut report = Report::default();
    report.extend(sym_records(cfg.n_max, &cfg.primes));
    report.extend(alt_records(cfg.n_max, &cfg.primes));
    report.extend(sylow_oracle_records(cfg.oracle_bound, &cfg.primes));
    report.extend(lie_records(&cfg.families, cfg.rank_max, &cfg.q_list, cfg.engine_bound));
    report.extend(lemma42_records(&cfg.lemma42_primes, cfg.lemma42_q_max, cfg.lemma42_i_max));
    report.extend(lemma33_records(&cfg.lemma33_q, cfg.engine_bound));
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_symmetric_suite() {
        let r = sym_records(8, &[2, 3]);
        assert!(r.ok(), "{:?}", r.violations);
        assert!(r.records.windows(2).all(|w| (&w[0].target, &w[0].block) < (&w[1].target, &w[1].block)));
    }

    #[test]
    fn small_alternating_suite() {
        let r = alt_records(9, &[2, 3]);
        assert!(r.ok(), "{:?}", r.violations);
    }

    #[test]
    fn alternating_counts() {
        let k: Vec<usize> = (2..=10).map(alternating_class_count).collect();
        assert_eq!(k, vec![1, 3, 4, 5, 7, 9, 14, 18, 24]);
    }

    #[test]
    fn record_serialisation() {
        let r = VerificationRecord::new(
            Target::Sym { n: 4, p: 2 },
            BlockKey::Principal,
            MinHeight::Infinity,
            MinHeight::Infinity,
            "x",
        );
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"target":"S4 p=2","block":"principal","mhB":"infinity","mhD":"infinity","status":"match","provenance":"x"}"#
        );
        assert_eq!(Status::Skipped("why".into()).to_string(), "skipped(why)");
    }

    #[test]
    fn target_order_is_numeric() {
        assert!(Target::Sym { n: 2, p: 3 } < Target::Sym { n: 10, p: 2 });
    }
}
