use std::collections::{BTreeMap, HashSet};

use emverify_core::engine::{
    build_lemma33_group, build_sylow_lie, char_degrees, even_part, permutation_group, ConcreteGroup, SylowFamily,
    DEFAULT_BOUND,
};
use emverify_core::lie::{m_of, GroupSpec, Family};
use emverify_core::pgroup::{sylow_degrees_sym, sylow_generators_sym};

/// Conjugacy classes by brute force over all pairs.
fn brute_classes(g: &ConcreteGroup) -> (usize, usize) {
    let n = g.order();
    let mut scratch = vec![0u8; g.kind().word_len()];
    let mut seen = vec![false; n];
    let mut classes = 0;
    let mut central = 0;
    for x in 0..n {
        if seen[x] {
            continue;
        }
        classes += 1;
        let mut orbit = HashSet::new();
        for y in 0..n {
            let yi = g.inverse_index(y);
            let t = g.mul_index(yi, x, &mut scratch);
            let c = g.mul_index(t, y, &mut scratch);
            orbit.insert(c);
        }
        if orbit.len() == 1 {
            central += 1;
        }
        for c in orbit {
            seen[c] = true;
        }
    }
    (classes, central)
}

fn check_group(g: &ConcreteGroup) {
    let sizes: usize = g.classes().iter().map(|c| c.size).sum();
    assert_eq!(sizes, g.order());
    assert_eq!(g.classes()[g.class_of(g.identity_index())].size, 1);
    let (k, z) = brute_classes(g);
    assert_eq!(g.class_count(), k);
    assert_eq!(g.center_order(), z);
    let r = char_degrees(g).unwrap();
    assert!(r.invariants_hold());
    assert_eq!(r.class_count as usize, k);
}

#[test]
fn small_groups_by_brute_force() {
    let s4 = permutation_group(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], DEFAULT_BOUND).unwrap();
    check_group(&s4);
    assert_eq!(
        char_degrees(&s4).unwrap().degrees,
        BTreeMap::from([(1, 2), (2, 1), (3, 2)])
    );
    let a5 = permutation_group(5, &[vec![1, 2, 0, 3, 4], vec![1, 2, 3, 4, 0]], DEFAULT_BOUND).unwrap();
    check_group(&a5);
    assert_eq!(
        char_degrees(&a5).unwrap().degrees,
        BTreeMap::from([(1, 1), (3, 2), (4, 1), (5, 1)])
    );
    let d8 = permutation_group(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]], DEFAULT_BOUND).unwrap();
    check_group(&d8);
    assert_eq!(char_degrees(&d8).unwrap().degrees, BTreeMap::from([(1, 4), (2, 1)]));
    let c6 = permutation_group(6, &[vec![1, 2, 3, 4, 5, 0]], DEFAULT_BOUND).unwrap();
    check_group(&c6);
    assert_eq!(char_degrees(&c6).unwrap().degrees, BTreeMap::from([(1, 6)]));
    let trivial = permutation_group(3, &[vec![0, 1, 2]], DEFAULT_BOUND).unwrap();
    assert_eq!(trivial.order(), 1);
    assert_eq!(char_degrees(&trivial).unwrap().degrees, BTreeMap::from([(1, 1)]));
}

#[test]
fn matrix_groups_by_brute_force() {
    for (family, n, q) in [
        (SylowFamily::SL, 3, 3),
        (SylowFamily::SL, 3, 4),
        (SylowFamily::Sp4, 4, 3),
        (SylowFamily::SU3, 3, 3),
        (SylowFamily::SU4, 4, 2),
    ] {
        let g = build_sylow_lie(family, n, q, DEFAULT_BOUND).unwrap();
        check_group(&g);
    }
}

#[test]
fn lemma33_group_q3_and_q5() {
    for q in [3u64, 5] {
        let y = build_lemma33_group(q, DEFAULT_BOUND).unwrap();
        let r = char_degrees(&y).unwrap();
        let q3 = q.pow(3);
        assert_eq!(y.order() as u64, q.pow(5));
        assert_eq!(r.degrees, BTreeMap::from([(1, q3), (q, q3 - q)]));
        assert_eq!(r.class_count, 2 * q3 - q);
        assert_eq!(r.derived_order, q * q);
        assert_eq!(r.linear_count, q3);
    }
    let y = build_lemma33_group(3, DEFAULT_BOUND).unwrap();
    check_group(&y);
}

#[test]
fn recursion_matches_engine_for_small_sylows() {
    for (p, n_max) in [(2usize, 10usize), (3, 9), (5, 10)] {
        for n in 2..=n_max {
            let gens = sylow_generators_sym(n, p, 1 << 16).unwrap();
            let g = permutation_group(n, &gens, 1 << 16).unwrap();
            let r = char_degrees(&g).unwrap();
            let rec = sylow_degrees_sym(n as u64, p as u32).unwrap();
            let engine: BTreeMap<u32, u128> = r
                .degrees
                .iter()
                .map(|(&d, &m)| (emverify_core::arith::nu(d, p as u64), m as u128))
                .collect();
            assert_eq!(engine, rec.counts, "n={n} p={p}");
        }
    }
}

#[test]
fn alternating_sylow_two_subgroups() {
    // V4, D8 and the order-64 Sylow of A8
    let mut seen = Vec::new();
    for n in [4usize, 6, 8] {
        let gens = sylow_generators_sym(n, 2, 1 << 16).unwrap();
        let g = permutation_group(n, &gens, 1 << 16).unwrap();
        let h = even_part(&g, 1 << 16).unwrap();
        assert_eq!(h.order() * 2, g.order());
        let r = char_degrees(&h).unwrap();
        assert!(r.invariants_hold());
        seen.push((n, h.is_abelian()));
    }
    assert_eq!(seen, vec![(4, true), (6, false), (8, false)]);
}

#[test]
fn sylow_models_realise_m() {
    let cases = [
        (SylowFamily::SL, 3, 2, Family::A, 2),
        (SylowFamily::SL, 3, 4, Family::A, 2),
        (SylowFamily::SL, 3, 9, Family::A, 2),
        (SylowFamily::Sp4, 4, 4, Family::C, 2),
        (SylowFamily::Sp4, 4, 5, Family::C, 2),
        (SylowFamily::SU3, 3, 4, Family::TwoA, 2),
        (SylowFamily::SU4, 4, 3, Family::TwoA, 3),
    ];
    for (model, n, q, family, rank) in cases {
        let g = build_sylow_lie(model, n, q, DEFAULT_BOUND).unwrap();
        let r = char_degrees(&g).unwrap();
        let spec = GroupSpec::with_q(family, rank, q).unwrap();
        let p = spec.p;
        assert_eq!(r.min_positive_exponent(p), Some(m_of(&spec).unwrap().value), "{model} {q}");
    }
}
