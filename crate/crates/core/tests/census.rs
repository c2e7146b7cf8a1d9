mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{pair, signs, strict_pair, unimodular};
use proptest::prelude::*;
use toricsq::applications::forms::determinant;
use toricsq::census::{primitive_vectors, representatives};
use toricsq::{
    canonical_key, cup_form, det_table, enumerate, relabel, selfcheck, transform, validate,
    CanonicalKey, CensusFilter, CharacteristicPair, Mode, Unimodular2,
};

/// Minimum over the whole orbit, generated by acting on vectors and
/// recomputing the table: every relabeling, every sign vector, and a
/// reflection matrix for the global sign.
fn brute_force_key(p: &CharacteristicPair) -> Vec<i64> {
    let m = p.len();
    let flip = Unimodular2::new([[0, 1], [1, 0]]).unwrap();
    let mut best: Option<Vec<i64>> = None;
    for refl in [false, true] {
        for r in 0..m as i64 {
            let q = relabel(p, r, refl);
            for mask in 0..(1u32 << m) {
                let s: Vec<i64> = (0..m).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                for basis in [Unimodular2::IDENTITY, flip] {
                    let t = det_table(&transform(&q, &basis, &s).unwrap()).unwrap();
                    let seq = t.upper().to_vec();
                    if best.as_ref().is_none_or(|b| seq < *b) {
                        best = Some(seq);
                    }
                }
            }
        }
    }
    best.unwrap()
}

/// Every Strict pair in range, without normalizing the first vector.
fn all_pairs(m: usize, bound: i64) -> Vec<CharacteristicPair> {
    let pool = primitive_vectors(bound);
    let mut out = Vec::new();
    let mut idx = vec![0usize; m];
    loop {
        let p = CharacteristicPair::new(idx.iter().map(|&i| pool[i]).collect());
        if validate(&p, Mode::Strict).is_admissible() {
            out.push(p);
        }
        let mut k = m;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < pool.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn key_matches_brute_force(p in strict_pair(6, 3)) {
        prop_assert_eq!(canonical_key(&p).unwrap().table, brute_force_key(&p));
    }

    #[test]
    fn key_is_invariant(
        (p, s) in strict_pair(6, 4).prop_flat_map(|p| { let m = p.len(); (Just(p), signs(m)) }),
        basis in unimodular(3),
        r in 0i64..6,
        refl in any::<bool>(),
    ) {
        let q = transform(&relabel(&p, r, refl), &basis, &s).unwrap();
        prop_assert_eq!(canonical_key(&p).unwrap(), canonical_key(&q).unwrap());
    }
}

#[test]
fn census_keys_match_naive_dedup() {
    for (m, bound) in [(3, 1), (3, 2), (4, 1), (5, 1)] {
        let mut naive: BTreeMap<CanonicalKey, CharacteristicPair> = BTreeMap::new();
        for p in all_pairs(m, bound) {
            let key = canonical_key(&p).unwrap();
            naive.entry(key).or_insert(p);
        }
        let census = representatives(m, bound).unwrap();
        let a: BTreeSet<_> = naive.keys().collect();
        let b: BTreeSet<_> = census.keys().collect();
        assert_eq!(a, b, "m = {m}, bound = {bound}");
        // census representatives are the least pair with a normalized first vector
        for (key, rep) in &census {
            let first = rep.vectors()[0];
            assert!(first.a < 0 || (first.a == 0 && first.b < 0));
            assert_eq!(canonical_key(rep).unwrap(), *key);
        }
    }
}

#[test]
fn records_are_sorted_and_unique() {
    let records = enumerate(4, 2, None).unwrap();
    assert!(records.windows(2).all(|w| w[0].key < w[1].key));
    assert!(records.iter().any(|r| r.profile.torsion_order > 1));
}

#[test]
fn triangle_census_includes_cp2() {
    let key = canonical_key(&pair(&[(1, 0), (0, 1), (-1, -1)])).unwrap();
    assert!(enumerate(3, 1, None).unwrap().iter().any(|r| r.key == key));
}

#[test]
fn filter_contracts() {
    for r in enumerate(3, 2, Some(CensusFilter::GEven)).unwrap() {
        assert_eq!(r.profile.torsion_order % 2, 0);
    }
    let quasi = enumerate(4, 1, Some(CensusFilter::QuasiToric)).unwrap();
    assert!(!quasi.is_empty());
    for r in quasi {
        let f = cup_form(&r.representative).unwrap().available().unwrap();
        assert_eq!(determinant(&f.entries).abs(), 1);
    }
    let all = enumerate(4, 2, None).unwrap().len();
    let sq2 = enumerate(4, 2, Some(CensusFilter::Sq2)).unwrap().len();
    let no_sq2 = enumerate(4, 2, Some(CensusFilter::NoSq2)).unwrap().len();
    assert_eq!(sq2 + no_sq2, all);
}

#[test]
fn selfcheck_passes_on_small_censuses() {
    for (m, bound) in [(3, 2), (4, 1), (5, 1)] {
        let s = selfcheck(m, bound).unwrap();
        assert!(s.passed(), "m = {m}, bound = {bound}: {:?}", s.violations);
        assert_eq!(s.pairs, all_pairs(m, bound).len() / 2);
    }
}
