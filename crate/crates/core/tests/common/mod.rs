#![allow(dead_code)]

use proptest::prelude::*;
use toricsq::{CharVector, CharacteristicPair, Unimodular2};

pub fn pair(v: &[(i64, i64)]) -> CharacteristicPair {
    CharacteristicPair::from_tuples(v)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn primitive(bound: i64) -> impl Strategy<Value = CharVector> {
    (-bound..=bound, -bound..=bound)
        .prop_filter("primitive", |&(a, b)| gcd(a, b) == 1)
        .prop_map(CharVector::from)
}

/// Strict pairs with 3..=max_m edges and entries in `[-bound, bound]`.
pub fn strict_pair(max_m: usize, bound: i64) -> impl Strategy<Value = CharacteristicPair> {
    (3..=max_m)
        .prop_flat_map(move |m| prop::collection::vec(primitive(bound), m))
        .prop_filter("adjacent vectors independent", |v| {
            let m = v.len();
            (0..m).all(|i| {
                let (u, w) = (v[i], v[(i + 1) % m]);
                u.a * w.b != u.b * w.a
            })
        })
        .prop_map(CharacteristicPair::new)
}

pub fn unimodular(bound: i64) -> impl Strategy<Value = Unimodular2> {
    [(-bound..=bound), (-bound..=bound), (-bound..=bound), (-bound..=bound)]
        .prop_filter_map("unimodular", |[p, q, r, s]| {
            Unimodular2::new([[p, q], [r, s]]).ok()
        })
}

pub fn signs(m: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop::bool::ANY.prop_map(|b| if b { 1 } else { -1 }), m)
}

/// Index of the sublattice spanned by the vectors, by Hermite reduction.
pub fn lattice_index(pair: &CharacteristicPair) -> i64 {
    let mut rows: Vec<[i64; 2]> = pair.vectors().iter().map(|v| [v.a, v.b]).collect();
    // Euclid on the first column
    loop {
        rows.retain(|r| r != &[0, 0]);
        let nonzero: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][0] != 0).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let pivot = *nonzero.iter().min_by_key(|&&i| rows[i][0].abs()).unwrap();
        for &i in &nonzero {
            if i != pivot {
                let q = rows[i][0] / rows[pivot][0];
                rows[i][0] -= q * rows[pivot][0];
                rows[i][1] -= q * rows[pivot][1];
            }
        }
    }
    let lead = rows.iter().find(|r| r[0] != 0).map_or(0, |r| r[0].abs());
    let rest = rows
        .iter()
        .filter(|r| r[0] == 0)
        .fold(0, |acc, r| gcd(acc, r[1]));
    lead * rest
}
