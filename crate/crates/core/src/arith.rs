//! Exact integer kernels: 2×2 determinants, the pairwise determinant
//! table, gcd with zeros, p-adic valuations.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::charpair::{CharVector, CharacteristicPair};
use crate::error::{Error, Result};

/// `det(u, v) = u.a·v.b − u.b·v.a`.
pub fn det2(u: CharVector, v: CharVector) -> Result<i64> {
    let ovf = || Error::Overflow("2x2 determinant");
    let x = u.a.checked_mul(v.b).ok_or_else(ovf)?;
    let y = u.b.checked_mul(v.a).ok_or_else(ovf)?;
    x.checked_sub(y).ok_or_else(ovf)
}

/// All pairwise determinants `d_ij = det(λ_i, λ_j)` for `1 ≤ i < j ≤ m`.
///
/// Stored row-major over the strict upper triangle; [`DeterminantTable::get`]
/// answers any ordered pair using antisymmetry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeterminantTable {
    m: usize,
    entries: Vec<i64>,
}

impl DeterminantTable {
    /// Builds a table from its flattened upper triangle
    /// `(d_12, d_13, …, d_1m, d_23, …, d_{m-1,m})`.
    pub fn from_upper(m: usize, entries: Vec<i64>) -> Self {
        assert_eq!(entries.len(), m * (m.saturating_sub(1)) / 2);
        Self { m, entries }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn upper(&self) -> &[i64] {
        &self.entries
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        // 1-based i < j
        let i0 = i - 1;
        i0 * self.m - i0 * (i0 + 1) / 2 + (j - i - 1)
    }

    /// `d_ij` for 1-based `i`, `j` in `1..=m`; `d_ji = −d_ij`, `d_ii = 0`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        assert!((1..=self.m).contains(&i) && (1..=self.m).contains(&j));
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.entries[self.offset(i, j)],
            std::cmp::Ordering::Equal => 0,
            // wraps only for an entry of i64::MIN; see checked_get
            std::cmp::Ordering::Greater => self.entries[self.offset(j, i)].wrapping_neg(),
        }
    }

    /// Like [`get`](Self::get) but reports the one overflowing negation.
    pub fn checked_get(&self, i: usize, j: usize) -> Result<i64> {
        if i > j {
            self.entries[self.offset(j, i)]
                .checked_neg()
                .ok_or(Error::Overflow("determinant negation"))
        } else {
            Ok(self.get(i, j))
        }
    }

    /// Determinant at vertex `v_i`: `d_{i-1,i}`, with `d_{0,1}` read as `d_{1,m}`.
    pub fn at_vertex(&self, i: usize) -> i64 {
        if i == 1 {
            self.get(1, self.m)
        } else {
            self.get(i - 1, i)
        }
    }

    /// `(i, j, d_ij)` for every `i < j`, in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (1..=self.m)
            .flat_map(move |i| ((i + 1)..=self.m).map(move |j| (i, j)))
            .zip(self.entries.iter())
            .map(|((i, j), &d)| (i, j, d))
    }
}

pub fn det_table(pair: &CharacteristicPair) -> Result<DeterminantTable> {
    let v = pair.vectors();
    let m = v.len();
    let mut entries = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for i in 0..m {
        for j in (i + 1)..m {
            entries.push(det2(v[i], v[j])?);
        }
    }
    Ok(DeterminantTable { m, entries })
}

/// gcd over a sequence with zero as the neutral element.
pub fn gcd_all<I: IntoIterator<Item = i64>>(values: I) -> u64 {
    values
        .into_iter()
        .fold(0u64, |acc, x| acc.gcd(&x.unsigned_abs()))
}

/// `g`, the order of `H³`: the gcd of every table entry (zeros ignored).
pub fn torsion_order(table: &DeterminantTable) -> Result<i64> {
    let g = gcd_all(table.upper().iter().copied());
    if g == 0 {
        return Err(Error::AllDependent);
    }
    i64::try_from(g).map_err(|_| Error::Overflow("torsion order"))
}

fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2i64;
    while d <= p / d {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `ν_p(a)`: the exponent of the largest power of `p` dividing `a`.
pub fn p_valuation(a: i64, p: i64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a == 0 {
        return Err(Error::ZeroValuation);
    }
    let p = p as u64;
    let mut x = a.unsigned_abs();
    let mut r = 0;
    while x.is_multiple_of(p) {
        x /= p;
        r += 1;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: i64, b: i64) -> CharVector {
        CharVector::new(a, b)
    }

    #[test]
    fn det2_examples() {
        assert_eq!(det2(v(1, 0), v(0, 1)).unwrap(), 1);
        assert_eq!(det2(v(1, 2), v(1, 0)).unwrap(), -2);
        assert_eq!(det2(v(3, -7), v(3, -7)).unwrap(), 0);
        assert!(matches!(
            det2(v(i64::MAX, 0), v(0, 2)),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn det_table_examples() {
        let t = det_table(&CharacteristicPair::from_tuples(&[(1, 0), (0, 1), (-1, -1)])).unwrap();
        assert_eq!(t.upper(), &[1, -1, 1]);
        let t = det_table(&CharacteristicPair::from_tuples(&[(1, 2), (1, 0), (1, -2)])).unwrap();
        assert_eq!(t.upper(), &[-2, -4, -2]);
        let sq = CharacteristicPair::from_tuples(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        let t = det_table(&sq).unwrap();
        assert_eq!(t.get(1, 3), 0);
        assert_eq!(t.get(2, 4), 0);
        for i in 1..=4 {
            assert_eq!(t.at_vertex(i).abs(), 1);
        }
        assert_eq!(t.get(3, 1), 0);
        assert_eq!(t.get(2, 1), -t.get(1, 2));
        let listed: Vec<_> = t.iter().map(|(i, j, _)| (i, j)).collect();
        assert_eq!(listed, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn torsion_order_examples() {
        assert_eq!(torsion_order(&DeterminantTable::from_upper(3, vec![1, -1, 1])).unwrap(), 1);
        assert_eq!(torsion_order(&DeterminantTable::from_upper(3, vec![-2, -4, -2])).unwrap(), 2);
        assert_eq!(
            torsion_order(&DeterminantTable::from_upper(4, vec![1, 0, -1, 1, 0, 1])).unwrap(),
            1
        );
        assert_eq!(
            torsion_order(&DeterminantTable::from_upper(3, vec![0, 0, 0])),
            Err(Error::AllDependent)
        );
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(p_valuation(12, 2).unwrap(), 2);
        assert_eq!(p_valuation(-7, 2).unwrap(), 0);
        assert_eq!(p_valuation(54, 3).unwrap(), 3);
        assert_eq!(p_valuation(i64::MIN, 2).unwrap(), 63);
        assert_eq!(p_valuation(0, 2), Err(Error::ZeroValuation));
        assert_eq!(p_valuation(8, 4), Err(Error::NotPrime(4)));
    }
}
