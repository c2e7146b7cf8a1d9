//! Small symmetric integer matrices: determinants, signatures, and a
//! bounded search for congruences `Sᵀ·A·S = ε·B` with `S ∈ GL(n, Z)`.

// Index loops read more clearly than iterator chains for matrix algebra.
#![allow(clippy::needless_range_loop)]

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::cohomology::CupForm;
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<i64>>;

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// `(positive, negative, zero)` eigenvalue counts of a symmetric matrix,
/// by exact symmetric Gaussian elimination over the rationals.
pub fn inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i128>>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Ratio::from_integer(i128::from(x))).collect())
        .collect();
    let zero = Ratio::from_integer(0);
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| a[i][i] != zero);
        let p = match pivot {
            Some(p) => p,
            None => {
                // zero diagonal: replace e_i by e_i + e_j for some a_ij ≠ 0
                let hit = active.iter().copied().find_map(|i| {
                    active
                        .iter()
                        .copied()
                        .find(|&j| j != i && a[i][j] != zero)
                        .map(|j| (i, j))
                });
                let Some((i, j)) = hit else { break };
                for k in 0..n {
                    let v = a[j][k];
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j];
                    a[k][i] += v;
                }
                i
            }
        };
        let d = a[p][p];
        if d > zero {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            let f = a[i][p] / d;
            for &j in &active {
                let v = f * a[p][j];
                a[i][j] -= v;
            }
        }
    }
    (pos, neg, n - pos - neg)
}

pub fn signature(m: &[Vec<i64>]) -> i64 {
    let (p, q, _) = inertia(m);
    p as i64 - q as i64
}

/// Even type: every diagonal entry even.
pub fn is_even(m: &[Vec<i64>]) -> bool {
    m.iter().enumerate().all(|(i, row)| row[i] % 2 == 0)
}

/// `Sᵀ·A·S`, computed in i128.
pub fn congruent(s: &[Vec<i64>], a: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = a.len();
    let mut out = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0i128;
            for k in 0..n {
                for l in 0..n {
                    acc += i128::from(s[k][i]) * i128::from(a[k][l]) * i128::from(s[l][j]);
                }
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Inverse of a matrix with determinant ±1, via the adjugate.
pub fn unimodular_inverse(s: &[Vec<i64>]) -> Option<Matrix> {
    let n = s.len();
    let det = determinant(s);
    if det.abs() != 1 {
        return None;
    }
    if n == 1 {
        return Some(vec![vec![s[0][0]]]);
    }
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Matrix = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| s[r][c]).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[i][j] = i64::try_from(sign * determinant(&minor) * det).ok()?;
        }
    }
    Some(inv)
}

/// A congruence `Sᵀ·A·S = sign·B` with `|det S| = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IsoWitness {
    pub matrix: Matrix,
    pub sign: i64,
}

impl IsoWitness {
    pub fn verifies(&self, a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
        if determinant(&self.matrix).abs() != 1 {
            return false;
        }
        let c = congruent(&self.matrix, a);
        c.iter().zip(b).all(|(cr, br)| {
            cr.iter()
                .zip(br)
                .all(|(&x, &y)| x == i128::from(self.sign) * i128::from(y))
        })
    }

    /// The witness for the reversed problem `(B, A)`.
    pub fn inverse(&self) -> Option<Self> {
        Some(Self {
            matrix: unimodular_inverse(&self.matrix)?,
            sign: self.sign,
        })
    }
}

/// A congruence invariant that separates the two forms, if any.
///
/// Checked: rank, `|det|`, even/odd type, and `|signature|`. In rank 1 the
/// only unimodular `S` is `±1`, so `A ≠ ±B` is also decisive.
pub fn congruence_obstruction(a: &[Vec<i64>], b: &[Vec<i64>]) -> Option<&'static str> {
    if a.len() != b.len() {
        return Some("rank");
    }
    if determinant(a).abs() != determinant(b).abs() {
        return Some("|det|");
    }
    if is_even(a) != is_even(b) {
        return Some("parity");
    }
    if signature(a).abs() != signature(b).abs() {
        return Some("|signature|");
    }
    if a.len() == 1 && a[0][0] != b[0][0] && a[0][0] != -b[0][0] {
        return Some("rank-1 value");
    }
    None
}

/// Entry values in search order: `0, 1, −1, 2, −2, …`.
fn entry_order(bound: i64) -> Vec<i64> {
    std::iter::once(0)
        .chain((1..=bound).flat_map(|x| [x, -x]))
        .collect()
}

/// Lexicographically first witness with entries in `[-bound, bound]`:
/// sign `+1` before `−1`, then `S` compared column by column with entries
/// ordered `0, 1, −1, 2, −2, …`.
pub fn congruence_search(a: &[Vec<i64>], b: &[Vec<i64>], bound: u32) -> Option<IsoWitness> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    if n == 0 {
        return Some(IsoWitness {
            matrix: Vec::new(),
            sign: 1,
        });
    }
    let values = entry_order(i64::from(bound));
    let side = values.len();
    let total = side.checked_pow(n as u32)?;
    let mut vectors: Vec<Vec<i64>> = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut v = vec![0i64; n];
        for slot in v.iter_mut().rev() {
            *slot = values[code % side];
            code /= side;
        }
        vectors.push(v);
    }
    let bilinear = |u: &[i64], v: &[i64]| -> i128 {
        let mut acc = 0i128;
        for k in 0..n {
            if u[k] == 0 {
                continue;
            }
            for l in 0..n {
                acc += i128::from(u[k]) * i128::from(a[k][l]) * i128::from(v[l]);
            }
        }
        acc
    };
    let norms: Vec<i128> = vectors.iter().map(|v| bilinear(v, v)).collect();

    for sign in [1i64, -1] {
        let target = |j: usize, k: usize| i128::from(sign) * i128::from(b[j][k]);
        let candidates: Vec<Vec<usize>> = (0..n)
            .map(|k| (0..total).filter(|&idx| norms[idx] == target(k, k)).collect())
            .collect();
        let mut chosen: Vec<usize> = Vec::with_capacity(n);
        let mut cursor = vec![0usize; n];
        loop {
            let k = chosen.len();
            if k == n {
                let s: Matrix = (0..n)
                    .map(|r| (0..n).map(|c| vectors[chosen[c]][r]).collect())
                    .collect();
                if determinant(&s).abs() == 1 {
                    return Some(IsoWitness { matrix: s, sign });
                }
                chosen.pop();
                continue;
            }
            let mut advanced = false;
            while cursor[k] < candidates[k].len() {
                let idx = candidates[k][cursor[k]];
                cursor[k] += 1;
                let ok = chosen
                    .iter()
                    .enumerate()
                    .all(|(j, &prev)| bilinear(&vectors[prev], &vectors[idx]) == target(j, k));
                if ok {
                    chosen.push(idx);
                    if k + 1 < n {
                        cursor[k + 1] = 0;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                if chosen.is_empty() {
                    break;
                }
                chosen.pop();
            }
        }
    }
    None
}

/// Bounded search for a ring isomorphism between two cup forms.
pub fn ring_iso_search(a: &CupForm, b: &CupForm, bound: u32) -> Result<Option<IsoWitness>> {
    if a.n != b.n {
        return Err(Error::RankMismatch(a.n, b.n));
    }
    Ok(congruence_search(&a.entries, &b.entries, bound))
}
