//! Characteristic pairs: a polygon's cyclically ordered edge vectors.
//!
//! Edge `E_i` carries `vectors[i - 1]`, and vertex `v_i` is the corner
//! `E_{i-1} ∩ E_i` (so `v_1 = E_m ∩ E_1`). Every index that leaves this
//! crate is 1-based.
//!
//! Three symmetry actions leave all computed invariants unchanged:
//! dihedral relabeling of the edges, a unimodular change of basis of `Z²`,
//! and flipping the sign of individual edge vectors.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One characteristic vector `(a, b)`, serialized as `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct CharVector {
    pub a: i64,
    pub b: i64,
}

impl CharVector {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// `gcd(|a|, |b|) == 1`. The zero vector is never primitive.
    pub fn is_primitive(&self) -> bool {
        // u64 so that i64::MIN does not overflow on abs
        self.a.unsigned_abs().gcd(&self.b.unsigned_abs()) == 1
    }

    pub fn neg(&self) -> Result<Self> {
        Ok(Self {
            a: self.a.checked_neg().ok_or(Error::Overflow("vector negation"))?,
            b: self.b.checked_neg().ok_or(Error::Overflow("vector negation"))?,
        })
    }
}

impl From<(i64, i64)> for CharVector {
    fn from((a, b): (i64, i64)) -> Self {
        Self { a, b }
    }
}

impl From<[i64; 2]> for CharVector {
    fn from([a, b]: [i64; 2]) -> Self {
        Self { a, b }
    }
}

impl From<CharVector> for [i64; 2] {
    fn from(v: CharVector) -> Self {
        [v.a, v.b]
    }
}

impl fmt::Display for CharVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// The input datum: the cyclically ordered edge vectors of an `m`-gon.
///
/// Construction does not validate; call [`validate`] (or
/// [`CharacteristicPair::strict`]) before handing a pair to the analyses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CharacteristicPair {
    vectors: Vec<CharVector>,
}

impl CharacteristicPair {
    pub fn new(vectors: Vec<CharVector>) -> Self {
        Self { vectors }
    }

    pub fn from_tuples(vectors: &[(i64, i64)]) -> Self {
        Self::new(vectors.iter().copied().map(CharVector::from).collect())
    }

    /// Builds a pair and rejects it unless it passes [`Mode::Strict`].
    pub fn strict(vectors: Vec<CharVector>) -> Result<Self> {
        let pair = Self::new(vectors);
        pair.ensure(Mode::Strict)?;
        Ok(pair)
    }

    pub fn ensure(&self, mode: Mode) -> Result<()> {
        let report = validate(self, mode);
        if report.is_admissible() {
            Ok(())
        } else {
            Err(Error::Invalid(report))
        }
    }

    /// Number of edges `m`.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// `n = m - 2`, the rank of `H²`.
    pub fn rank(&self) -> usize {
        self.vectors.len().saturating_sub(2)
    }

    pub fn vectors(&self) -> &[CharVector] {
        &self.vectors
    }

    /// The vector on edge `E_i`, 1-based, indices taken cyclically.
    pub fn edge(&self, i: usize) -> CharVector {
        let m = self.vectors.len();
        self.vectors[(i + m - 1) % m]
    }
}

impl fmt::Display for CharacteristicPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.vectors.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Primitive vectors, and the two vectors at every vertex independent.
    Strict,
    /// Primitivity only (degenerate characteristic functions).
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ViolationKind {
    /// `index` is the offending edge.
    NonPrimitive,
    /// `index` is the vertex `v_i` whose edges `E_{i-1}`, `E_i` are dependent.
    AdjacentDependent,
    /// `index` is the number of edges found.
    TooFewEdges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub mode: Mode,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_admissible(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "admissible ({:?})", self.mode);
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            match v.kind {
                ViolationKind::NonPrimitive => write!(f, "edge {} is not primitive", v.index)?,
                ViolationKind::AdjacentDependent => {
                    write!(f, "edges meeting at vertex {} are dependent", v.index)?
                }
                ViolationKind::TooFewEdges => write!(f, "only {} edges (need 3)", v.index)?,
            }
        }
        Ok(())
    }
}

pub fn validate(pair: &CharacteristicPair, mode: Mode) -> ValidationReport {
    let m = pair.len();
    let mut violations = Vec::new();
    if m < 3 {
        violations.push(Violation {
            kind: ViolationKind::TooFewEdges,
            index: m,
        });
    }
    for (k, v) in pair.vectors().iter().enumerate() {
        if !v.is_primitive() {
            violations.push(Violation {
                kind: ViolationKind::NonPrimitive,
                index: k + 1,
            });
        }
    }
    if mode == Mode::Strict && m >= 2 {
        for i in 1..=m {
            let u = pair.edge(i + m - 1);
            let v = pair.edge(i);
            // i128 cannot overflow for i64 inputs
            let det = i128::from(u.a) * i128::from(v.b) - i128::from(u.b) * i128::from(v.a);
            if det == 0 {
                violations.push(Violation {
                    kind: ViolationKind::AdjacentDependent,
                    index: i,
                });
            }
        }
    }
    ValidationReport { mode, violations }
}

/// Dihedral relabeling. Reflection reverses the cyclic order first; then
/// rotation `r` moves old edge `E_{i+r}` to new edge `E_i`.
pub fn relabel(pair: &CharacteristicPair, rotation: i64, reflect: bool) -> CharacteristicPair {
    let m = pair.len();
    if m == 0 {
        return pair.clone();
    }
    let mut base: Vec<CharVector> = pair.vectors().to_vec();
    if reflect {
        base.reverse();
    }
    let r = rotation.rem_euclid(m as i64) as usize;
    base.rotate_left(r);
    CharacteristicPair::new(base)
}

/// Where old vertex `v_old` lands after [`relabel`] with the same arguments.
pub fn relabel_vertex(m: usize, old: usize, rotation: i64, reflect: bool) -> usize {
    let m_i = m as i64;
    // position of the vertex after the optional reversal (1-based)
    let after_reflect = if reflect {
        (m_i + 2 - old as i64).rem_euclid(m_i)
    } else {
        old as i64
    };
    let new = (after_reflect - rotation).rem_euclid(m_i);
    if new == 0 {
        m
    } else {
        new as usize
    }
}

/// Where old edge `E_old` lands after [`relabel`].
pub fn relabel_edge(m: usize, old: usize, rotation: i64, reflect: bool) -> usize {
    let m_i = m as i64;
    let after_reflect = if reflect {
        (m_i + 1 - old as i64).rem_euclid(m_i)
    } else {
        old as i64
    };
    let new = (after_reflect - rotation).rem_euclid(m_i);
    if new == 0 {
        m
    } else {
        new as usize
    }
}

/// A 2×2 integer matrix with determinant ±1, acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Unimodular2 {
    entries: [[i64; 2]; 2],
}

impl Unimodular2 {
    pub const IDENTITY: Self = Self {
        entries: [[1, 0], [0, 1]],
    };

    pub fn new(entries: [[i64; 2]; 2]) -> Result<Self> {
        let [[p, q], [r, s]] = entries;
        let det = i128::from(p) * i128::from(s) - i128::from(q) * i128::from(r);
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(entries));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        self.entries
    }

    pub fn det(&self) -> i64 {
        let [[p, q], [r, s]] = self.entries;
        (i128::from(p) * i128::from(s) - i128::from(q) * i128::from(r)) as i64
    }

    pub fn apply(&self, v: CharVector) -> Result<CharVector> {
        let [[p, q], [r, s]] = self.entries;
        let ovf = || Error::Overflow("unimodular action");
        let a = p
            .checked_mul(v.a)
            .and_then(|x| q.checked_mul(v.b).and_then(|y| x.checked_add(y)))
            .ok_or_else(ovf)?;
        let b = r
            .checked_mul(v.a)
            .and_then(|x| s.checked_mul(v.b).and_then(|y| x.checked_add(y)))
            .ok_or_else(ovf)?;
        Ok(CharVector { a, b })
    }

    /// `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let x = self.entries;
        let y = other.entries;
        let mut out = [[0i64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = x[i][0]
                    .checked_mul(y[0][j])
                    .and_then(|s| x[i][1].checked_mul(y[1][j]).and_then(|t| s.checked_add(t)))
                    .ok_or(Error::Overflow("matrix product"))?;
            }
        }
        Self::new(out)
    }
}

/// `vectors[i] ↦ signs[i] · (M · vectors[i])`.
pub fn transform(
    pair: &CharacteristicPair,
    basis: &Unimodular2,
    signs: &[i64],
) -> Result<CharacteristicPair> {
    if signs.len() != pair.len() {
        return Err(Error::SignLength {
            expected: pair.len(),
            got: signs.len(),
        });
    }
    let vectors = pair
        .vectors()
        .iter()
        .zip(signs)
        .map(|(v, &s)| {
            let w = basis.apply(*v)?;
            match s {
                1 => Ok(w),
                -1 => w.neg(),
                other => Err(Error::BadSign(other)),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacteristicPair::new(vectors))
}
