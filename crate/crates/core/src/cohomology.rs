//! Integral cohomology of the orbifold read off the determinant table:
//! group ranks, p-local smooth vertices, the cup-product form when a
//! smooth vertex exists and `H³ = 0`, and the self-cup on a triangle.

use serde::{Deserialize, Serialize};

use crate::arith::{det_table, p_valuation, torsion_order, DeterminantTable};
use crate::charpair::{relabel, CharacteristicPair, Mode};
use crate::error::{Error, Result};

/// `H⁰ ≅ H⁴ ≅ Z`, `H¹ = 0`, `H² ≅ Z^betti2`, `H³ ≅ Z/torsion_order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohomologyProfile {
    pub betti2: usize,
    pub torsion_order: i64,
}

pub fn cohomology_profile(pair: &CharacteristicPair) -> Result<CohomologyProfile> {
    pair.ensure(Mode::Strict)?;
    let table = det_table(pair)?;
    Ok(CohomologyProfile {
        betti2: pair.rank(),
        torsion_order: torsion_order(&table)?,
    })
}

/// Vertices `v_i` with `ν_p(d_{i-1,i}) = ν_p(g)`, sorted, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSet {
    pub prime: i64,
    pub indices: Vec<usize>,
}

/// Table-level form of [`p_local_smooth_vertices`]; `g` must be the table's
/// torsion order and every adjacent entry nonzero.
pub fn smooth_vertices_in(table: &DeterminantTable, g: i64, p: i64) -> Result<Vec<usize>> {
    let target = p_valuation(g, p)?;
    let mut out = Vec::new();
    for i in 1..=table.m() {
        if p_valuation(table.at_vertex(i), p)? == target {
            out.push(i);
        }
    }
    Ok(out)
}

pub fn p_local_smooth_vertices(pair: &CharacteristicPair, p: i64) -> Result<VertexSet> {
    pair.ensure(Mode::Strict)?;
    let table = det_table(pair)?;
    let g = torsion_order(&table)?;
    let indices = smooth_vertices_in(&table, g, p)?;
    if indices.is_empty() {
        return Err(Error::Internal(format!(
            "no {p}-local smooth vertex in {pair}"
        )));
    }
    Ok(VertexSet { prime: p, indices })
}

/// Picks the vertex to move into position `v_m`: `v_m` itself when it
/// qualifies, otherwise the smallest qualifying index.
pub(crate) fn preferred_vertex(m: usize, candidates: &[usize]) -> Option<usize> {
    if candidates.contains(&m) {
        Some(m)
    } else {
        candidates.iter().copied().min()
    }
}

/// Rotates the labels so that old vertex `v_k` becomes `v_m`.
pub fn move_vertex_last(pair: &CharacteristicPair, vertex: usize) -> CharacteristicPair {
    relabel(pair, (vertex % pair.len()) as i64, false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnavailableReason {
    TorsionPresent,
    NoSmoothVertex,
}

/// Cup products `u_i ∪ u_j = entries[i][j] · v` on `H²` in the cellular basis
/// attached to `smooth_vertex` (old labeling), after that vertex has been
/// rotated into position `v_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CupForm {
    pub n: usize,
    pub entries: Vec<Vec<i64>>,
    pub smooth_vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CupFormOutcome {
    Available(CupForm),
    Unavailable(UnavailableReason),
}

impl CupFormOutcome {
    pub fn available(self) -> Option<CupForm> {
        match self {
            CupFormOutcome::Available(f) => Some(f),
            CupFormOutcome::Unavailable(_) => None,
        }
    }
}

/// Cup form in the basis attached to the given smooth vertex (`|d_{k-1,k}| = 1`).
pub fn cup_form_at_vertex(pair: &CharacteristicPair, vertex: usize) -> Result<CupForm> {
    let m = pair.len();
    let n = pair.rank();
    let moved = move_vertex_last(pair, vertex);
    let t = det_table(&moved)?;
    if t.at_vertex(m).abs() != 1 {
        return Err(Error::Internal(format!("vertex {vertex} is not smooth")));
    }
    let mut entries = vec![vec![0i64; n]; n];
    for i in 1..=n {
        for j in i..=n {
            let value = t
                .get(i, m)
                .checked_mul(t.get(j, m - 1))
                .and_then(i64::checked_neg)
                .ok_or(Error::Overflow("cup product"))?;
            entries[i - 1][j - 1] = value;
            entries[j - 1][i - 1] = value;
        }
    }
    Ok(CupForm {
        n,
        entries,
        smooth_vertex: vertex,
    })
}

pub fn cup_form(pair: &CharacteristicPair) -> Result<CupFormOutcome> {
    pair.ensure(Mode::Strict)?;
    let table = det_table(pair)?;
    if torsion_order(&table)? != 1 {
        return Ok(CupFormOutcome::Unavailable(UnavailableReason::TorsionPresent));
    }
    let smooth: Vec<usize> = (1..=pair.len())
        .filter(|&i| table.at_vertex(i).abs() == 1)
        .collect();
    match preferred_vertex(pair.len(), &smooth) {
        Some(k) => Ok(CupFormOutcome::Available(cup_form_at_vertex(pair, k)?)),
        None => Ok(CupFormOutcome::Unavailable(UnavailableReason::NoSmoothVertex)),
    }
}

/// `u ∪ u = −(d_12·d_23·d_13 / g²) v` for a triangle.
pub fn triangle_self_cup(pair: &CharacteristicPair) -> Result<i64> {
    if pair.len() != 3 {
        return Err(Error::NotATriangle(pair.len()));
    }
    pair.ensure(Mode::Strict)?;
    let t = det_table(pair)?;
    let g = i128::from(torsion_order(&t)?);
    let product = i128::from(t.get(1, 2)) * i128::from(t.get(2, 3)) * i128::from(t.get(1, 3));
    let g2 = g * g;
    if product % g2 != 0 {
        return Err(Error::Internal(format!(
            "g² = {g2} does not divide {product}"
        )));
    }
    i64::try_from(-(product / g2)).map_err(|_| Error::Overflow("triangle self-cup"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(v: &[(i64, i64)]) -> CharacteristicPair {
        CharacteristicPair::from_tuples(v)
    }

    fn cp2() -> CharacteristicPair {
        pair(&[(1, 0), (0, 1), (-1, -1)])
    }

    fn torsion_triangle() -> CharacteristicPair {
        pair(&[(1, 2), (1, 0), (1, -2)])
    }

    fn hirzebruch(k: i64) -> CharacteristicPair {
        pair(&[(1, 0), (0, 1), (-1, k), (0, -1)])
    }

    #[test]
    fn profiles() {
        assert_eq!(
            cohomology_profile(&cp2()).unwrap(),
            CohomologyProfile { betti2: 1, torsion_order: 1 }
        );
        assert_eq!(
            cohomology_profile(&torsion_triangle()).unwrap(),
            CohomologyProfile { betti2: 1, torsion_order: 2 }
        );
        assert_eq!(
            cohomology_profile(&pair(&[(1, 0), (0, 1), (-1, 1), (0, -1)])).unwrap(),
            CohomologyProfile { betti2: 2, torsion_order: 1 }
        );
        assert!(matches!(
            cohomology_profile(&pair(&[(1, 0), (1, 0), (0, 1)])),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn smooth_vertices() {
        assert_eq!(p_local_smooth_vertices(&torsion_triangle(), 2).unwrap().indices, vec![2, 3]);
        assert_eq!(p_local_smooth_vertices(&cp2(), 2).unwrap().indices, vec![1, 2, 3]);
        assert_eq!(p_local_smooth_vertices(&torsion_triangle(), 3).unwrap().indices, vec![1, 2, 3]);
        assert!(p_local_smooth_vertices(&cp2(), 6).is_err());
    }

    #[test]
    fn cup_forms() {
        let f1 = cup_form(&hirzebruch(1)).unwrap().available().unwrap();
        assert_eq!(f1.entries, vec![vec![1, 1], vec![1, 0]]);
        assert_eq!(f1.smooth_vertex, 4);
        assert_eq!(
            cup_form(&torsion_triangle()).unwrap(),
            CupFormOutcome::Unavailable(UnavailableReason::TorsionPresent)
        );
        assert_eq!(cup_form(&cp2()).unwrap().available().unwrap().entries, vec![vec![1]]);
    }

    #[test]
    fn cup_form_needs_a_smooth_vertex() {
        // g = 1 but every vertex determinant is ±2 or ±3
        let p = pair(&[(1, 0), (1, 2), (-1, 1), (-1, -2)]);
        let t = det_table(&p).unwrap();
        assert_eq!(torsion_order(&t).unwrap(), 1);
        assert!((1..=4).all(|i| t.at_vertex(i).abs() > 1));
        assert_eq!(
            cup_form(&p).unwrap(),
            CupFormOutcome::Unavailable(UnavailableReason::NoSmoothVertex)
        );
    }

    #[test]
    fn self_cups() {
        assert_eq!(triangle_self_cup(&cp2()).unwrap(), 1);
        assert_eq!(triangle_self_cup(&pair(&[(1, 0), (0, 1), (-2, -3)])).unwrap(), 6);
        assert_eq!(triangle_self_cup(&torsion_triangle()).unwrap(), 4);
        assert_eq!(triangle_self_cup(&hirzebruch(1)), Err(Error::NotATriangle(4)));
    }

    #[test]
    fn self_cup_agrees_with_cup_form_on_smooth_triangles() {
        let t = pair(&[(1, 0), (0, 1), (-2, -3)]);
        let f = cup_form(&t).unwrap().available().unwrap();
        assert_eq!(f.entries[0][0], triangle_self_cup(&t).unwrap());

        // the two formulas fix the generator of H⁴ independently, so they
        // agree only up to sign in general
        let t = pair(&[(1, 0), (0, 1), (1, -1)]);
        let f = cup_form(&t).unwrap().available().unwrap();
        assert_eq!(f.entries[0][0], 1);
        assert_eq!(triangle_self_cup(&t).unwrap(), -1);
    }
}
