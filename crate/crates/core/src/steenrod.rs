//! Mod-2 Steenrod operations on `H*(X; Z/2)`.
//!
//! `Sq¹: H² → H³` is nontrivial exactly when `g` is even, `Sq¹: H³ → H⁴`
//! always vanishes, and `Sq²: H² → H⁴` is decided by the parity of
//!
//! ```text
//! ∏_{i=1..n} (1 − d_{i,n+1}·d_{i,n+2} / g)
//! ```
//!
//! evaluated in a labeling where `v_{n+2}` is a 2-local smooth vertex. The
//! product is even (some factor is even) iff `Sq²` is nontrivial.

use serde::{Deserialize, Serialize};

use crate::arith::{det_table, torsion_order};
use crate::charpair::{CharacteristicPair, Mode};
use crate::cohomology::{move_vertex_last, preferred_vertex, smooth_vertices_in};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SteenrodProfile {
    pub sq1_h2_nontrivial: bool,
    pub sq1_h3_nontrivial: bool,
    pub sq2_nontrivial: bool,
    /// Vertex (input labeling) moved into position `v_{n+2}`.
    pub witness_vertex: usize,
    /// `t_i = 1 − d_{i,n+1}·d_{i,n+2}/g` in the relabeled table.
    pub criterion_terms: Vec<i64>,
}

pub fn sq1_on_h2(pair: &CharacteristicPair) -> Result<bool> {
    pair.ensure(Mode::Strict)?;
    Ok(torsion_order(&det_table(pair)?)? % 2 == 0)
}

/// Always `false`; validates its input so that every Steenrod query
/// rejects the same pairs.
pub fn sq1_on_h3(pair: &CharacteristicPair) -> Result<bool> {
    pair.ensure(Mode::Strict)?;
    Ok(false)
}

/// The 2-local smooth vertices of a Strict pair, input labeling.
pub fn two_local_smooth_vertices(pair: &CharacteristicPair) -> Result<Vec<usize>> {
    let table = det_table(pair)?;
    let g = torsion_order(&table)?;
    smooth_vertices_in(&table, g, 2)
}

/// Relabels `pair` so that a 2-local smooth vertex sits at `v_{n+2}`.
/// Returns the relabeled pair and the chosen vertex (input labeling).
pub fn normalize_two_local(pair: &CharacteristicPair) -> Result<(CharacteristicPair, usize)> {
    pair.ensure(Mode::Strict)?;
    let candidates = two_local_smooth_vertices(pair)?;
    let witness = preferred_vertex(pair.len(), &candidates)
        .ok_or_else(|| Error::Internal(format!("no 2-local smooth vertex in {pair}")))?;
    Ok((move_vertex_last(pair, witness), witness))
}

/// Criterion terms for a pair whose `v_m` is already 2-local smooth.
pub fn criterion_terms_normalized(pair: &CharacteristicPair) -> Result<Vec<i64>> {
    let m = pair.len();
    let t = det_table(pair)?;
    let g = i128::from(torsion_order(&t)?);
    (1..=pair.rank())
        .map(|i| {
            let prod = i128::from(t.get(i, m - 1)) * i128::from(t.get(i, m));
            if prod % g != 0 {
                return Err(Error::Internal(format!(
                    "g = {g} does not divide d_{{{i},{}}}·d_{{{i},{m}}} = {prod}",
                    m - 1
                )));
            }
            i64::try_from(1 - prod / g).map_err(|_| Error::Overflow("criterion term"))
        })
        .collect()
}

fn verdict(terms: &[i64]) -> bool {
    terms.iter().any(|t| t % 2 == 0)
}

/// `Sq²` verdict and terms computed with `vertex` moved to `v_{n+2}`.
/// Fails unless `vertex` is 2-local smooth.
pub fn sq2_at_vertex(pair: &CharacteristicPair, vertex: usize) -> Result<(bool, Vec<i64>)> {
    pair.ensure(Mode::Strict)?;
    if !two_local_smooth_vertices(pair)?.contains(&vertex) {
        return Err(Error::Internal(format!(
            "vertex {vertex} is not 2-local smooth in {pair}"
        )));
    }
    let terms = criterion_terms_normalized(&move_vertex_last(pair, vertex))?;
    Ok((verdict(&terms), terms))
}

/// The `Sq²` verdict at every 2-local smooth vertex.
pub fn sq2_verdicts_by_vertex(pair: &CharacteristicPair) -> Result<Vec<(usize, bool)>> {
    pair.ensure(Mode::Strict)?;
    two_local_smooth_vertices(pair)?
        .into_iter()
        .map(|v| {
            let terms = criterion_terms_normalized(&move_vertex_last(pair, v))?;
            Ok((v, verdict(&terms)))
        })
        .collect()
}

/// All three Steenrod verdicts. Debug builds also recompute `Sq²` at every
/// admissible vertex and fail if any verdict disagrees.
pub fn sq2_nontrivial(pair: &CharacteristicPair) -> Result<SteenrodProfile> {
    let (normalized, witness) = normalize_two_local(pair)?;
    let terms = criterion_terms_normalized(&normalized)?;
    let sq2 = verdict(&terms);
    if cfg!(debug_assertions) {
        for (v, other) in sq2_verdicts_by_vertex(pair)? {
            if other != sq2 {
                return Err(Error::Internal(format!(
                    "Sq² verdict at vertex {v} ({other}) differs from vertex {witness} ({sq2}) for {pair}"
                )));
            }
        }
    }
    Ok(SteenrodProfile {
        sq1_h2_nontrivial: sq1_on_h2(pair)?,
        sq1_h3_nontrivial: false,
        sq2_nontrivial: sq2,
        witness_vertex: witness,
        criterion_terms: terms,
    })
}
