//! Edge contractions onto (possibly degenerate) triangles.
//!
//! Contracting every edge except `E_i`, `E_{n+1}`, `E_{n+2}` leaves the
//! triangle datum `(λ_i, λ_{n+1}, λ_{n+2})`. When `v_{n+2}` is 2-local
//! smooth, `Sq²` on the polygon is nontrivial iff it is nontrivial on at
//! least one of these triangles.

use serde::{Deserialize, Serialize};

use crate::arith::{det2, det_table, gcd_all, torsion_order};
use crate::charpair::{CharVector, CharacteristicPair, Mode};
use crate::cohomology::smooth_vertices_in;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegenerateTriple {
    pub vectors: [CharVector; 3],
    pub source_edge: usize,
    pub d12: i64,
    pub d13: i64,
    pub d23: i64,
}

impl DegenerateTriple {
    /// A triple from three vectors directly; `source_edge` is left at 1.
    pub fn from_vectors(vectors: [CharVector; 3]) -> Result<Self> {
        let [a, b, c] = vectors;
        let triple = Self {
            vectors,
            source_edge: 1,
            d12: det2(a, b)?,
            d13: det2(a, c)?,
            d23: det2(b, c)?,
        };
        if triple.d23 == 0 {
            return Err(Error::DegenerateTriple);
        }
        Ok(triple)
    }

    pub fn is_wedge(&self) -> bool {
        self.d12 == 0 || self.d13 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DegenerateKind {
    /// All three determinants nonzero: an honest toric orbifold.
    ToricOrbifoldTriangle,
    /// `Σ(S³/G) ∨ S²` with `G` cyclic of order `|d23|`.
    WedgeSuspLensAndSphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegenerateClassification {
    pub kind: DegenerateKind,
    pub lens_order: i64,
    pub g_i: i64,
}

/// `ρ_i`: keep `E_i`, `E_{n+1}`, `E_{n+2}`. The pair must already have a
/// 2-local smooth vertex at `v_{n+2}`; no relabeling happens here.
pub fn edge_contract(pair: &CharacteristicPair, i: usize) -> Result<DegenerateTriple> {
    pair.ensure(Mode::Strict)?;
    let m = pair.len();
    let n = pair.rank();
    if !(1..=n).contains(&i) {
        return Err(Error::EdgeOutOfRange { index: i, max: n });
    }
    let table = det_table(pair)?;
    let g = torsion_order(&table)?;
    if !smooth_vertices_in(&table, g, 2)?.contains(&m) {
        return Err(Error::NotNormalized);
    }
    Ok(DegenerateTriple {
        vectors: [pair.edge(i), pair.edge(m - 1), pair.edge(m)],
        source_edge: i,
        d12: table.get(i, m - 1),
        d13: table.get(i, m),
        d23: table.get(m - 1, m),
    })
}

fn check(triple: &DegenerateTriple) -> Result<()> {
    if triple.d23 == 0 {
        Err(Error::DegenerateTriple)
    } else {
        Ok(())
    }
}

/// Order `g_i` of `H³` of the contracted space.
pub fn degenerate_g(triple: &DegenerateTriple) -> Result<i64> {
    check(triple)?;
    let g = if triple.is_wedge() {
        triple.d23.unsigned_abs()
    } else {
        gcd_all([triple.d12, triple.d13, triple.d23])
    };
    i64::try_from(g).map_err(|_| Error::Overflow("degenerate torsion order"))
}

pub fn classify_degenerate_triangle(triple: &DegenerateTriple) -> Result<DegenerateClassification> {
    let g_i = degenerate_g(triple)?;
    let lens_order =
        i64::try_from(triple.d23.unsigned_abs()).map_err(|_| Error::Overflow("lens order"))?;
    let kind = if triple.is_wedge() {
        DegenerateKind::WedgeSuspLensAndSphere
    } else {
        DegenerateKind::ToricOrbifoldTriangle
    };
    Ok(DegenerateClassification {
        kind,
        lens_order,
        g_i,
    })
}

/// `Sq²` on the contracted triangle: `d12·d13·d23 / g_i²` odd.
pub fn degenerate_sq2(triple: &DegenerateTriple) -> Result<bool> {
    let g = i128::from(degenerate_g(triple)?);
    if triple.is_wedge() {
        return Ok(false);
    }
    let product = i128::from(triple.d12) * i128::from(triple.d13) * i128::from(triple.d23);
    if product % (g * g) != 0 {
        return Err(Error::Internal(format!(
            "g_i² = {} does not divide {product}",
            g * g
        )));
    }
    Ok((product / (g * g)) % 2 != 0)
}
