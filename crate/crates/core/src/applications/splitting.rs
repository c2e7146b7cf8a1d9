//! Stable homotopy type of `ΣX`: either
//! `ΣCP² ∨ ⋁^{n−1} S³ ∨ P⁴(g)` (when `Sq²` is nontrivial) or
//! `S⁵ ∨ ⋁^n S³ ∨ P⁴(g)`.

use serde::{Deserialize, Serialize};

use crate::charpair::CharacteristicPair;
use crate::cohomology::cohomology_profile;
use crate::error::Result;
use crate::steenrod::sq2_nontrivial;

/// One wedge summand. The derived order is the canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Summand {
    Sphere { dim: u32 },
    /// `P^dim(order)`, the cofiber of a degree-`order` map on `S^{dim−1}`.
    Moore { dim: u32, order: i64 },
    #[serde(rename = "suspended_cp2")]
    SuspendedCP2,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SplittingDescriptor {
    summands: Vec<Summand>,
}

impl SplittingDescriptor {
    pub fn new(mut summands: Vec<Summand>) -> Self {
        summands.sort();
        Self { summands }
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }
}

/// The descriptor determined by `(n, g, Sq² bit)`. `P⁴(1)` is contractible
/// and is left out.
pub fn splitting_from(betti2: usize, torsion_order: i64, sq2: bool) -> SplittingDescriptor {
    let mut summands = Vec::with_capacity(betti2 + 2);
    let spheres = if sq2 {
        summands.push(Summand::SuspendedCP2);
        betti2.saturating_sub(1)
    } else {
        summands.push(Summand::Sphere { dim: 5 });
        betti2
    };
    summands.extend(std::iter::repeat_n(Summand::Sphere { dim: 3 }, spheres));
    if torsion_order > 1 {
        summands.push(Summand::Moore {
            dim: 4,
            order: torsion_order,
        });
    }
    SplittingDescriptor::new(summands)
}

pub fn stable_splitting(pair: &CharacteristicPair) -> Result<SplittingDescriptor> {
    let profile = cohomology_profile(pair)?;
    let steenrod = sq2_nontrivial(pair)?;
    Ok(splitting_from(
        profile.betti2,
        profile.torsion_order,
        steenrod.sq2_nontrivial,
    ))
}
