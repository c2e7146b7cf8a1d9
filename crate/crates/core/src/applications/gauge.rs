//! Decomposition shape of gauge groups `𝒢_k(X, G)` and the `SU(2)`
//! classification in `k`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::charpair::CharacteristicPair;
use crate::cohomology::cohomology_profile;
use crate::error::Result;
use crate::steenrod::sq2_nontrivial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GaugeBase {
    /// `𝒢_k(S⁴, G) × ∏^n Ω²G × Ω³G{g}`
    S4Based,
    /// `𝒢_k(CP², G) × ∏^{n−1} Ω²G × Ω³G{g}`
    CP2Based,
    /// `Sq²` nontrivial with `n = 1`: no decomposition is available.
    NotCovered,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaugeDescriptor {
    pub base_case: GaugeBase,
    pub loop_factors: usize,
    /// `g` for the `Ω³G{g} = Map*(P⁴(g), G)` factor; `None` when `g = 1`.
    pub torsion_factor_order: Option<i64>,
    pub group_tag: String,
}

pub fn gauge_from(betti2: usize, torsion_order: i64, sq2: bool, group_tag: &str) -> GaugeDescriptor {
    let (base_case, loop_factors) = match (sq2, betti2 > 1) {
        (false, _) => (GaugeBase::S4Based, betti2),
        (true, true) => (GaugeBase::CP2Based, betti2 - 1),
        (true, false) => (GaugeBase::NotCovered, 0),
    };
    GaugeDescriptor {
        base_case,
        loop_factors,
        torsion_factor_order: (torsion_order > 1).then_some(torsion_order),
        group_tag: group_tag.to_owned(),
    }
}

pub fn gauge_descriptor(pair: &CharacteristicPair, group_tag: &str) -> Result<GaugeDescriptor> {
    let profile = cohomology_profile(pair)?;
    let sq2 = sq2_nontrivial(pair)?.sq2_nontrivial;
    Ok(gauge_from(profile.betti2, profile.torsion_order, sq2, group_tag))
}

/// The modulus deciding `𝒢_k ≃ 𝒢_{k'}` for `G = SU(2)`: 12 when `Sq²` is
/// trivial, 6 otherwise.
pub fn su2_modulus(sq2: bool) -> i64 {
    if sq2 {
        6
    } else {
        12
    }
}

pub fn su2_gauge_equivalent(pair: &CharacteristicPair, k: i64, k_prime: i64) -> Result<bool> {
    let modulus = su2_modulus(sq2_nontrivial(pair)?.sq2_nontrivial);
    Ok(k.gcd(&modulus) == k_prime.gcd(&modulus))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(v: &[(i64, i64)]) -> CharacteristicPair {
        CharacteristicPair::from_tuples(v)
    }

    #[test]
    fn descriptors() {
        let f2 = gauge_descriptor(&pair(&[(1, 0), (0, 1), (-1, 2), (0, -1)]), "SU(2)").unwrap();
        assert_eq!(f2.base_case, GaugeBase::S4Based);
        assert_eq!(f2.loop_factors, 2);
        assert_eq!(f2.torsion_factor_order, None);
        assert_eq!(f2.group_tag, "SU(2)");

        let g = gauge_from(3, 1, true, "G");
        assert_eq!((g.base_case, g.loop_factors), (GaugeBase::CP2Based, 2));

        let cp2 = gauge_descriptor(&pair(&[(1, 0), (0, 1), (-1, -1)]), "G").unwrap();
        assert_eq!(cp2.base_case, GaugeBase::NotCovered);

        let tt = gauge_descriptor(&pair(&[(1, 2), (1, 0), (1, -2)]), "G").unwrap();
        assert_eq!(tt.base_case, GaugeBase::S4Based);
        assert_eq!(tt.torsion_factor_order, Some(2));
    }

    #[test]
    fn su2_rule() {
        let f2 = pair(&[(1, 0), (0, 1), (-1, 2), (0, -1)]);
        let f1 = pair(&[(1, 0), (0, 1), (-1, 1), (0, -1)]);
        assert!(su2_gauge_equivalent(&f2, 1, 5).unwrap());
        assert!(!su2_gauge_equivalent(&f2, 2, 4).unwrap());
        assert!(su2_gauge_equivalent(&f1, 1, 5).unwrap());
        // gcd(4, 6) = gcd(2, 6) = 2 but gcd(4, 12) = 4
        assert!(su2_gauge_equivalent(&f1, 2, 4).unwrap());
        assert!(su2_gauge_equivalent(&f2, 0, 12).unwrap());
        assert!(su2_gauge_equivalent(&f2, -3, 3).unwrap());
    }
}
