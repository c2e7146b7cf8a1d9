//! Pairwise rigidity comparison.
//!
//! Graded groups are decided by `(n, g)`. For even `g` the stable type is
//! already determined by `(n, g)`; for odd `g` it also needs the `Sq²` bit,
//! and homotopy equivalence needs a ring isomorphism, which is searched for
//! when both cup forms exist.

use serde::{Deserialize, Serialize};

use super::forms::{congruence_obstruction, ring_iso_search, IsoWitness};
use super::splitting::{splitting_from, SplittingDescriptor};
use crate::cohomology::{cohomology_profile, cup_form, CohomologyProfile, CupFormOutcome};
use crate::charpair::CharacteristicPair;
use crate::error::Result;
use crate::steenrod::sq2_nontrivial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RigidityTier {
    GradedGroupsDiffer,
    StablyInequivalent,
    StablyEquivalent,
    HomotopyInconclusive,
    HomotopyEquivalent,
}

impl RigidityTier {
    /// The tiers that prove the two spaces are not homotopy equivalent.
    pub fn is_negative(self) -> bool {
        matches!(
            self,
            RigidityTier::GradedGroupsDiffer | RigidityTier::StablyInequivalent
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityEvidence {
    pub profiles: [CohomologyProfile; 2],
    pub sq2: [bool; 2],
    /// The shared stable splitting, when there is one.
    pub splitting: Option<SplittingDescriptor>,
    /// A cup-form congruence `Sᵀ·A·S = ε·B`.
    pub witness: Option<IsoWitness>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityVerdict {
    pub tier: RigidityTier,
    pub evidence: RigidityEvidence,
}

pub fn compare_rigidity(
    a: &CharacteristicPair,
    b: &CharacteristicPair,
    search_bound: u32,
) -> Result<RigidityVerdict> {
    let profiles = [cohomology_profile(a)?, cohomology_profile(b)?];
    let sq2 = [
        sq2_nontrivial(a)?.sq2_nontrivial,
        sq2_nontrivial(b)?.sq2_nontrivial,
    ];
    let mut evidence = RigidityEvidence {
        profiles,
        sq2,
        splitting: None,
        witness: None,
        note: String::new(),
    };
    let verdict = |tier, mut evidence: RigidityEvidence, note: String| {
        evidence.note = note;
        Ok(RigidityVerdict { tier, evidence })
    };

    let [pa, pb] = profiles;
    if (pa.betti2, pa.torsion_order) != (pb.betti2, pb.torsion_order) {
        return verdict(
            RigidityTier::GradedGroupsDiffer,
            evidence,
            format!(
                "(n, g) = ({}, {}) vs ({}, {})",
                pa.betti2, pa.torsion_order, pb.betti2, pb.torsion_order
            ),
        );
    }
    let g = pa.torsion_order;
    if g % 2 == 0 {
        evidence.splitting = Some(splitting_from(pa.betti2, g, false));
        return verdict(
            RigidityTier::StablyEquivalent,
            evidence,
            "g even: the stable type is fixed by (n, g); a ring isomorphism is not checked".into(),
        );
    }
    if sq2[0] != sq2[1] {
        return verdict(
            RigidityTier::StablyInequivalent,
            evidence,
            format!("Sq² nontrivial: {} vs {}", sq2[0], sq2[1]),
        );
    }
    evidence.splitting = Some(splitting_from(pa.betti2, g, sq2[0]));

    let forms = (cup_form(a)?, cup_form(b)?);
    let (fa, fb) = match forms {
        (CupFormOutcome::Available(fa), CupFormOutcome::Available(fb)) => (fa, fb),
        (oa, ob) => {
            let reason = |o: &CupFormOutcome| match o {
                CupFormOutcome::Available(_) => "available".to_string(),
                CupFormOutcome::Unavailable(r) => format!("{r:?}"),
            };
            return verdict(
                RigidityTier::HomotopyInconclusive,
                evidence,
                format!(
                    "stably equivalent; cup forms: {} / {}",
                    reason(&oa),
                    reason(&ob)
                ),
            );
        }
    };
    if let Some(found) = ring_iso_search(&fa, &fb, search_bound)? {
        evidence.witness = Some(found);
        return verdict(
            RigidityTier::HomotopyEquivalent,
            evidence,
            "cup forms congruent".into(),
        );
    }
    if let Some(invariant) = congruence_obstruction(&fa.entries, &fb.entries) {
        return verdict(
            RigidityTier::StablyEquivalent,
            evidence,
            format!("stably equivalent; cup forms separated by {invariant}"),
        );
    }
    verdict(
        RigidityTier::HomotopyInconclusive,
        evidence,
        format!("stably equivalent; no congruence with entries within ±{search_bound}"),
    )
}
