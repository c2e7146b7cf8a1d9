//! Exact invariants of 4-dimensional toric orbifolds given by a polygon
//! and a characteristic function.
//!
//! A [`CharacteristicPair`] lists one primitive vector in `Z²` per edge.
//! Everything computed here factors through the table of pairwise
//! determinants `d_ij = det(λ_i, λ_j)`:
//!
//! ```
//! use toricsq::{cohomology_profile, sq2_nontrivial, CharacteristicPair};
//!
//! let cp2 = CharacteristicPair::from_tuples(&[(1, 0), (0, 1), (-1, -1)]);
//! let profile = cohomology_profile(&cp2).unwrap();
//! assert_eq!((profile.betti2, profile.torsion_order), (1, 1));
//! assert!(sq2_nontrivial(&cp2).unwrap().sq2_nontrivial);
//! ```

pub mod applications;
pub mod arith;
pub mod census;
pub mod charpair;
pub mod cohomology;
pub mod contraction;
pub mod error;
pub mod pairfile;
pub mod report;
pub mod steenrod;

pub use applications::{
    compare_rigidity, gauge_descriptor, ring_iso_search, spin_report, stable_splitting,
    su2_gauge_equivalent, GaugeBase, GaugeDescriptor, IsoWitness, RigidityTier, RigidityVerdict,
    SpinReport, SplittingDescriptor, Summand,
};
pub use arith::{det2, det_table, gcd_all, p_valuation, torsion_order, DeterminantTable};
pub use census::{canonical_key, enumerate, selfcheck, CanonicalKey, CensusFilter, CensusRecord};
pub use charpair::{
    relabel, relabel_edge, relabel_vertex, transform, validate, CharVector, CharacteristicPair,
    Mode, Unimodular2, ValidationReport, Violation, ViolationKind,
};
pub use cohomology::{
    cohomology_profile, cup_form, move_vertex_last, p_local_smooth_vertices, triangle_self_cup,
    CohomologyProfile, CupForm, CupFormOutcome, UnavailableReason, VertexSet,
};
pub use contraction::{
    classify_degenerate_triangle, degenerate_g, degenerate_sq2, edge_contract,
    DegenerateClassification, DegenerateKind, DegenerateTriple,
};
pub use error::{Error, Result};
pub use pairfile::{parse_pair_file, PairFileError};
pub use report::Report;
pub use steenrod::{sq1_on_h2, sq1_on_h3, sq2_nontrivial, SteenrodProfile};
