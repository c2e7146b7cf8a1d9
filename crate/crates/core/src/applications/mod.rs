//! Consequences of the Steenrod computation: stable splittings, spin,
//! gauge-group shapes and rigidity comparison.

pub mod forms;
pub mod gauge;
pub mod rigidity;
pub mod spin;
pub mod splitting;

pub use forms::{congruence_obstruction, ring_iso_search, IsoWitness, Matrix};
pub use gauge::{gauge_descriptor, su2_gauge_equivalent, GaugeBase, GaugeDescriptor};
pub use rigidity::{compare_rigidity, RigidityEvidence, RigidityTier, RigidityVerdict};
pub use spin::{spin_report, SpinReport};
pub use splitting::{splitting_from, stable_splitting, SplittingDescriptor, Summand};
