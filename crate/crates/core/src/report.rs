//! The full JSON analysis report for one pair.
//!
//! Every key is always present; analyses that do not apply are `null`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::applications::{spin_report, splitting_from, SpinReport, SplittingDescriptor};
use crate::arith::{det_table, torsion_order};
use crate::charpair::{CharVector, CharacteristicPair, Mode};
use crate::cohomology::{cup_form, p_local_smooth_vertices, CupFormOutcome};
use crate::error::Result;
use crate::steenrod::sq2_nontrivial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetEntry {
    pub i: usize,
    pub j: usize,
    pub d: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub edges: Vec<CharVector>,
    pub det_table: Vec<DetEntry>,
    pub g: i64,
    pub betti2: usize,
    pub smooth_vertices_p2: Vec<usize>,
    /// Smooth vertices for 2 and every extra requested prime.
    pub smooth_vertices_by_prime: BTreeMap<i64, Vec<usize>>,
    pub sq1_h2: bool,
    pub sq1_h3: bool,
    pub sq2: bool,
    pub criterion_terms: Vec<i64>,
    pub witness_vertex: usize,
    pub splitting: SplittingDescriptor,
    /// `null` unless the pair is quasi-toric.
    pub spin: Option<SpinReport>,
    pub cup_form: Option<Vec<Vec<i64>>>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn build(pair: &CharacteristicPair, extra_primes: &[i64]) -> Result<Self> {
        pair.ensure(Mode::Strict)?;
        let table = det_table(pair)?;
        let g = torsion_order(&table)?;
        let steenrod = sq2_nontrivial(pair)?;
        let mut warnings = Vec::new();

        let mut smooth = BTreeMap::new();
        for &p in std::iter::once(&2).chain(extra_primes) {
            smooth.insert(p, p_local_smooth_vertices(pair, p)?.indices);
        }

        if steenrod.witness_vertex != pair.len() {
            warnings.push(format!(
                "criterion terms computed after moving vertex {} to position {}",
                steenrod.witness_vertex,
                pair.len()
            ));
        }
        let cup = match cup_form(pair)? {
            CupFormOutcome::Available(form) => {
                if form.smooth_vertex != pair.len() {
                    warnings.push(format!(
                        "cup form basis taken at smooth vertex {}",
                        form.smooth_vertex
                    ));
                }
                Some(form.entries)
            }
            CupFormOutcome::Unavailable(reason) => {
                warnings.push(format!("cup form unavailable: {reason:?}"));
                None
            }
        };
        let spin = spin_report(pair)?;

        Ok(Self {
            edges: pair.vectors().to_vec(),
            det_table: table.iter().map(|(i, j, d)| DetEntry { i, j, d }).collect(),
            g,
            betti2: pair.rank(),
            smooth_vertices_p2: smooth[&2].clone(),
            smooth_vertices_by_prime: smooth,
            sq1_h2: steenrod.sq1_h2_nontrivial,
            sq1_h3: steenrod.sq1_h3_nontrivial,
            sq2: steenrod.sq2_nontrivial,
            criterion_terms: steenrod.criterion_terms,
            witness_vertex: steenrod.witness_vertex,
            splitting: splitting_from(pair.rank(), g, steenrod.sq2_nontrivial),
            spin: spin.is_quasi_toric.then_some(spin),
            cup_form: cup,
            warnings,
        })
    }

    pub fn pair(&self) -> CharacteristicPair {
        CharacteristicPair::new(self.edges.clone())
    }

    /// The extra primes this report was built with.
    pub fn extra_primes(&self) -> Vec<i64> {
        self.smooth_vertices_by_prime
            .keys()
            .copied()
            .filter(|&p| p != 2)
            .collect()
    }
}
