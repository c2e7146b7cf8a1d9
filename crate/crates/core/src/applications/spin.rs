//! Spin criterion for quasi-toric manifolds (every vertex determinant ±1).
//!
//! Two independent routes are computed and must agree: the parity of
//! `∏(1 − d_{i,n+1}·d_{i,n+2})`, and, after the basis change sending
//! `λ_{n+1} ↦ (1,0)` and `λ_{n+2} ↦ (0,1)`, whether every remaining
//! `λ_i = (a_i, b_i)` has `a_i + b_i` odd.

use serde::{Deserialize, Serialize};

use crate::arith::det_table;
use crate::charpair::{CharacteristicPair, Mode, Unimodular2};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpinReport {
    pub is_quasi_toric: bool,
    pub w2_vanishes: Option<bool>,
    pub product_criterion: Option<bool>,
    pub parity_criterion: Option<bool>,
}

impl SpinReport {
    pub fn is_spin(&self) -> Option<bool> {
        self.w2_vanishes
    }
}

/// `true` when the product criterion says spin.
fn product_route(pair: &CharacteristicPair) -> Result<bool> {
    let m = pair.len();
    let t = det_table(pair)?;
    // spin iff every factor is odd, i.e. every d_{i,n+1}·d_{i,n+2} is even
    Ok((1..=pair.rank()).all(|i| (i128::from(t.get(i, m - 1)) * i128::from(t.get(i, m))) % 2 == 0))
}

/// `true` when the parity criterion says spin.
fn parity_route(pair: &CharacteristicPair) -> Result<bool> {
    let m = pair.len();
    let u = pair.edge(m - 1);
    let v = pair.edge(m);
    let det = u.a * v.b - u.b * v.a;
    // inverse of the matrix with columns u, v; det is ±1 here
    let basis = Unimodular2::new([[det * v.b, -det * v.a], [-det * u.b, det * u.a]])?;
    let (e1, e2) = (basis.apply(u)?, basis.apply(v)?);
    if (e1.a, e1.b, e2.a, e2.b) != (1, 0, 0, 1) {
        return Err(Error::Internal(format!(
            "normalizing basis maps λ_{{n+1}}, λ_{{n+2}} to {e1}, {e2}"
        )));
    }
    for i in 1..=pair.rank() {
        let w = basis.apply(pair.edge(i))?;
        if (w.a + w.b).rem_euclid(2) != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn spin_report(pair: &CharacteristicPair) -> Result<SpinReport> {
    pair.ensure(Mode::Strict)?;
    let t = det_table(pair)?;
    let quasi_toric = (1..=pair.len()).all(|i| t.at_vertex(i).abs() == 1);
    if !quasi_toric {
        return Ok(SpinReport {
            is_quasi_toric: false,
            w2_vanishes: None,
            product_criterion: None,
            parity_criterion: None,
        });
    }
    let product = product_route(pair)?;
    let parity = parity_route(pair)?;
    if product != parity {
        return Err(Error::Internal(format!(
            "spin criteria disagree for {pair}: product {product}, parity {parity}"
        )));
    }
    Ok(SpinReport {
        is_quasi_toric: true,
        w2_vanishes: Some(product),
        product_criterion: Some(product),
        parity_criterion: Some(parity),
    })
}
