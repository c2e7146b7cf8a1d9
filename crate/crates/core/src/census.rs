//! Exhaustive census of Strict pairs with entries bounded by `B`,
//! deduplicated by a canonical form of the determinant table.
//!
//! The key quotients the table by dihedral relabeling, by per-edge sign
//! flips (`d_ij ↦ s_i·s_j·d_ij`) and by a global sign, which is exactly the
//! trace of the relabel and transform actions on the table.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::applications::forms::determinant;
use crate::applications::{
    compare_rigidity, gauge_descriptor, spin_report, splitting_from, GaugeBase,
    SplittingDescriptor, SpinReport, Summand,
};
use crate::arith::{det_table, p_valuation, DeterminantTable};
use crate::charpair::{relabel, transform, CharVector, CharacteristicPair, Mode, Unimodular2};
use crate::cohomology::{cohomology_profile, cup_form, p_local_smooth_vertices, CohomologyProfile};
use crate::contraction::{degenerate_g, degenerate_sq2, edge_contract};
use crate::error::{Error, Result};
use crate::steenrod::{normalize_two_local, sq2_nontrivial, sq2_verdicts_by_vertex, SteenrodProfile};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey {
    pub m: usize,
    /// Flattened upper triangle `(d_12, d_13, …, d_{m-1,m})`.
    pub table: Vec<i64>,
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.table)
    }
}

pub fn canonical_key(pair: &CharacteristicPair) -> Result<CanonicalKey> {
    pair.ensure(Mode::Strict)?;
    canonical_key_of_table(&det_table(pair)?)
}

/// Lexicographically least table in the orbit of `table`.
pub fn canonical_key_of_table(table: &DeterminantTable) -> Result<CanonicalKey> {
    let m = table.m();
    if table.upper().contains(&i64::MIN) {
        return Err(Error::Overflow("canonical key negation"));
    }
    let mut best: Option<Vec<i64>> = None;
    let mut old = vec![0usize; m];
    let mut base = vec![vec![0i64; m]; m];
    let mut candidate = Vec::with_capacity(table.upper().len());
    for reflect in [false, true] {
        for r in 0..m {
            // new edge k+1 carries old edge old[k]
            for (k, slot) in old.iter_mut().enumerate() {
                let b = (k + r) % m;
                *slot = if reflect { m - b } else { b + 1 };
            }
            for i in 0..m {
                for j in 0..m {
                    base[i][j] = table.get(old[i], old[j]);
                }
            }
            for eps in [1i64, -1] {
                let free: Vec<usize> = (1..m).filter(|&j| base[0][j] == 0).collect();
                let mut signs = vec![1i64; m];
                for j in 1..m {
                    // make the first row as negative as possible
                    signs[j] = if eps * base[0][j] > 0 { -1 } else { 1 };
                }
                for mask in 0u64..(1u64 << free.len()) {
                    for (bit, &j) in free.iter().enumerate() {
                        signs[j] = if mask >> bit & 1 == 1 { -1 } else { 1 };
                    }
                    candidate.clear();
                    for i in 0..m {
                        for j in (i + 1)..m {
                            candidate.push(eps * signs[i] * signs[j] * base[i][j]);
                        }
                    }
                    if best.as_ref().is_none_or(|b| candidate < *b) {
                        best = Some(candidate.clone());
                    }
                }
            }
        }
    }
    Ok(CanonicalKey {
        m,
        table: best.unwrap_or_default(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub key: CanonicalKey,
    pub representative: CharacteristicPair,
    pub profile: CohomologyProfile,
    pub steenrod: SteenrodProfile,
    pub splitting: SplittingDescriptor,
    pub spin: SpinReport,
}

/// The census line schema; field names are part of the file format.
#[derive(Serialize)]
struct CensusLine<'a> {
    key: &'a CanonicalKey,
    representative: &'a CharacteristicPair,
    betti2: usize,
    g: i64,
    sq1_h2: bool,
    sq2: bool,
    splitting: &'a SplittingDescriptor,
    spin: &'a SpinReport,
}

impl CensusRecord {
    pub fn analyze(pair: &CharacteristicPair) -> Result<Self> {
        let profile = cohomology_profile(pair)?;
        let steenrod = sq2_nontrivial(pair)?;
        Ok(Self {
            key: canonical_key(pair)?,
            representative: pair.clone(),
            profile,
            splitting: splitting_from(profile.betti2, profile.torsion_order, steenrod.sq2_nontrivial),
            spin: spin_report(pair)?,
            steenrod,
        })
    }

    pub fn to_json_line(&self) -> String {
        let line = CensusLine {
            key: &self.key,
            representative: &self.representative,
            betti2: self.profile.betti2,
            g: self.profile.torsion_order,
            sq1_h2: self.steenrod.sq1_h2_nontrivial,
            sq2: self.steenrod.sq2_nontrivial,
            splitting: &self.splitting,
            spin: &self.spin,
        };
        serde_json::to_string(&line).expect("census lines contain only plain data")
    }

    /// The labeling-independent part of the analysis.
    fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            betti2: self.profile.betti2,
            g: self.profile.torsion_order,
            sq1_h2: self.steenrod.sq1_h2_nontrivial,
            sq1_h3: self.steenrod.sq1_h3_nontrivial,
            sq2: self.steenrod.sq2_nontrivial,
            splitting: self.splitting.clone(),
            quasi_toric: self.spin.is_quasi_toric,
            spin: self.spin.w2_vanishes,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Fingerprint {
    betti2: usize,
    g: i64,
    sq1_h2: bool,
    sq1_h3: bool,
    sq2: bool,
    splitting: SplittingDescriptor,
    quasi_toric: bool,
    spin: Option<bool>,
}

pub fn write_jsonl<W: Write>(records: &[CensusRecord], mut out: W) -> io::Result<()> {
    for r in records {
        out.write_all(r.to_json_line().as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CensusFilter {
    GEven,
    GOdd,
    QuasiToric,
    Sq2,
    NoSq2,
    Spin,
    NonSpin,
}

impl CensusFilter {
    pub const ALL: [CensusFilter; 7] = [
        CensusFilter::GEven,
        CensusFilter::GOdd,
        CensusFilter::QuasiToric,
        CensusFilter::Sq2,
        CensusFilter::NoSq2,
        CensusFilter::Spin,
        CensusFilter::NonSpin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CensusFilter::GEven => "g-even",
            CensusFilter::GOdd => "g-odd",
            CensusFilter::QuasiToric => "quasi-toric",
            CensusFilter::Sq2 => "sq2",
            CensusFilter::NoSq2 => "no-sq2",
            CensusFilter::Spin => "spin",
            CensusFilter::NonSpin => "non-spin",
        }
    }

    pub fn matches(self, r: &CensusRecord) -> bool {
        match self {
            CensusFilter::GEven => r.profile.torsion_order % 2 == 0,
            CensusFilter::GOdd => r.profile.torsion_order % 2 != 0,
            CensusFilter::QuasiToric => r.spin.is_quasi_toric,
            CensusFilter::Sq2 => r.steenrod.sq2_nontrivial,
            CensusFilter::NoSq2 => !r.steenrod.sq2_nontrivial,
            CensusFilter::Spin => r.spin.w2_vanishes == Some(true),
            CensusFilter::NonSpin => r.spin.w2_vanishes == Some(false),
        }
    }
}

impl fmt::Display for CensusFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFilter(pub String);

impl fmt::Display for UnknownFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = CensusFilter::ALL.iter().map(|c| c.name()).collect();
        write!(f, "unknown filter {:?} (expected one of {})", self.0, names.join(", "))
    }
}

impl std::error::Error for UnknownFilter {}

impl FromStr for CensusFilter {
    type Err = UnknownFilter;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        CensusFilter::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownFilter(s.to_owned()))
    }
}

/// Primitive vectors with both entries in `[-bound, bound]`, lexicographic.
pub fn primitive_vectors(bound: i64) -> Vec<CharVector> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let v = CharVector::new(a, b);
            if v.is_primitive() {
                out.push(v);
            }
        }
    }
    out
}

/// Admissible first vectors: the lexicographically smaller of each `±v`.
pub fn first_vectors(bound: i64) -> Vec<CharVector> {
    primitive_vectors(bound)
        .into_iter()
        .filter(|v| v.a < 0 || (v.a == 0 && v.b < 0))
        .collect()
}

fn check_size(m: usize, bound: i64) -> Result<()> {
    if m < 3 || bound < 1 {
        return Err(Error::CensusSize { m, bound });
    }
    Ok(())
}

fn independent(u: CharVector, v: CharVector) -> bool {
    i128::from(u.a) * i128::from(v.b) != i128::from(u.b) * i128::from(v.a)
}

/// Every Strict pair with the given first vector, in lexicographic order.
pub fn strict_pairs_from(first: CharVector, m: usize, bound: i64) -> Result<Vec<CharacteristicPair>> {
    check_size(m, bound)?;
    let pool = primitive_vectors(bound);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    current.push(first);
    fn extend(
        pool: &[CharVector],
        m: usize,
        current: &mut Vec<CharVector>,
        out: &mut Vec<CharacteristicPair>,
    ) {
        if current.len() == m {
            if independent(current[m - 1], current[0]) {
                out.push(CharacteristicPair::new(current.clone()));
            }
            return;
        }
        let last = *current.last().expect("first vector is always present");
        for &v in pool {
            if independent(last, v) {
                current.push(v);
                extend(pool, m, current, out);
                current.pop();
            }
        }
    }
    extend(&pool, m, &mut current, &mut out);
    Ok(out)
}

/// The lexicographically least Strict pair for every canonical key.
pub fn representatives(m: usize, bound: i64) -> Result<BTreeMap<CanonicalKey, CharacteristicPair>> {
    check_size(m, bound)?;
    let partitions = first_vectors(bound)
        .into_par_iter()
        .map(|first| {
            let mut seen: HashMap<CanonicalKey, CharacteristicPair> = HashMap::new();
            for pair in strict_pairs_from(first, m, bound)? {
                let key = canonical_key(&pair)?;
                // pairs arrive in lexicographic order, so the first one wins
                seen.entry(key).or_insert(pair);
            }
            Ok(seen)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut merged: BTreeMap<CanonicalKey, CharacteristicPair> = BTreeMap::new();
    for part in partitions {
        for (key, pair) in part {
            merged
                .entry(key)
                .and_modify(|cur| {
                    if pair < *cur {
                        *cur = pair.clone();
                    }
                })
                .or_insert(pair);
        }
    }
    Ok(merged)
}

/// One record per canonical key, sorted by key, keeping those accepted by
/// `keep`.
pub fn enumerate_by<F>(m: usize, bound: i64, keep: F) -> Result<Vec<CensusRecord>>
where
    F: Fn(&CensusRecord) -> bool + Sync,
{
    let reps: Vec<CharacteristicPair> = representatives(m, bound)?.into_values().collect();
    let records = reps
        .par_iter()
        .map(CensusRecord::analyze)
        .collect::<Result<Vec<_>>>()?;
    Ok(records.into_iter().filter(|r| keep(r)).collect())
}

pub fn enumerate(m: usize, bound: i64, filter: Option<CensusFilter>) -> Result<Vec<CensusRecord>> {
    enumerate_by(m, bound, |r| filter.is_none_or(|f| f.matches(r)))
}

const CHECK_BASES: [[[i64; 2]; 2]; 6] = [
    [[1, 0], [0, 1]],
    [[0, 1], [1, 0]],
    [[1, 1], [0, 1]],
    [[2, 1], [1, 1]],
    [[1, 0], [-3, 1]],
    [[0, -1], [1, 2]],
];

/// A fixed family of `2m` symmetries mixing all three actions.
pub fn check_symmetries(pair: &CharacteristicPair) -> Result<Vec<CharacteristicPair>> {
    let m = pair.len();
    let mut out = Vec::with_capacity(2 * m);
    for reflect in [false, true] {
        for r in 0..m {
            let basis = Unimodular2::new(CHECK_BASES[(2 * r + usize::from(reflect)) % CHECK_BASES.len()])?;
            let signs: Vec<i64> = (0..m)
                .map(|i| if (i * (r + 1) + usize::from(reflect)) % 3 == 0 { -1 } else { 1 })
                .collect();
            out.push(transform(&relabel(pair, r as i64, reflect), &basis, &signs)?);
        }
    }
    Ok(out)
}

/// Every property the census is expected to satisfy, for one record.
pub fn record_violations(record: &CensusRecord) -> Result<Vec<String>> {
    let pair = &record.representative;
    let n = record.profile.betti2;
    let g = record.profile.torsion_order;
    let sq2 = record.steenrod.sq2_nontrivial;
    let mut bad = Vec::new();
    let mut fail = |msg: String| bad.push(format!("{pair}: {msg}"));

    if CensusRecord::analyze(pair)? != *record {
        fail("record is not reproducible from its representative".into());
    }
    for p in [2, 3, 5, 7] {
        if p_local_smooth_vertices(pair, p).is_err() {
            fail(format!("no {p}-local smooth vertex"));
        }
    }
    if g % 2 == 0 && sq2 {
        fail("g even but Sq² nontrivial".into());
    }
    for (v, verdict) in sq2_verdicts_by_vertex(pair)? {
        if verdict != sq2 {
            fail(format!("Sq² verdict at vertex {v} is {verdict}"));
        }
    }

    let (normalized, _) = normalize_two_local(pair)?;
    let nu_g = p_valuation(g, 2)?;
    let mut any_contraction = false;
    for i in 1..=n {
        let triple = edge_contract(&normalized, i)?;
        any_contraction |= degenerate_sq2(&triple)?;
        if p_valuation(degenerate_g(&triple)?, 2)? != nu_g {
            fail(format!("ν₂ of the contraction at edge {i} differs from ν₂(g)"));
        }
    }
    if any_contraction != sq2 {
        fail(format!("contractions give Sq² {any_contraction}, direct criterion {sq2}"));
    }

    let cup = cup_form(pair)?.available();
    if let Some(form) = &cup {
        let odd_diagonal = (0..n).any(|i| form.entries[i][i] % 2 != 0);
        if odd_diagonal != sq2 {
            fail(format!("cup form has odd diagonal {odd_diagonal} but Sq² is {sq2}"));
        }
    }
    if record.spin.is_quasi_toric {
        let s = &record.spin;
        if s.product_criterion != Some(!sq2) || s.parity_criterion != Some(!sq2) {
            fail(format!("spin criteria {s:?} disagree with Sq² {sq2}"));
        }
        match &cup {
            Some(form) if determinant(&form.entries).abs() == 1 => {}
            _ => fail("quasi-toric but cup form is missing or not unimodular".into()),
        }
    }

    if record.splitting != splitting_from(n, g, sq2) {
        fail("splitting does not match (n, g, Sq²)".into());
    }
    let count = |s: Summand| record.splitting.summands().iter().filter(|&&x| x == s).count();
    let spheres = count(Summand::Sphere { dim: 3 });
    let shape_ok = if sq2 {
        count(Summand::SuspendedCP2) == 1 && spheres == n - 1
    } else {
        count(Summand::Sphere { dim: 5 }) == 1 && spheres == n
    };
    if !shape_ok {
        fail("splitting has the wrong shape".into());
    }

    let gauge = gauge_descriptor(pair, "G")?;
    let gauge_ok = match gauge.base_case {
        GaugeBase::CP2Based => sq2 && n > 1,
        GaugeBase::S4Based => !sq2,
        GaugeBase::NotCovered => sq2 && n == 1,
    };
    if !gauge_ok {
        fail(format!("gauge base {:?} inconsistent", gauge.base_case));
    }

    for image in check_symmetries(pair)? {
        if canonical_key(&image)? != record.key {
            fail(format!("symmetric image {image} has a different key"));
        }
        let tier = compare_rigidity(pair, &image, 1)?.tier;
        if tier.is_negative() {
            fail(format!("rigidity against {image} returned {tier:?}"));
        }
    }
    Ok(bad)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfcheckSummary {
    pub m: usize,
    pub bound: i64,
    pub pairs: usize,
    pub records: usize,
    pub violations: Vec<String>,
}

impl SelfcheckSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs [`record_violations`] on every record and checks that every Strict
/// pair in range analyzes identically to the representative of its key.
pub fn selfcheck(m: usize, bound: i64) -> Result<SelfcheckSummary> {
    let records = enumerate(m, bound, None)?;
    let by_key: HashMap<&CanonicalKey, Fingerprint> =
        records.iter().map(|r| (&r.key, r.fingerprint())).collect();

    let mut violations: Vec<String> = records
        .par_iter()
        .map(record_violations)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let per_partition = first_vectors(bound)
        .into_par_iter()
        .map(|first| {
            let mut count = 0usize;
            let mut bad = Vec::new();
            for pair in strict_pairs_from(first, m, bound)? {
                count += 1;
                let record = CensusRecord::analyze(&pair)?;
                match by_key.get(&record.key) {
                    Some(expected) if *expected == record.fingerprint() => {}
                    Some(_) => bad.push(format!(
                        "{pair}: analysis differs from the representative of key {}",
                        record.key
                    )),
                    None => bad.push(format!("{pair}: key {} missing from the census", record.key)),
                }
            }
            Ok((count, bad))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = 0;
    for (count, bad) in per_partition {
        pairs += count;
        violations.extend(bad);
    }
    Ok(SelfcheckSummary {
        m,
        bound,
        pairs,
        records: records.len(),
        violations,
    })
}
