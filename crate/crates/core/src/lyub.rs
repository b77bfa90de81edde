//! Lyubeznik tables, deficiency profiles, classification predicates and the
//! verification of the structural results relating them.
//!
//! The table entry `λ_{p,i}` is computed as the dimension of the
//! `∅`-component of `Ext^{n-p}(Ext^{n-i}(R/I, ω), ω)`: two passes through
//! the resolution engine. Three independent cross-checks guard the route:
//! the Euler characteristic identity `Σ (−1)^{p−i} λ_{p,i} = 1`, the
//! equality of `λ_{d,d}` with the Hochster-Huneke component count, and the
//! agreement of the homological and skeleton-based sequential
//! Cohen-Macaulay tests. Any violation aborts with an invariant error
//! rather than being patched over.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ext::{ext_modules, ext_nonvanishing};
use crate::field::Field;
use crate::homology::is_cohen_macaulay;
use crate::ideal::SquarefreeIdeal;
use crate::resolution::{minimal_free_resolution, FreeResolution};
use crate::sqmod::{ModuleProfile, SqfModule};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Vertex cap for the homological engine; beyond it the `2^n` subset scans
/// are declined as a resource bound (parsing alone allows up to 24).
pub const ENGINE_VERTEX_CAP: usize = 16;

/// The upper-triangular table of Lyubeznik numbers `λ_{p,i}`, `0 ≤ p ≤ i ≤ d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LyubeznikTable {
    d: usize,
    /// Full `(d+1) × (d+1)` matrix; entries below the diagonal stay zero.
    entries: Vec<Vec<u64>>,
}

impl LyubeznikTable {
    fn new(d: usize) -> Self {
        LyubeznikTable { d, entries: vec![vec![0; d + 1]; d + 1] }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn lambda(&self, p: usize, i: usize) -> u64 {
        self.entries[p][i]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn highest(&self) -> u64 {
        self.entries[self.d][self.d]
    }

    /// Only `λ_{d,d} = 1` is nonzero.
    pub fn is_trivial(&self) -> bool {
        if self.highest() != 1 {
            return false;
        }
        self.entries
            .iter()
            .enumerate()
            .all(|(p, row)| row.iter().enumerate().all(|(i, &v)| v == 0 || (p == self.d && i == self.d)))
    }

    /// `Σ (−1)^{p−i} λ_{p,i}` over the whole table.
    pub fn euler_sum(&self) -> i64 {
        let mut acc = 0i64;
        for p in 0..=self.d {
            for i in 0..=self.d {
                let v = self.entries[p][i] as i64;
                acc += if (p + i) % 2 == 0 { v } else { -v };
            }
        }
        acc
    }

    /// Paper-style triangular rendering: row `p` lists `λ_{p,p} .. λ_{p,d}`,
    /// indented under the first row, right-padded to the widest entry.
    pub fn to_text(&self) -> String {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for p in 0..=self.d {
            let indent = p * (width + 1);
            out.push_str(&" ".repeat(indent));
            let cells: Vec<String> =
                (p..=self.d).map(|i| format!("{:>width$}", self.entries[p][i])).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Outcome of one verified implication on one input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    #[serde(rename = "n/a")]
    NotApplicable,
}

/// Classification of `R/I`: predicates, deficiency profiles and the data
/// they are derived from.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub d: usize,
    pub depth: usize,
    pub is_cm: bool,
    pub is_seq_cm_hom: bool,
    pub is_seq_cm_duval: bool,
    pub is_ccm: bool,
    pub is_unmixed: bool,
    /// Profiles of `K^0(R/I) .. K^d(R/I)`.
    pub deficiency_profiles: Vec<ModuleProfile>,
    /// `{r : H^r_I(R) ≠ 0}`, computed as the nonvanishing Ext indices.
    pub lc_nonvanishing: BTreeSet<usize>,
    pub hh_components: usize,
}

/// Everything computed for one ideal over one field: the table, the
/// classification and the intermediate modules (kept for reuse and caching).
pub struct Analysis<F: Field> {
    pub ideal: SquarefreeIdeal,
    pub delta: SimplicialComplex,
    pub table: LyubeznikTable,
    pub classification: Classification,
    pub resolution: FreeResolution<F>,
    pub ext: Vec<SqfModule<F>>,
}

/// First-level homological data, injectable from a cache.
pub struct FirstLevel<F: Field> {
    pub resolution: FreeResolution<F>,
    pub ext: Vec<SqfModule<F>>,
}

pub fn analyze<F: Field>(ideal: &SquarefreeIdeal, f: &F) -> Result<Analysis<F>> {
    analyze_with(ideal, f, None)
}

/// Full analysis, optionally reusing precomputed first-level data.
pub fn analyze_with<F: Field>(
    ideal: &SquarefreeIdeal,
    f: &F,
    first: Option<FirstLevel<F>>,
) -> Result<Analysis<F>> {
    let n = ideal.n();
    if n > ENGINE_VERTEX_CAP {
        return Err(Error::ResourceBound(format!(
            "homological engine is capped at {ENGINE_VERTEX_CAP} vertices, input has {n}"
        )));
    }
    let delta = ideal.stanley_reisner_complex();
    let dim = delta.dim().ok_or(Error::VoidComplex)?;
    let d = (dim + 1) as usize;
    let hh_components = delta.hochster_huneke_components()?;

    let (resolution, ext) = match first {
        Some(fl) => (fl.resolution, fl.ext),
        None => {
            let m = SqfModule::quotient(f, ideal);
            let resolution = minimal_free_resolution(&m)?;
            let ext = ext_modules(&resolution)?;
            (resolution, ext)
        }
    };

    let lc_nonvanishing: BTreeSet<usize> =
        ext.iter().enumerate().filter(|(_, e)| !e.is_zero()).map(|(j, _)| j).collect();
    let min_ext = *lc_nonvanishing
        .iter()
        .next()
        .ok_or_else(|| Error::Invariant("R/I has no nonvanishing Ext".into()))?;
    let max_ext = *lc_nonvanishing.iter().next_back().unwrap();
    if min_ext != n - d {
        return Err(Error::Invariant(format!(
            "height cross-check failed: min nonvanishing Ext {min_ext} ≠ codim {}",
            n - d
        )));
    }
    let depth = n - max_ext;
    let is_cm = lc_nonvanishing.len() == 1;

    // Deficiency modules K^i = Ext^{n-i}(R/I, ω), their profiles, and the
    // table entries λ_{p,i} = dim Ext^{n-p}(K^i, ω)_∅ read off the dual
    // fiber of each second-level resolution at ∅.
    let mut table = LyubeznikTable::new(d);
    let mut deficiency_profiles = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let k_i = &ext[n - i];
        if k_i.is_zero() {
            deficiency_profiles.push(ModuleProfile::zero_module());
            continue;
        }
        let res_i = minimal_free_resolution(k_i)?;
        let nonvan = ext_nonvanishing(&res_i);
        let k_dim = k_i.krull_dim().unwrap();
        let k_min = *nonvan.iter().next().unwrap();
        let k_max = *nonvan.iter().next_back().unwrap();
        if k_dim != n - k_min {
            return Err(Error::Invariant(format!(
                "dimension cross-check failed for K^{i}: support {k_dim}, Ext {}",
                n - k_min
            )));
        }
        deficiency_profiles.push(ModuleProfile {
            is_zero: false,
            dim: Some(k_dim),
            depth: Some(n - k_max),
            is_cm: nonvan.len() == 1,
            nonvanishing_ext: nonvan,
        });

        let dual_at_origin = res_i.dual_fiber_complex(0)?;
        let dims = crate::chain::homology_dims(&dual_at_origin)?;
        let l = res_i.length();
        for (s, &h) in dims.iter().enumerate() {
            if h == 0 {
                continue;
            }
            let j = l - s;
            let p = n - j;
            if p > i {
                return Err(Error::Invariant(format!(
                    "λ_{{{p},{i}}} = {h} violates the vanishing above the diagonal"
                )));
            }
            table.entries[p][i] = h as u64;
        }
    }

    if table.highest() == 0 {
        return Err(Error::Invariant("λ_{d,d} vanishes".into()));
    }
    if table.euler_sum() != 1 {
        return Err(Error::Invariant(format!(
            "Euler characteristic of the table is {} instead of 1\n{}",
            table.euler_sum(),
            table.to_text()
        )));
    }
    if table.highest() != hh_components as u64 {
        return Err(Error::Invariant(format!(
            "λ_{{d,d}} = {} differs from the Hochster-Huneke count {}",
            table.highest(),
            hh_components
        )));
    }
    if deficiency_profiles[d].is_zero {
        return Err(Error::Invariant("canonical module K^d vanishes".into()));
    }

    let is_seq_cm_hom =
        (0..=d).all(|i| deficiency_profiles[i].is_zero_or_cm_of_dim(i));
    let is_seq_cm_duval = seq_cm_by_skeleta(&delta, f)?;
    let is_ccm = deficiency_profiles[d].is_cm && deficiency_profiles[d].dim == Some(d);
    let is_unmixed = delta.is_pure();

    // Structural implications between the predicates themselves.
    if is_cm && !is_seq_cm_hom {
        return Err(Error::Invariant("CM ring classified as not sequentially CM".into()));
    }
    if is_seq_cm_hom && !is_ccm {
        return Err(Error::Invariant("sequentially CM ring classified as not CCM".into()));
    }

    let classification = Classification {
        d,
        depth,
        is_cm,
        is_seq_cm_hom,
        is_seq_cm_duval,
        is_ccm,
        is_unmixed,
        deficiency_profiles,
        lc_nonvanishing,
        hh_components,
    };

    Ok(Analysis { ideal: ideal.clone(), delta, table, classification, resolution, ext })
}

/// Sequential Cohen-Macaulayness by the skeleton criterion: every pure
/// `i`-skeleton passes the Reisner test, `0 ≤ i ≤ dim Δ`.
pub fn seq_cm_by_skeleta<F: Field>(delta: &SimplicialComplex, f: &F) -> Result<bool> {
    let dim = delta.dim().ok_or(Error::VoidComplex)?;
    for i in 0..=dim {
        if !is_cohen_macaulay(&delta.pure_skeleton(i)?, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Lyubeznik table of `R/I` over the given field.
pub fn lyubeznik_table<F: Field>(ideal: &SquarefreeIdeal, f: &F) -> Result<LyubeznikTable> {
    Ok(analyze(ideal, f)?.table)
}

/// Profiles of the deficiency modules `K^0(R/I) .. K^d(R/I)`.
pub fn deficiency_profile<F: Field>(ideal: &SquarefreeIdeal, f: &F) -> Result<Vec<ModuleProfile>> {
    Ok(analyze(ideal, f)?.classification.deficiency_profiles)
}

/// Is every `K^i(R/I)` zero or Cohen-Macaulay of dimension `i`?
pub fn is_seq_cm_homological<F: Field>(ideal: &SquarefreeIdeal, f: &F) -> Result<bool> {
    Ok(analyze(ideal, f)?.classification.is_seq_cm_hom)
}

/// The independent combinatorial sequential-CM oracle.
pub fn is_seq_cm_duval<F: Field>(ideal: &SquarefreeIdeal, f: &F) -> Result<bool> {
    seq_cm_by_skeleta(&ideal.stanley_reisner_complex(), f)
}

/// Is the canonical module `K^d(R/I)` Cohen-Macaulay of dimension `d`?
pub fn is_ccm<F: Field>(ideal: &SquarefreeIdeal, f: &F) -> Result<bool> {
    Ok(analyze(ideal, f)?.classification.is_ccm)
}

/// `{r : H^r_I(R) ≠ 0}`; for squarefree monomial ideals this is the set of
/// nonvanishing `Ext^r(R/I, ω)`.
pub fn local_cohomology_nonvanishing<F: Field>(
    ideal: &SquarefreeIdeal,
    f: &F,
) -> Result<BTreeSet<usize>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("local_cohomology_nonvanishing"));
    }
    Ok(analyze(ideal, f)?.classification.lc_nonvanishing)
}

/// Names of the verified implications, in report order.
pub const CHECK_NAMES: [&str; 7] = [
    "euler_characteristic_is_one",
    "highest_lambda_equals_hh_components",
    "seq_cm_oracles_agree",
    "seq_cm_implies_trivial_table",
    "cm_implies_trivial_table",
    "ccm_implies_column_vanishing",
    "unmixed_depth_implies_superdiagonal_shape",
];

/// Evaluate every applicable implication for an analysis. Any failure is a
/// hard error carrying a full state dump; it cannot be distinguished from a
/// genuine counterexample mechanically, so both abort the run.
pub fn verify(analysis: &Analysis<impl Field>) -> Result<BTreeMap<&'static str, CheckOutcome>> {
    let t = &analysis.table;
    let c = &analysis.classification;
    let d = c.d;
    let mut checks = BTreeMap::new();
    let fail = |name: &str| -> Error {
        Error::ImplicationFailed(format!(
            "{name} failed for {}\nd = {d}\ntable:\n{}\nclassification: {:?}",
            crate::input::canonical_json(&analysis.ideal),
            t.to_text(),
            c
        ))
    };

    checks.insert(CHECK_NAMES[0], CheckOutcome::Pass);
    if t.euler_sum() != 1 {
        return Err(fail(CHECK_NAMES[0]));
    }
    checks.insert(CHECK_NAMES[1], CheckOutcome::Pass);
    if t.highest() != c.hh_components as u64 {
        return Err(fail(CHECK_NAMES[1]));
    }
    checks.insert(CHECK_NAMES[2], CheckOutcome::Pass);
    if c.is_seq_cm_hom != c.is_seq_cm_duval {
        return Err(fail(CHECK_NAMES[2]));
    }

    if c.is_seq_cm_hom {
        checks.insert(CHECK_NAMES[3], CheckOutcome::Pass);
        if !t.is_trivial() {
            return Err(fail(CHECK_NAMES[3]));
        }
    } else {
        checks.insert(CHECK_NAMES[3], CheckOutcome::NotApplicable);
    }

    if c.is_cm {
        checks.insert(CHECK_NAMES[4], CheckOutcome::Pass);
        if !t.is_trivial() || t.highest() != 1 {
            return Err(fail(CHECK_NAMES[4]));
        }
    } else {
        checks.insert(CHECK_NAMES[4], CheckOutcome::NotApplicable);
    }

    if c.is_ccm {
        checks.insert(CHECK_NAMES[5], CheckOutcome::Pass);
        if (0..d).any(|i| t.lambda(i, d) != 0) {
            return Err(fail(CHECK_NAMES[5]));
        }
    } else {
        checks.insert(CHECK_NAMES[5], CheckOutcome::NotApplicable);
    }

    let depth_hypothesis = (0..d).all(|i| match c.deficiency_profiles[i].depth {
        None => true,
        Some(dep) => dep + 1 >= i,
    });
    if c.is_unmixed && depth_hypothesis {
        checks.insert(CHECK_NAMES[6], CheckOutcome::Pass);
        let mut superdiagonal_sum = 0u64;
        for p in 0..=d {
            for i in p..=d {
                let v = t.lambda(p, i);
                if v == 0 {
                    continue;
                }
                let on_superdiagonal = i == p + 1 && i <= d - 1;
                let at_corner = p == d && i == d;
                if !(on_superdiagonal || at_corner) {
                    return Err(fail(CHECK_NAMES[6]));
                }
                if on_superdiagonal {
                    superdiagonal_sum += v;
                }
            }
        }
        if superdiagonal_sum != t.highest() - 1 {
            return Err(fail(CHECK_NAMES[6]));
        }
    } else {
        checks.insert(CHECK_NAMES[6], CheckOutcome::NotApplicable);
    }

    Ok(checks)
}

/// One-shot classification with the verification report.
pub fn classify_and_verify<F: Field>(
    ideal: &SquarefreeIdeal,
    f: &F,
) -> Result<(Analysis<F>, BTreeMap<&'static str, CheckOutcome>)> {
    let analysis = analyze(ideal, f)?;
    let checks = verify(&analysis)?;
    Ok((analysis, checks))
}
