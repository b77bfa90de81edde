//! Minimal multigraded free resolutions of squarefree modules.
//!
//! Free modules are recorded as lists of generator degrees (subsets);
//! differentials as scalar matrices where the entry from a step-`t`
//! generator of degree `F'` to a step-`t-1` generator of degree `F` stands
//! for `c · x^{F'∖F}` and can be nonzero only if `F ⊆ F'`. Minimal covers
//! are found directly degree by degree in (cardinality, lex) order; at each
//! degree the new generators are a complement of the span of everything
//! arriving from below, so minimality (no nonzero entry between generators
//! of equal degree) holds by construction and is re-checked.

use crate::chain::ChainComplexVS;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Mat, SpanTracker};
use crate::sqmod::SqfModule;
use crate::subsets::{self, Mask};
use rayon::prelude::*;
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct FreeResolution<F: Field> {
    f: F,
    n: usize,
    /// Generator degrees per homological step.
    pub steps: Vec<Vec<Mask>>,
    /// `diffs[t]` is the scalar matrix of `P_{t+1} → P_t`.
    pub diffs: Vec<Mat<F>>,
}

impl<F: Field> FreeResolution<F> {
    /// Reassemble from serialized parts; validates shapes, degree
    /// containment, minimality and `d² = 0`.
    pub fn from_parts(f: &F, n: usize, steps: Vec<Vec<Mask>>, diffs: Vec<Mat<F>>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Invariant("resolution needs at least one step".into()));
        }
        let res = FreeResolution { f: f.clone(), n, steps, diffs };
        res.validate()?;
        Ok(res)
    }

    pub fn field(&self) -> &F {
        &self.f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Homological length (index of the last step).
    pub fn length(&self) -> usize {
        self.steps.len() - 1
    }

    /// Total Betti numbers per step.
    pub fn betti_total(&self) -> Vec<usize> {
        self.steps.iter().map(Vec::len).collect()
    }

    /// Graded Betti number: generators of degree `deg` in step `t`.
    pub fn betti(&self, t: usize, deg: Mask) -> usize {
        self.steps.get(t).map_or(0, |s| s.iter().filter(|&&g| g == deg).count())
    }

    /// Indices of step-`t` generators with degree contained in `deg`:
    /// the basis of the evaluation of `P_t` at that subset degree.
    pub fn active(&self, t: usize, deg: Mask) -> Vec<usize> {
        self.steps[t]
            .iter()
            .enumerate()
            .filter(|(_, &g)| subsets::contains(deg, g))
            .map(|(i, _)| i)
            .collect()
    }

    /// Indices of step-`t` generators with degree containing the complement
    /// of `deg`: the basis of the dual complex fiber at `deg`.
    pub fn coactive(&self, t: usize, deg: Mask) -> Vec<usize> {
        let needed = subsets::full_mask(self.n) & !deg;
        self.steps[t]
            .iter()
            .enumerate()
            .filter(|(_, &g)| subsets::contains(g, needed))
            .map(|(i, _)| i)
            .collect()
    }

    /// Fiber of the map `P_{t+1} → P_t` at a subset degree.
    pub fn map_fiber(&self, t: usize, deg: Mask) -> Mat<F> {
        self.diffs[t].select(&self.active(t, deg), &self.active(t + 1, deg))
    }

    /// Evaluation of the whole resolution at a subset degree, as a chain
    /// complex `P_0(deg) ← P_1(deg) ← ...`.
    pub fn evaluation_at(&self, deg: Mask) -> Result<ChainComplexVS<F>> {
        let dims: Vec<usize> = (0..self.steps.len()).map(|t| self.active(t, deg).len()).collect();
        let d: Vec<Mat<F>> = (0..self.diffs.len()).map(|t| self.map_fiber(t, deg)).collect();
        ChainComplexVS::new(&self.f, dims, d)
    }

    /// The fiber of `Hom(P_•, ω)` at a subset degree, wrapped as a chain
    /// complex by reversing: chain degree `s` holds dual cochain degree
    /// `L - s`, so `H_s(chain) = H^{L-s}(dual)`. Differentials are the
    /// restricted transposes of the scalar matrices (no extra signs).
    pub fn dual_fiber_complex(&self, deg: Mask) -> Result<ChainComplexVS<F>> {
        let l = self.length();
        let coact: Vec<Vec<usize>> = (0..=l).map(|t| self.coactive(t, deg)).collect();
        let dims: Vec<usize> = (0..=l).map(|s| coact[l - s].len()).collect();
        let mut d = Vec::with_capacity(l);
        for s in 1..=l {
            // chain map C_s → C_{s-1} is the dual map D^{l-s} → D^{l-s+1}
            let t = l - s;
            let fiber = self.diffs[t].select(&coact[t], &coact[t + 1]).transpose();
            d.push(fiber);
        }
        ChainComplexVS::new(&self.f, dims, d)
    }

    /// Check `d² = 0` and minimality of every differential.
    pub fn validate(&self) -> Result<()> {
        for t in 0..self.diffs.len() {
            let m = &self.diffs[t];
            if m.rows() != self.steps[t].len() || m.cols() != self.steps[t + 1].len() {
                return Err(Error::Invariant("differential shape mismatch".into()));
            }
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if self.f.is_zero(m.at(r, c)) {
                        continue;
                    }
                    let (lo, hi) = (self.steps[t][r], self.steps[t + 1][c]);
                    if !subsets::contains(hi, lo) {
                        return Err(Error::Invariant(
                            "differential entry violates degree containment".into(),
                        ));
                    }
                    if lo == hi {
                        return Err(Error::Invariant(
                            "nonzero entry between generators of equal degree".into(),
                        ));
                    }
                }
            }
        }
        for t in 0..self.diffs.len().saturating_sub(1) {
            if !self.diffs[t].mul(&self.diffs[t + 1]).is_zero() {
                return Err(Error::Invariant("d ∘ d ≠ 0 in resolution".into()));
            }
        }
        if self.steps.len() > self.n + 1 {
            return Err(Error::Invariant("resolution longer than the variable count".into()));
        }
        Ok(())
    }
}

/// Minimal multigraded free resolution of a squarefree module.
pub fn minimal_free_resolution<F: Field>(m: &SqfModule<F>) -> Result<FreeResolution<F>> {
    let f = m.field().clone();
    let n = m.n();
    if cfg!(debug_assertions) {
        m.check_commutativity()?;
    }
    if m.is_zero() {
        return Ok(FreeResolution { f, n, steps: vec![Vec::new()], diffs: Vec::new() });
    }
    let degrees = subsets::all_subsets_card_lex(n);

    // Step 0: minimal generators. At each degree, extend the span of the
    // images arriving from one variable below by unit vectors.
    let mut gens0: Vec<Mask> = Vec::new();
    let mut lifts: Vec<Vec<F::Elem>> = Vec::new();
    for &deg in &degrees {
        let dm = m.dim_at(deg);
        if dm == 0 {
            continue;
        }
        let mut tracker = SpanTracker::new(&f, dm);
        for v in subsets::bits(deg) {
            let arriving = m.mult_at(deg & !subsets::bit(v), v as u32);
            for c in 0..arriving.cols() {
                tracker.insert(&arriving.col(c));
            }
        }
        for i in 0..dm {
            let mut e = vec![f.zero(); dm];
            e[i] = f.one();
            if tracker.insert(&e) {
                gens0.push(deg);
                lifts.push(e);
            }
        }
    }

    let mut res = FreeResolution { f: f.clone(), n, steps: vec![gens0], diffs: Vec::new() };

    // Kernel fibers of the augmentation P_0 → M.
    let mut kernels: BTreeMap<Mask, Mat<F>> = degrees
        .par_iter()
        .filter_map(|&deg| {
            let act = res.active(0, deg);
            if act.is_empty() {
                return None;
            }
            let cols: Vec<Vec<F::Elem>> = act
                .iter()
                .map(|&g| m.transport(res.steps[0][g], deg).apply(&lifts[g]))
                .collect();
            let aug = Mat::from_cols(&f, m.dim_at(deg), cols);
            let k = aug.kernel_basis();
            if k.cols() == 0 {
                None
            } else {
                Some((deg, k))
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();

    while !kernels.is_empty() {
        let t = res.steps.len();
        if t > n {
            return Err(Error::Invariant("resolution exceeded the variable count".into()));
        }
        let prev = &res.steps[t - 1];

        // Minimal generators of the kernel: scan degrees in (card, lex)
        // order, extending the span of kernels padded up from one variable
        // below by the kernel basis columns at this degree.
        let mut new_gens: Vec<Mask> = Vec::new();
        let mut new_cols: Vec<(Mask, Vec<F::Elem>)> = Vec::new();
        for &deg in &degrees {
            let Some(kmat) = kernels.get(&deg) else { continue };
            let act = res.active(t - 1, deg);
            let mut tracker = SpanTracker::new(&f, act.len());
            for v in subsets::bits(deg) {
                let sub = deg & !subsets::bit(v);
                let Some(ksub) = kernels.get(&sub) else { continue };
                let act_sub = res.active(t - 1, sub);
                // positions of the smaller active set inside the larger one
                let embed: Vec<usize> = act_sub
                    .iter()
                    .map(|gi| act.binary_search(gi).expect("active sets are nested"))
                    .collect();
                for c in 0..ksub.cols() {
                    let mut w = vec![f.zero(); act.len()];
                    for (r0, &pos) in embed.iter().enumerate() {
                        w[pos] = ksub.at(r0, c).clone();
                    }
                    tracker.insert(&w);
                }
            }
            for c in 0..kmat.cols() {
                let col = kmat.col(c);
                if tracker.insert(&col) {
                    new_gens.push(deg);
                    new_cols.push((deg, col));
                }
            }
        }
        if new_gens.is_empty() {
            return Err(Error::Invariant("nonzero kernel without minimal generators".into()));
        }

        let mut dmat = Mat::zero(&f, prev.len(), new_gens.len());
        for (c, (deg, col)) in new_cols.iter().enumerate() {
            let act = res.active(t - 1, *deg);
            for (r0, &gi) in act.iter().enumerate() {
                dmat.set(gi, c, col[r0].clone());
            }
        }
        res.steps.push(new_gens);
        res.diffs.push(dmat);

        kernels = degrees
            .par_iter()
            .filter_map(|&deg| {
                let act_new = res.active(t, deg);
                if act_new.is_empty() {
                    return None;
                }
                let fiber = res.map_fiber(t - 1, deg);
                let k = fiber.kernel_basis();
                if k.cols() == 0 {
                    None
                } else {
                    Some((deg, k))
                }
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
    }

    debug_assert!(res.validate().is_ok());
    Ok(res)
}
