//! `Ext` modules against the canonical module, with full squarefree-module
//! structure.
//!
//! From a minimal free resolution `P_•` of `M`, the fiber of
//! `Ext^j(M, ω)` at a subset degree `G` is the degree-`j` cohomology of the
//! dual complex whose step-`t` space is spanned by the step-`t` generators
//! of degree containing the complement of `G`, with transposed scalar
//! differentials. Multiplication maps are induced on cohomology by the
//! basis-inclusion chain maps, transported through the chosen
//! representatives and projections.

use crate::chain::{homology_dims, homology_with_projection, HomologyFiber};
use crate::error::Result;
use crate::field::Field;
use crate::matrix::Mat;
use crate::resolution::FreeResolution;
use crate::sqmod::SqfModule;
use crate::subsets::{self, Mask};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// All `Ext^j(M, ω)` for `j = 0..=n`, as squarefree modules.
pub fn ext_modules<F: Field>(res: &FreeResolution<F>) -> Result<Vec<SqfModule<F>>> {
    let f = res.field().clone();
    let n = res.n();
    let l = res.length();
    let size = 1u32 << n;

    // Cohomology fibers with projections at every degree; keep a degree's
    // fibers only when something is nonzero there.
    let per_degree: Vec<Option<Vec<HomologyFiber<F>>>> = (0..size)
        .into_par_iter()
        .map(|deg| {
            let complex = res.dual_fiber_complex(deg)?;
            let fibers = homology_with_projection(&complex)?;
            if fibers.iter().all(|h| h.dim == 0) {
                Ok(None)
            } else {
                Ok(Some(fibers))
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let fiber_of = |deg: Mask, j: usize| -> Option<&HomologyFiber<F>> {
        per_degree[deg as usize].as_ref().and_then(|fibers| {
            let s = l.checked_sub(j)?;
            let h = &fibers[s];
            if h.dim > 0 {
                Some(h)
            } else {
                None
            }
        })
    };

    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut comps: BTreeMap<Mask, usize> = BTreeMap::new();
        for deg in 0..size {
            if let Some(h) = fiber_of(deg, j) {
                comps.insert(deg, h.dim);
            }
        }
        // Induced multiplication maps: pad a representative cycle into the
        // larger coactive basis, then project at the target degree.
        let keys: Vec<(Mask, u32)> = comps
            .keys()
            .flat_map(|&deg| {
                (0..n as u32)
                    .filter(move |&v| deg & subsets::bit(v as usize) == 0)
                    .map(move |v| (deg, v))
            })
            .filter(|&(deg, v)| comps.contains_key(&(deg | subsets::bit(v as usize))))
            .collect();
        let maps: Vec<((Mask, u32), Mat<F>)> = keys
            .par_iter()
            .map(|&(deg, v)| {
                let target_deg = deg | subsets::bit(v as usize);
                let source = fiber_of(deg, j).expect("source fiber present");
                let target = fiber_of(target_deg, j).expect("target fiber present");
                let src_idx = res.coactive(j, deg);
                let tgt_idx = res.coactive(j, target_deg);
                let embed: Vec<usize> = src_idx
                    .iter()
                    .map(|gi| tgt_idx.binary_search(gi).expect("coactive sets are nested"))
                    .collect();
                let mut padded = Mat::zero(&f, tgt_idx.len(), source.dim);
                for c in 0..source.dim {
                    for (r0, &pos) in embed.iter().enumerate() {
                        padded.set(pos, c, source.reps.at(r0, c).clone());
                    }
                }
                let mat = target.project_cycles(&padded)?;
                Ok(((deg, v), mat))
            })
            .collect::<Result<Vec<_>>>()?;
        let mult: BTreeMap<(Mask, u32), Mat<F>> = maps.into_iter().collect();
        out.push(SqfModule::new(&f, n, comps, mult)?);
    }
    Ok(out)
}

/// The set of `j` with `Ext^j(M, ω) ≠ 0`, from fiber dimensions only.
pub fn ext_nonvanishing<F: Field>(res: &FreeResolution<F>) -> std::collections::BTreeSet<usize> {
    let n = res.n();
    let l = res.length();
    let size = 1u32 << n;
    let per_degree: Vec<Vec<usize>> = (0..size)
        .into_par_iter()
        .map(|deg| {
            let complex = res.dual_fiber_complex(deg).expect("dual fiber complex is well formed");
            homology_dims(&complex).expect("transposed differentials still compose to zero")
        })
        .collect();
    let mut out = std::collections::BTreeSet::new();
    for dims in &per_degree {
        for (s, &h) in dims.iter().enumerate() {
            if h > 0 {
                out.insert(l - s);
            }
        }
    }
    out
}

/// Per-degree Euler characteristic consistency: the alternating sum of the
/// dual-complex fiber dimensions equals `Σ_j (−1)^j dim Ext^j_deg`.
pub fn euler_consistency_at<F: Field>(
    res: &FreeResolution<F>,
    ext: &[SqfModule<F>],
    deg: Mask,
) -> bool {
    let l = res.length();
    let complex = match res.dual_fiber_complex(deg) {
        Ok(c) => c,
        Err(_) => return false,
    };
    // chain degree s holds cochain degree l - s
    let chi_spaces: i64 = complex
        .dims
        .iter()
        .enumerate()
        .map(|(s, &d)| {
            let j = l - s;
            if j % 2 == 0 {
                d as i64
            } else {
                -(d as i64)
            }
        })
        .sum();
    let chi_ext: i64 = ext
        .iter()
        .enumerate()
        .map(|(j, e)| {
            let d = e.dim_at(deg) as i64;
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .sum();
    chi_spaces == chi_ext
}
