//! Reduced simplicial homology over an exact field, and the Reisner test
//! for Cohen-Macaulayness of a complex.

use crate::chain::{homology_dims, ChainComplexVS};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;
use crate::subsets::{self, Mask};

/// Reduced homology dimensions of a complex; index `0` holds `H̃_{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    dims: Vec<usize>,
}

impl ReducedHomology {
    /// `dim H̃_i`; zero outside the stored range.
    pub fn betti(&self, i: isize) -> usize {
        let idx = i + 1;
        if idx < 0 || idx as usize >= self.dims.len() {
            0
        } else {
            self.dims[idx as usize]
        }
    }

    /// Dimensions `[H̃_{-1}, H̃_0, ..., H̃_dim]`.
    pub fn all(&self) -> &[usize] {
        &self.dims
    }
}

/// Dimensions of reduced homology `H̃_i(Δ; k)` for `-1 ≤ i ≤ dim Δ`.
///
/// The augmented chain complex includes the empty face in degree `-1`;
/// boundary signs come from the position of the dropped vertex in the
/// ascending vertex order. The void complex is rejected; `{∅}` has
/// `H̃_{-1} = k`.
pub fn reduced_homology<F: Field>(delta: &SimplicialComplex, f: &F) -> Result<ReducedHomology> {
    let dim = delta.dim().ok_or(Error::VoidComplex)?;
    // chain degree t holds faces of dimension t-1 (t = 0 is the empty face)
    let top = (dim + 1) as usize;
    let mut bases: Vec<Vec<Mask>> = Vec::with_capacity(top + 1);
    for t in 0..=top {
        bases.push(delta.faces_of_dim(t as isize - 1));
    }
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let mut diffs = Vec::with_capacity(top);
    for t in 1..=top {
        diffs.push(boundary_matrix(f, &bases[t], &bases[t - 1]));
    }
    let complex = ChainComplexVS::new(f, dims, diffs)?;
    Ok(ReducedHomology { dims: homology_dims(&complex)? })
}

/// Boundary matrix from faces of one dimension to the next one down, with
/// the sign `(-1)^j` for dropping the `j`-th smallest vertex.
fn boundary_matrix<F: Field>(f: &F, sources: &[Mask], targets: &[Mask]) -> Mat<F> {
    let index_of = |m: Mask| targets.binary_search_by(|&t| subsets::card_lex(t, m)).ok();
    let mut mat = Mat::zero(f, targets.len(), sources.len());
    for (c, &s) in sources.iter().enumerate() {
        for (j, v) in subsets::bits(s).enumerate() {
            let face = s & !subsets::bit(v);
            let r = index_of(face).expect("faces are closed under deletion");
            let sign = if j % 2 == 0 { f.one() } else { f.neg(&f.one()) };
            mat.set(r, c, sign);
        }
    }
    mat
}

/// Reisner criterion: `Δ` is Cohen-Macaulay over `k` iff every link (the
/// complex itself included, as the link of `∅`) has vanishing reduced
/// homology below its own dimension.
pub fn is_cohen_macaulay<F: Field>(delta: &SimplicialComplex, f: &F) -> Result<bool> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    for face in delta.all_faces() {
        let link = delta.link(face)?;
        let link_dim = link.dim().expect("links of faces are non-void");
        let h = reduced_homology(&link, f)?;
        for i in -1..link_dim {
            if h.betti(i) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
