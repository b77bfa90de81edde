//! Chain complexes of finite vector spaces and their homology, with chosen
//! cycle representatives and projection maps.
//!
//! The projection data is what lets induced maps be transported through
//! homology: lift a class to its representative, map it by a chain map, and
//! project the resulting cycle back to class coordinates.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Mat, SpanTracker};

/// A chain complex `C_0 ← C_1 ← ... ← C_L` with `d[t]: C_{t+1} → C_t`.
#[derive(Clone, Debug)]
pub struct ChainComplexVS<F: Field> {
    f: F,
    pub dims: Vec<usize>,
    pub d: Vec<Mat<F>>,
}

impl<F: Field> ChainComplexVS<F> {
    pub fn new(f: &F, dims: Vec<usize>, d: Vec<Mat<F>>) -> Result<Self> {
        if dims.is_empty() || d.len() + 1 != dims.len() {
            return Err(Error::Invariant("chain complex: differential count mismatch".into()));
        }
        for (t, m) in d.iter().enumerate() {
            if m.rows() != dims[t] || m.cols() != dims[t + 1] {
                return Err(Error::Invariant(format!("chain complex: d_{} has wrong shape", t + 1)));
            }
        }
        Ok(ChainComplexVS { f: f.clone(), dims, d })
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    fn check_dd_zero(&self) -> Result<()> {
        for t in 0..self.d.len().saturating_sub(1) {
            if !self.d[t].mul(&self.d[t + 1]).is_zero() {
                return Err(Error::Invariant(format!(
                    "chain complex: d_{} ∘ d_{} ≠ 0",
                    t + 1,
                    t + 2
                )));
            }
        }
        Ok(())
    }

    /// Euler characteristic `Σ (−1)^t dim C_t`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(t, &n)| if t % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }
}

/// Homology of one degree: dimension, representative cycles (columns in
/// ambient chain coordinates) and the projection solver.
#[derive(Clone, Debug)]
pub struct HomologyFiber<F: Field> {
    pub dim: usize,
    /// Representative cycles, `ambient_dim × dim`.
    pub reps: Mat<F>,
    /// Stacked `[image basis | reps]`; classes of cycles are read off by
    /// solving against it and keeping the trailing coordinates.
    solver: Mat<F>,
    boundary_rank: usize,
}

impl<F: Field> HomologyFiber<F> {
    /// Project cycles (columns, ambient coordinates) to coordinates in the
    /// chosen homology basis. Errors if a column is not a cycle mod
    /// boundaries, which indicates a chain-map bug upstream.
    pub fn project_cycles(&self, cycles: &Mat<F>) -> Result<Mat<F>> {
        if self.dim == 0 && self.boundary_rank == 0 {
            return Ok(Mat::zero(cycles.field(), 0, cycles.cols()));
        }
        let x = self
            .solver
            .solve(cycles)
            .ok_or_else(|| Error::Invariant("projection target is not a cycle class".into()))?;
        let rows: Vec<usize> = (self.boundary_rank..self.boundary_rank + self.dim).collect();
        let cols: Vec<usize> = (0..cycles.cols()).collect();
        Ok(x.select(&rows, &cols))
    }
}

/// Homology in every degree, with representatives and projections.
///
/// Representatives are the deterministic extension of the boundary image
/// basis to a basis of the cycle space; projection solves against the
/// stacked `[image | representatives]` matrix.
pub fn homology_with_projection<F: Field>(c: &ChainComplexVS<F>) -> Result<Vec<HomologyFiber<F>>> {
    c.check_dd_zero()?;
    let f = &c.f;
    let l = c.len();
    let mut out = Vec::with_capacity(l);
    for t in 0..l {
        let ambient = c.dims[t];
        // cycles: ker d_t (everything when t = 0)
        let cycles = if t == 0 { Mat::identity(f, ambient) } else { c.d[t - 1].kernel_basis() };
        // boundaries: im d_{t+1}
        let image =
            if t < c.d.len() { c.d[t].image_basis() } else { Mat::zero(f, ambient, 0) };
        let boundary_rank = image.cols();
        // extend the image basis to a basis of the cycle space
        let mut tracker = SpanTracker::new(f, ambient);
        for j in 0..image.cols() {
            let grew = tracker.insert(&image.col(j));
            debug_assert!(grew, "image basis columns must be independent");
        }
        let mut rep_cols = Vec::new();
        for j in 0..cycles.cols() {
            if tracker.insert(&cycles.col(j)) {
                rep_cols.push(cycles.col(j));
            }
        }
        let reps = Mat::from_cols(f, ambient, rep_cols);
        let solver = image.hstack(&reps);
        out.push(HomologyFiber { dim: reps.cols(), reps, solver, boundary_rank });
    }
    Ok(out)
}

/// Homology dimensions only, by rank-nullity; no representatives.
pub fn homology_dims<F: Field>(c: &ChainComplexVS<F>) -> Result<Vec<usize>> {
    c.check_dd_zero()?;
    let l = c.len();
    let ranks: Vec<usize> = c.d.iter().map(Mat::rank).collect();
    let mut out = Vec::with_capacity(l);
    for t in 0..l {
        let rank_in = if t < ranks.len() { ranks[t] } else { 0 };
        let rank_out = if t == 0 { 0 } else { ranks[t - 1] };
        out.push(c.dims[t] - rank_in - rank_out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn complex(dims: Vec<usize>, mats: Vec<Mat<Rationals>>) -> ChainComplexVS<Rationals> {
        ChainComplexVS::new(&Rationals, dims, mats).unwrap()
    }

    #[test]
    fn identity_map_has_no_homology() {
        let f = Rationals;
        let c = complex(vec![1, 1], vec![Mat::identity(&f, 1)]);
        let dims = homology_dims(&c).unwrap();
        assert_eq!(dims, vec![0, 0]);
    }

    #[test]
    fn zero_map_has_full_homology() {
        let f = Rationals;
        let c = complex(vec![1, 1], vec![Mat::zero(&f, 1, 1)]);
        assert_eq!(homology_dims(&c).unwrap(), vec![1, 1]);
        let fibers = homology_with_projection(&c).unwrap();
        assert_eq!(fibers[0].dim, 1);
        assert_eq!(fibers[1].dim, 1);
    }

    #[test]
    fn hollow_triangle_chain_complex() {
        // C_0 = k^3 (vertices), C_1 = k^3 (edges 12, 13, 23), boundary with signs.
        let f = Rationals;
        let d1 = Mat::from_i64_rows(&f, &[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]]);
        let c = complex(vec![3, 3], vec![d1]);
        // unreduced homology: H_0 = k, H_1 = k
        assert_eq!(homology_dims(&c).unwrap(), vec![1, 1]);
    }

    #[test]
    fn dd_nonzero_is_rejected() {
        let f = Rationals;
        let id = Mat::identity(&f, 1);
        let c = ChainComplexVS::new(&f, vec![1, 1, 1], vec![id.clone(), id]).unwrap();
        assert!(homology_dims(&c).is_err());
        assert!(homology_with_projection(&c).is_err());
    }

    #[test]
    fn euler_characteristic_equals_alternating_homology_sum() {
        let f = Rationals;
        let d1 = Mat::from_i64_rows(&f, &[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]]);
        let c = complex(vec![3, 3], vec![d1]);
        let hs = homology_dims(&c).unwrap();
        let alt: i64 =
            hs.iter().enumerate().map(|(t, &h)| if t % 2 == 0 { h as i64 } else { -(h as i64) }).sum();
        assert_eq!(alt, c.euler_characteristic());
    }

    #[test]
    fn projection_identifies_class_of_shifted_cycle() {
        let f = Rationals;
        let d1 = Mat::from_i64_rows(&f, &[&[0, 0], &[0, 0]]);
        let d2 = Mat::from_i64_rows(&f, &[&[1], &[0]]);
        let c = complex(vec![2, 2, 1], vec![d1, d2]);
        let fibers = homology_with_projection(&c).unwrap();
        // H_1 = ker(0)/im(d2) = k^2 / span(e1) = k
        assert_eq!(fibers[1].dim, 1);
        // the class of e1 is zero, the class of e1 + e2 equals the class of e2
        let e1 = Mat::from_i64_rows(&f, &[&[1], &[0]]);
        let z = fibers[1].project_cycles(&e1).unwrap();
        assert!(z.is_zero());
        let e12 = Mat::from_i64_rows(&f, &[&[1], &[1]]);
        let e2 = Mat::from_i64_rows(&f, &[&[0], &[1]]);
        let c1 = fibers[1].project_cycles(&e12).unwrap();
        let c2 = fibers[1].project_cycles(&e2).unwrap();
        assert_eq!(c1, c2);
    }
}
