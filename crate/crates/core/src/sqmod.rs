//! Squarefree modules: finite families of vector spaces indexed by subsets
//! of `{1..n}` with compatible multiplication maps.
//!
//! These carry `R/I`, every `Ext` module computed against the canonical
//! module, and all intermediate objects of the resolution engine. The
//! commutativity of the multiplication squares is checkable on any stored
//! module and is what makes composite multiplication paths well defined.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::SquarefreeIdeal;
use crate::matrix::Mat;
use crate::subsets::{self, Mask};
use std::collections::BTreeMap;

/// A squarefree module: nonzero fiber dimensions indexed by subsets, plus a
/// multiplication map `m_{F,j}: M_F → M_{F∪j}` for every `j ∉ F` with both
/// fibers nonzero (absent maps are zero maps).
#[derive(Clone, Debug)]
pub struct SqfModule<F: Field> {
    f: F,
    n: usize,
    comps: BTreeMap<Mask, usize>,
    mult: BTreeMap<(Mask, u32), Mat<F>>,
}

impl<F: Field> SqfModule<F> {
    pub fn new(
        f: &F,
        n: usize,
        comps: BTreeMap<Mask, usize>,
        mult: BTreeMap<(Mask, u32), Mat<F>>,
    ) -> Result<Self> {
        let m = SqfModule { f: f.clone(), n, comps, mult };
        m.validate()?;
        Ok(m)
    }

    pub fn zero(f: &F, n: usize) -> Self {
        SqfModule { f: f.clone(), n, comps: BTreeMap::new(), mult: BTreeMap::new() }
    }

    pub fn field(&self) -> &F {
        &self.f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim_at(&self, deg: Mask) -> usize {
        self.comps.get(&deg).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Degrees with nonzero fiber, in ascending mask order.
    pub fn support(&self) -> impl Iterator<Item = Mask> + '_ {
        self.comps.keys().copied()
    }

    pub fn components(&self) -> &BTreeMap<Mask, usize> {
        &self.comps
    }

    pub fn mult_entries(&self) -> &BTreeMap<(Mask, u32), Mat<F>> {
        &self.mult
    }

    /// Krull dimension: largest support cardinality, `None` for zero.
    pub fn krull_dim(&self) -> Option<usize> {
        self.comps.keys().map(|&m| subsets::card(m)).max()
    }

    pub fn total_dim(&self) -> usize {
        self.comps.values().sum()
    }

    /// The map `M_deg → M_{deg ∪ j}`, materialized as a zero matrix when it
    /// is not stored.
    pub fn mult_at(&self, deg: Mask, j: u32) -> Mat<F> {
        debug_assert_eq!(deg & subsets::bit(j as usize), 0);
        match self.mult.get(&(deg, j)) {
            Some(m) => m.clone(),
            None => Mat::zero(
                &self.f,
                self.dim_at(deg | subsets::bit(j as usize)),
                self.dim_at(deg),
            ),
        }
    }

    /// Composite multiplication along ascending variable order from `from`
    /// to `to ⊇ from`.
    pub fn transport(&self, from: Mask, to: Mask) -> Mat<F> {
        debug_assert!(subsets::contains(to, from));
        let mut acc = Mat::identity(&self.f, self.dim_at(from));
        let mut cur = from;
        for v in subsets::bits(to & !from) {
            let step = self.mult_at(cur, v as u32);
            acc = step.mul(&acc);
            cur |= subsets::bit(v);
        }
        acc
    }

    fn validate(&self) -> Result<()> {
        for (&(deg, j), m) in &self.mult {
            let target = deg | subsets::bit(j as usize);
            if deg & subsets::bit(j as usize) != 0 {
                return Err(Error::Invariant("multiplication key has j ∈ F".into()));
            }
            if m.rows() != self.dim_at(target) || m.cols() != self.dim_at(deg) {
                return Err(Error::Invariant("multiplication map shape mismatch".into()));
            }
        }
        self.check_commutativity()
    }

    /// Assert `m_{F∪j,l} ∘ m_{F,j} = m_{F∪l,j} ∘ m_{F,l}` on every stored
    /// square with nonzero corners.
    pub fn check_commutativity(&self) -> Result<()> {
        for &deg in self.comps.keys() {
            let outside: Vec<usize> = (0..self.n).filter(|&v| deg & subsets::bit(v) == 0).collect();
            for (a, &j) in outside.iter().enumerate() {
                for &l in &outside[a + 1..] {
                    let both = deg | subsets::bit(j) | subsets::bit(l);
                    if self.dim_at(both) == 0 {
                        continue;
                    }
                    let via_j = self
                        .mult_at(deg | subsets::bit(j), l as u32)
                        .mul(&self.mult_at(deg, j as u32));
                    let via_l = self
                        .mult_at(deg | subsets::bit(l), j as u32)
                        .mul(&self.mult_at(deg, l as u32));
                    if via_j != via_l {
                        return Err(Error::Invariant(format!(
                            "multiplication squares at degree {:?} with x_{} and x_{} do not commute",
                            subsets::to_vertices(deg),
                            j + 1,
                            l + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The quotient ring `R/I` as a squarefree module: one-dimensional fibers
    /// on the faces of the Stanley-Reisner complex, identity multiplications
    /// wherever source and target are both faces.
    pub fn quotient(f: &F, ideal: &SquarefreeIdeal) -> Self {
        let n = ideal.n();
        let delta = ideal.stanley_reisner_complex();
        let indicator = delta.face_indicator();
        let mut comps = BTreeMap::new();
        let mut mult = BTreeMap::new();
        for m in 0..(1u32 << n) {
            if !indicator[m as usize] {
                continue;
            }
            comps.insert(m, 1);
            for v in 0..n {
                if m & subsets::bit(v) == 0 && indicator[(m | subsets::bit(v)) as usize] {
                    mult.insert((m, v as u32), Mat::identity(f, 1));
                }
            }
        }
        SqfModule { f: f.clone(), n, comps, mult }
    }
}

/// Dimension, depth and Cohen-Macaulayness of a module, read off the set of
/// non-vanishing `Ext` indices against the canonical module.
///
/// Conventions for the zero module: `dim = None` (−∞), `depth = None` (+∞),
/// `is_cm = true`; callers evaluating "zero or Cohen-Macaulay of dimension
/// i" test `is_zero` first.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ModuleProfile {
    pub is_zero: bool,
    /// Krull dimension; `None` means −∞ (the zero module).
    pub dim: Option<usize>,
    /// Depth; `None` means +∞ (the zero module).
    pub depth: Option<usize>,
    pub is_cm: bool,
    /// Indices `j` with `Ext^j(M, ω) ≠ 0`.
    pub nonvanishing_ext: std::collections::BTreeSet<usize>,
}

impl ModuleProfile {
    pub fn zero_module() -> Self {
        ModuleProfile {
            is_zero: true,
            dim: None,
            depth: None,
            is_cm: true,
            nonvanishing_ext: Default::default(),
        }
    }

    /// Is the module zero or Cohen-Macaulay of dimension exactly `i`?
    pub fn is_zero_or_cm_of_dim(&self, i: usize) -> bool {
        self.is_zero || (self.is_cm && self.dim == Some(i))
    }
}

/// Profile of a module from its resolution-level data; see
/// [`crate::ext::ext_nonvanishing`] for the `Ext` side.
pub fn module_profile<F: Field>(m: &SqfModule<F>) -> Result<ModuleProfile> {
    if m.is_zero() {
        return Ok(ModuleProfile::zero_module());
    }
    let res = crate::resolution::minimal_free_resolution(m)?;
    let nonvanishing = crate::ext::ext_nonvanishing(&res);
    let n = m.n();
    let min = *nonvanishing.iter().next().ok_or_else(|| {
        Error::Invariant("nonzero module with no nonvanishing Ext".into())
    })?;
    let max = *nonvanishing.iter().next_back().unwrap();
    let dim = m.krull_dim().unwrap();
    if dim != n - min {
        return Err(Error::Invariant(format!(
            "dimension cross-check failed: support says {dim}, Ext says {}",
            n - min
        )));
    }
    Ok(ModuleProfile {
        is_zero: false,
        dim: Some(dim),
        depth: Some(n - max),
        is_cm: nonvanishing.len() == 1,
        nonvanishing_ext: nonvanishing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::subsets::from_vertices;

    fn ideal(n: usize, gens: &[&[usize]]) -> SquarefreeIdeal {
        SquarefreeIdeal::new(n, gens.iter().map(|g| from_vertices(g, n).unwrap())).unwrap()
    }

    #[test]
    fn quotient_of_irrelevant_ideal_is_k() {
        let m = SqfModule::quotient(&Rationals, &ideal(3, &[&[1], &[2], &[3]]));
        assert_eq!(m.dim_at(0), 1);
        assert_eq!(m.total_dim(), 1);
        assert_eq!(m.krull_dim(), Some(0));
    }

    #[test]
    fn quotient_of_zero_ideal_is_free() {
        let m = SqfModule::quotient(&Rationals, &ideal(3, &[]));
        assert_eq!(m.total_dim(), 8);
        assert!(m.check_commutativity().is_ok());
        assert_eq!(m.krull_dim(), Some(3));
    }

    #[test]
    fn quotient_of_disjoint_edges_supports_faces() {
        let m = SqfModule::quotient(&Rationals, &ideal(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
        let faces: Vec<Mask> = m.support().collect();
        let want: Vec<Mask> = [
            vec![],
            vec![1],
            vec![2],
            vec![3],
            vec![4],
            vec![1, 2],
            vec![3, 4],
        ]
        .iter()
        .map(|v| from_vertices(v, 4).unwrap())
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
        let mut sorted = want.clone();
        sorted.sort_unstable();
        assert_eq!(faces, sorted);
    }

    #[test]
    fn transport_is_path_independent_on_quotients() {
        let m = SqfModule::quotient(&Rationals, &ideal(3, &[]));
        let t = m.transport(0, 0b111);
        assert_eq!(t, Mat::identity(&Rationals, 1));
    }
}
