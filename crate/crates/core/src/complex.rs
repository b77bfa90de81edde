//! Simplicial complexes on `{1..n}` as facet antichains, with links, pure
//! skeleta and the Hochster-Huneke graph.

use crate::error::{Error, Result};
use crate::subsets::{self, Mask, MAX_VERTICES};

/// A simplicial complex given by its facets (an antichain of subsets).
///
/// Two degenerate values are distinct and legal: the void complex (no facets
/// at all, dimension `-∞`) and the empty complex `{∅}` (the single facet
/// `∅`, dimension `-1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Mask>,
}

impl SimplicialComplex {
    /// Build from any family of faces: keeps the maximal ones and sorts them
    /// canonically. An empty family yields the void complex.
    pub fn new(n: usize, faces: impl IntoIterator<Item = Mask>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n, MAX_VERTICES));
        }
        let full = subsets::full_mask(n);
        let collected: Vec<Mask> = faces.into_iter().collect();
        if let Some(&bad) = collected.iter().find(|&&f| !subsets::contains(full, f)) {
            return Err(Error::VertexOutOfRange(32 - bad.leading_zeros() as usize, n));
        }
        Ok(SimplicialComplex { n, facets: subsets::maximal_antichain(&collected) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Mask] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [0]
    }

    /// Dimension: `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|&f| subsets::card(f) as isize - 1).max()
    }

    pub fn is_face(&self, face: Mask) -> bool {
        self.facets.iter().any(|&f| subsets::contains(f, face))
    }

    /// Is every facet of the same dimension?
    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| subsets::card(w[0]) == subsets::card(w[1]))
    }

    /// Membership indicator over all `2^n` subsets, by downward closure from
    /// the facets in one `O(2^n · n)` sweep.
    pub fn face_indicator(&self) -> Vec<bool> {
        let size = 1usize << self.n;
        let mut face = vec![false; size];
        for &f in &self.facets {
            face[f as usize] = true;
        }
        for m in (0..size).rev() {
            if !face[m] {
                continue;
            }
            let mask = m as Mask;
            for v in subsets::bits(mask) {
                face[(mask & !subsets::bit(v)) as usize] = true;
            }
        }
        face
    }

    /// All faces of dimension exactly `i` (cardinality `i+1`), canonically
    /// sorted. `i = -1` yields `[∅]` for any non-void complex.
    pub fn faces_of_dim(&self, i: isize) -> Vec<Mask> {
        if self.is_void() {
            return Vec::new();
        }
        let k = (i + 1) as usize;
        let mut out: Vec<Mask> = Vec::new();
        for &f in &self.facets {
            if subsets::card(f) < k {
                continue;
            }
            for s in subsets::submasks(f) {
                if subsets::card(s) == k && !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out.sort_by(|&a, &b| subsets::card_lex(a, b));
        out
    }

    /// All faces, canonically sorted.
    pub fn all_faces(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = Vec::new();
        for &f in &self.facets {
            for s in subsets::submasks(f) {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out.sort_by(|&a, &b| subsets::card_lex(a, b));
        out
    }

    /// `link_Δ(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}` on the same vertex count.
    pub fn link(&self, face: Mask) -> Result<SimplicialComplex> {
        if !self.is_face(face) {
            return Err(Error::NotAFace);
        }
        let gens = self.facets.iter().filter(|&&f| subsets::contains(f, face)).map(|&f| f & !face);
        SimplicialComplex::new(self.n, gens)
    }

    /// Subcomplex generated by all faces of dimension exactly `i`.
    pub fn pure_skeleton(&self, i: isize) -> Result<SimplicialComplex> {
        let dim = self.dim().ok_or(Error::VoidComplex)?;
        if i < -1 || i > dim {
            return Err(Error::SkeletonRange(i, -1, dim));
        }
        SimplicialComplex::new(self.n, self.faces_of_dim(i))
    }

    /// Number of connected components of the Hochster-Huneke graph: vertices
    /// are the maximal-dimension facets, edges the pairs meeting in
    /// codimension one.
    pub fn hochster_huneke_components(&self) -> Result<usize> {
        let dim = self.dim().ok_or(Error::VoidComplex)?;
        let d = (dim + 1) as usize;
        let tops: Vec<Mask> =
            self.facets.iter().copied().filter(|&f| subsets::card(f) == d).collect();
        let mut comp: Vec<usize> = (0..tops.len()).collect();
        fn find(comp: &mut Vec<usize>, i: usize) -> usize {
            let mut r = i;
            while comp[r] != r {
                r = comp[r];
            }
            let mut c = i;
            while comp[c] != r {
                let next = comp[c];
                comp[c] = r;
                c = next;
            }
            r
        }
        for i in 0..tops.len() {
            for j in i + 1..tops.len() {
                if d >= 1 && subsets::card(tops[i] & tops[j]) == d - 1 {
                    let (ri, rj) = (find(&mut comp, i), find(&mut comp, j));
                    if ri != rj {
                        comp[ri] = rj;
                    }
                }
            }
        }
        let mut roots: Vec<usize> = (0..tops.len()).map(|i| find(&mut comp, i)).collect();
        roots.sort_unstable();
        roots.dedup();
        Ok(roots.len())
    }

    /// Apply a vertex permutation: `perm[v]` is the image of 0-based `v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimplicialComplex> {
        debug_assert_eq!(perm.len(), self.n);
        let map = |m: Mask| -> Mask {
            subsets::bits(m).fold(0, |acc, v| acc | subsets::bit(perm[v]))
        };
        SimplicialComplex::new(self.n, self.facets.iter().map(|&f| map(f)))
    }

    /// The induced subcomplex on the vertex set `w`.
    pub fn restriction(&self, w: Mask) -> SimplicialComplex {
        SimplicialComplex::new(self.n, self.facets.iter().map(|&f| f & w))
            .expect("restriction stays in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::from_vertices;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, facets.iter().map(|f| from_vertices(f, n).unwrap())).unwrap()
    }

    #[test]
    fn void_and_empty_are_distinct() {
        let void = SimplicialComplex::new(3, []).unwrap();
        let empty = cx(3, &[&[]]);
        assert!(void.is_void());
        assert!(!empty.is_void());
        assert!(empty.is_empty_complex());
        assert_eq!(void.dim(), None);
        assert_eq!(empty.dim(), Some(-1));
        assert_ne!(void, empty);
    }

    #[test]
    fn antichain_reduction() {
        let c = cx(3, &[&[1], &[1, 2], &[1, 2, 3], &[2, 3]]);
        assert_eq!(c.facets(), &[from_vertices(&[1, 2, 3], 3).unwrap()]);
    }

    #[test]
    fn link_of_facet_is_empty_complex() {
        let c = cx(4, &[&[1, 2], &[3, 4]]);
        let l = c.link(from_vertices(&[1, 2], 4).unwrap()).unwrap();
        assert!(l.is_empty_complex());
    }

    #[test]
    fn link_of_vertex_in_two_edges() {
        let c = cx(4, &[&[1, 2], &[3, 4]]);
        let l = c.link(from_vertices(&[1], 4).unwrap()).unwrap();
        assert_eq!(l.facets(), &[from_vertices(&[2], 4).unwrap()]);
        assert!(c.link(from_vertices(&[1, 3], 4).unwrap()).is_err());
    }

    #[test]
    fn link_of_empty_face_is_identity() {
        let c = cx(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(c.link(0).unwrap(), c);
    }

    #[test]
    fn pure_skeleton_examples() {
        // Δ = {{1,2,3},{2,4},{1,4}}: pure 1-skeleton has all five edges.
        let c = cx(4, &[&[1, 2, 3], &[2, 4], &[1, 4]]);
        let sk = c.pure_skeleton(1).unwrap();
        let want = cx(4, &[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[1, 4]]);
        assert_eq!(sk, want);
        // 0-skeleton: all vertices
        let sk0 = c.pure_skeleton(0).unwrap();
        assert_eq!(sk0, cx(4, &[&[1], &[2], &[3], &[4]]));
        // top skeleton of a pure complex is the complex itself
        let pure = cx(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(pure.pure_skeleton(1).unwrap(), pure);
        assert!(c.pure_skeleton(3).is_err());
    }

    #[test]
    fn hochster_huneke_counts() {
        assert_eq!(cx(4, &[&[1, 2], &[3, 4]]).hochster_huneke_components().unwrap(), 2);
        assert_eq!(cx(3, &[&[1, 2, 3]]).hochster_huneke_components().unwrap(), 1);
        // only one top-dimensional facet
        assert_eq!(
            cx(4, &[&[1, 2, 3], &[2, 4], &[1, 4]]).hochster_huneke_components().unwrap(),
            1
        );
        // the empty complex has the single facet ∅
        let empty = cx(2, &[&[]]);
        assert_eq!(empty.hochster_huneke_components().unwrap(), 1);
        assert!(SimplicialComplex::new(2, []).unwrap().hochster_huneke_components().is_err());
    }

    #[test]
    fn face_indicator_agrees_with_is_face() {
        let c = cx(4, &[&[1, 2, 3], &[2, 4]]);
        let ind = c.face_indicator();
        for m in 0..(1u32 << 4) {
            assert_eq!(ind[m as usize], c.is_face(m));
        }
    }
}
