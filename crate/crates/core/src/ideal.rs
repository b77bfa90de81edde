//! Squarefree monomial ideals and the Stanley-Reisner dictionary.
//!
//! An ideal is stored as the antichain of supports of its minimal monomial
//! generators. Generators of the Stanley-Reisner ideal of `Δ` are the
//! minimal nonfaces; facets of `Δ(I)` are the complements of the minimal
//! primes, and both directions reduce to minimal-transversal enumeration.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::subsets::{self, Mask, MAX_VERTICES};

/// A squarefree monomial ideal as the antichain of its minimal generator
/// supports. No generators means the zero ideal; the unit ideal (a generator
/// with empty support) is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    n: usize,
    gens: Vec<Mask>,
}

impl SquarefreeIdeal {
    pub fn new(n: usize, gens: impl IntoIterator<Item = Mask>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n, MAX_VERTICES));
        }
        let full = subsets::full_mask(n);
        let collected: Vec<Mask> = gens.into_iter().collect();
        if collected.contains(&0) {
            return Err(Error::UnitIdeal);
        }
        if let Some(&bad) = collected.iter().find(|&&g| !subsets::contains(full, g)) {
            return Err(Error::VertexOutOfRange(32 - bad.leading_zeros() as usize, n));
        }
        Ok(SquarefreeIdeal { n, gens: subsets::minimal_antichain(&collected) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Mask] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Is the squarefree monomial with support `m` contained in the ideal?
    pub fn contains_monomial(&self, m: Mask) -> bool {
        self.gens.iter().any(|&g| subsets::contains(m, g))
    }

    /// Height: `n - dim R/I`, i.e. the smallest primary-component size.
    pub fn height(&self) -> usize {
        self.n - self.stanley_reisner_complex().dim().map_or(0, |d| (d + 1) as usize)
    }

    /// The Stanley-Reisner complex: faces are the squarefree monomials not
    /// in the ideal. The zero ideal gives the full simplex, the irrelevant
    /// ideal gives `{∅}`.
    pub fn stanley_reisner_complex(&self) -> SimplicialComplex {
        let full = subsets::full_mask(self.n);
        let facets: Vec<Mask> = subsets::minimal_transversals(self.n, &self.gens)
            .into_iter()
            .map(|t| full & !t)
            .collect();
        SimplicialComplex::new(self.n, facets).expect("facets stay in range")
    }

    /// The Stanley-Reisner ideal of a complex: generated by the minimal
    /// nonfaces. The void complex corresponds to the unit ideal and errors.
    pub fn from_complex(delta: &SimplicialComplex) -> Result<Self> {
        let n = delta.n();
        let face = delta.face_indicator();
        let mut gens = Vec::new();
        for m in 0..(1u32 << n) {
            if face[m as usize] {
                continue;
            }
            let all_proper_subsets_are_faces =
                subsets::bits(m).all(|v| face[(m & !subsets::bit(v)) as usize]);
            if all_proper_subsets_are_faces {
                gens.push(m);
            }
        }
        SquarefreeIdeal::new(n, gens)
    }

    /// Build from prime components: `I = ∩ P_S` over the given supports.
    /// Generators are the minimal transversals of the support family.
    pub fn from_primary_components(n: usize, components: &[Mask]) -> Result<Self> {
        if components.is_empty() {
            // the empty intersection is the unit ideal
            return Err(Error::UnitIdeal);
        }
        if components.contains(&0) {
            // a component with empty support is the zero prime; the
            // intersection collapses to the zero ideal
            return SquarefreeIdeal::new(n, []);
        }
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n, MAX_VERTICES));
        }
        SquarefreeIdeal::new(n, subsets::minimal_transversals(n, components))
    }

    /// Supports of the minimal monomial primes, sorted lexicographically.
    /// These are exactly the complements of the facets of `Δ(I)`.
    pub fn primary_decomposition(&self) -> Vec<Mask> {
        let mut primes = subsets::minimal_transversals(self.n, &self.gens);
        primes.sort_by(|&a, &b| subsets::lex(a, b));
        primes
    }

    /// Alexander dual: the ideal generated by the primary-component
    /// monomials `x^{supp P}`, equivalently by the facet complements of
    /// `Δ(I)`. Undefined for the zero ideal in this encoding.
    pub fn alexander_dual(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal("alexander_dual"));
        }
        SquarefreeIdeal::new(self.n, self.primary_decomposition())
    }
}
