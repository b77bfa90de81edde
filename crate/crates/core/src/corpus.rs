//! Deterministic corpus generation: random complexes, nonpure-shellable
//! complexes built by a random shelling order, and simplicial forests grown
//! leaf by leaf.
//!
//! Every generated element carries enough of a certificate to be re-checked
//! by definition: shellable elements ship their shelling order, forest
//! elements are re-validated against the subcollection-leaf definition
//! during construction.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::subsets::{self, Mask};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub const MAX_CORPUS_N: usize = 8;
pub const MAX_CORPUS_COUNT: usize = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// Facets sampled per-subset with probability `q`, then reduced to the
    /// maximal ones.
    Random { q: f64 },
    /// Built by a random shelling order; sequentially Cohen-Macaulay by
    /// construction.
    NonpureShellable,
    /// Simplicial forests in the facet-complex sense; their facet ideals
    /// are the sequentially Cohen-Macaulay inputs of the forest family.
    Forest,
}

impl Family {
    pub fn parse(name: &str, q: f64) -> Result<Family> {
        match name {
            "random" => Ok(Family::Random { q }),
            "nonpure-shellable" => Ok(Family::NonpureShellable),
            "forest" => Ok(Family::Forest),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub family: Family,
    pub n: usize,
    pub count: usize,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub enum Certificate {
    None,
    /// The shelling order of the facets.
    Shelling(Vec<Mask>),
    /// Forest property re-checked against the definition at build time.
    Forest,
}

#[derive(Clone, Debug)]
pub struct CorpusElement {
    pub complex: SimplicialComplex,
    pub certificate: Certificate,
}

impl CorpusElement {
    /// The ideal an element feeds to the classification engine: the
    /// Stanley-Reisner ideal of the complex, except for forests, whose
    /// subject is the facet ideal (generators = facets), matching the way
    /// trees enter the sequential-CM picture.
    pub fn ideal(&self) -> Result<SquarefreeIdeal> {
        match self.certificate {
            Certificate::Forest => {
                SquarefreeIdeal::new(self.complex.n(), self.complex.facets().iter().copied())
            }
            _ => SquarefreeIdeal::from_complex(&self.complex),
        }
    }
}

/// Generate a corpus; deterministic for a fixed spec, and a prefix of a
/// longer run with the same seed.
pub fn generate(spec: &CorpusSpec) -> Result<Vec<CorpusElement>> {
    if spec.n == 0 || spec.n > MAX_CORPUS_N {
        return Err(Error::CorpusBounds(format!(
            "corpus families support 1..={MAX_CORPUS_N} vertices, got {}",
            spec.n
        )));
    }
    if spec.count > MAX_CORPUS_COUNT {
        return Err(Error::CorpusBounds(format!(
            "corpus size capped at {MAX_CORPUS_COUNT}, got {}",
            spec.count
        )));
    }
    if let Family::Random { q } = spec.family {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::CorpusBounds(format!("facet probability {q} outside [0,1]")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    for _ in 0..spec.count {
        let element = match spec.family {
            Family::Random { q } => random_element(spec.n, q, &mut rng)?,
            Family::NonpureShellable => shellable_element(spec.n, &mut rng)?,
            Family::Forest => forest_element(spec.n, &mut rng)?,
        };
        out.push(element);
    }
    Ok(out)
}

fn random_element(n: usize, q: f64, rng: &mut ChaCha8Rng) -> Result<CorpusElement> {
    let full = subsets::full_mask(n);
    let mut faces: Vec<Mask> = Vec::new();
    for m in 1..=full {
        if rng.gen_bool(q) {
            faces.push(m);
        }
    }
    if faces.is_empty() {
        // avoid the void complex: fall back to a random vertex
        faces.push(subsets::bit(rng.gen_range(0..n)));
    }
    Ok(CorpusElement {
        complex: SimplicialComplex::new(n, faces)?,
        certificate: Certificate::None,
    })
}

/// Is appending `candidate` to `order` a legal shelling step? For every
/// earlier facet `h` there must be a vertex `v` of the candidate outside
/// `h` whose deletion lands inside the old complex.
fn shelling_step_ok(order: &[Mask], candidate: Mask) -> bool {
    if order.iter().any(|&h| subsets::contains(h, candidate) || subsets::contains(candidate, h)) {
        return false;
    }
    order.iter().all(|&h| {
        subsets::bits(candidate).any(|v| {
            candidate & subsets::bit(v) != 0
                && h & subsets::bit(v) == 0
                && order.iter().any(|&old| subsets::contains(old, candidate & !subsets::bit(v)))
        })
    })
}

/// Check a full shelling order by definition.
pub fn is_valid_shelling(order: &[Mask]) -> bool {
    if order.is_empty() || order.contains(&0) {
        return false;
    }
    (1..order.len()).all(|i| shelling_step_ok(&order[..i], order[i]))
}

fn shellable_element(n: usize, rng: &mut ChaCha8Rng) -> Result<CorpusElement> {
    let full = subsets::full_mask(n);
    let target = rng.gen_range(1..=2 * n);
    let mut order: Vec<Mask> = vec![rng.gen_range(1..=full)];
    while order.len() < target {
        let candidates: Vec<Mask> =
            (1..=full).filter(|&c| shelling_step_ok(&order, c)).collect();
        if candidates.is_empty() {
            break;
        }
        order.push(candidates[rng.gen_range(0..candidates.len())]);
    }
    debug_assert!(is_valid_shelling(&order));
    Ok(CorpusElement {
        complex: SimplicialComplex::new(n, order.iter().copied())?,
        certificate: Certificate::Shelling(order),
    })
}

/// Does `facet` have a joint in `collection`: a facet `g` whose intersection
/// with `facet` dominates every other intersection?
fn is_leaf_of(facets: &[Mask], facet: Mask) -> bool {
    if facets.len() <= 1 {
        return true;
    }
    facets.iter().any(|&g| {
        g != facet
            && facets
                .iter()
                .all(|&h| h == facet || h == g || subsets::contains(g & facet, h & facet))
    })
}

/// A collection of facets is a simplicial forest when every nonempty
/// subcollection has a leaf. Exponential in the facet count; the corpus
/// bounds keep it comfortably small.
pub fn is_simplicial_forest(facets: &[Mask]) -> bool {
    let m = facets.len();
    if m == 0 {
        return false;
    }
    for pick in 1u32..(1u32 << m) {
        let sub: Vec<Mask> =
            (0..m).filter(|&i| pick & (1 << i) != 0).map(|i| facets[i]).collect();
        if !sub.iter().any(|&f| is_leaf_of(&sub, f)) {
            return false;
        }
    }
    true
}

fn forest_element(n: usize, rng: &mut ChaCha8Rng) -> Result<CorpusElement> {
    let full = subsets::full_mask(n);
    let target = rng.gen_range(1..=n.max(2));
    let mut facets: Vec<Mask> = vec![rng.gen_range(1..=full)];
    while facets.len() < target {
        let candidates: Vec<Mask> = (1..=full)
            .filter(|&c| {
                if facets.iter().any(|&h| subsets::contains(h, c) || subsets::contains(c, h)) {
                    return false;
                }
                let mut trial = facets.clone();
                trial.push(c);
                is_simplicial_forest(&trial)
            })
            .collect();
        if candidates.is_empty() {
            break;
        }
        facets.push(candidates[rng.gen_range(0..candidates.len())]);
    }
    debug_assert!(is_simplicial_forest(&facets));
    Ok(CorpusElement {
        complex: SimplicialComplex::new(n, facets.iter().copied())?,
        certificate: Certificate::Forest,
    })
}
