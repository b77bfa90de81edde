//! Bitmask subsets of `{1..n}` and the canonical orders used everywhere.
//!
//! Vertices are 1-based externally and 0-based bit positions internally.
//! The canonical order on subsets is (cardinality, lexicographic on the
//! ascending vertex list), which keeps every output byte-reproducible.

use crate::error::{Error, Result};
use std::cmp::Ordering;

/// A subset of `{1..n}` as a machine word; bit `i` is vertex `i+1`.
pub type Mask = u32;

/// Hard cap on the vertex count: all subset scans fit one machine word.
pub const MAX_VERTICES: usize = 24;

pub fn full_mask(n: usize) -> Mask {
    debug_assert!(n <= MAX_VERTICES);
    if n == 32 {
        !0
    } else {
        (1u32 << n) - 1
    }
}

pub fn bit(v: usize) -> Mask {
    1u32 << v
}

pub fn card(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Is `sub` contained in `sup`?
pub fn contains(sup: Mask, sub: Mask) -> bool {
    sub & !sup == 0
}

/// Iterate 0-based bit positions in ascending order.
pub fn bits(m: Mask) -> impl Iterator<Item = usize> {
    let mut rest = m;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// Sorted 1-based vertex list of a mask.
pub fn to_vertices(m: Mask) -> Vec<usize> {
    bits(m).map(|v| v + 1).collect()
}

/// Build a mask from 1-based vertices; duplicates collapse.
pub fn from_vertices(vs: &[usize], n: usize) -> Result<Mask> {
    let mut m = 0;
    for &v in vs {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange(v, n));
        }
        m |= bit(v - 1);
    }
    Ok(m)
}

/// Canonical subset order: cardinality first, then lexicographic on the
/// ascending vertex list.
pub fn card_lex(a: Mask, b: Mask) -> Ordering {
    card(a).cmp(&card(b)).then_with(|| lex(a, b))
}

/// Lexicographic order on ascending vertex lists.
pub fn lex(a: Mask, b: Mask) -> Ordering {
    let (mut x, mut y) = (a, b);
    while x != 0 && y != 0 {
        let (vx, vy) = (x.trailing_zeros(), y.trailing_zeros());
        match vx.cmp(&vy) {
            Ordering::Equal => {
                x &= x - 1;
                y &= y - 1;
            }
            ord => return ord,
        }
    }
    // A strict prefix precedes the longer list.
    (x != 0).cmp(&(y != 0))
}

/// All subsets of `{1..n}` in canonical (cardinality, lex) order.
pub fn all_subsets_card_lex(n: usize) -> Vec<Mask> {
    let mut all: Vec<Mask> = (0..=full_mask(n)).collect();
    all.sort_by(|&a, &b| card_lex(a, b));
    all
}

/// Iterate all submasks of `m`, including `0` and `m`, in descending
/// numeric order (the standard `(s-1) & m` walk).
pub fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut state = Some(m);
    std::iter::from_fn(move || {
        let s = state?;
        state = if s == 0 { None } else { Some((s - 1) & m) };
        Some(s)
    })
}

/// Keep only the maximal sets under inclusion, canonically sorted.
pub fn maximal_antichain(sets: &[Mask]) -> Vec<Mask> {
    let mut out: Vec<Mask> = Vec::new();
    for &s in sets {
        if sets.iter().any(|&t| t != s && contains(t, s)) {
            continue;
        }
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out.sort_by(|&a, &b| card_lex(a, b));
    out
}

/// Keep only the minimal sets under inclusion, canonically sorted.
pub fn minimal_antichain(sets: &[Mask]) -> Vec<Mask> {
    let mut out: Vec<Mask> = Vec::new();
    for &s in sets {
        if sets.iter().any(|&t| t != s && contains(s, t)) {
            continue;
        }
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out.sort_by(|&a, &b| card_lex(a, b));
    out
}

/// Minimal hitting sets of a family of nonempty subsets of `{1..n}`:
/// the inclusion-minimal `T` with `T ∩ S ≠ ∅` for every `S`.
///
/// This is the engine behind both the primary decomposition of a squarefree
/// ideal (minimal primes = minimal transversals of the generator supports)
/// and the generators of an intersection of monomial primes.
pub fn minimal_transversals(n: usize, family: &[Mask]) -> Vec<Mask> {
    fn rec(family: &[Mask], current: Mask, start_allowed: Mask, out: &mut Vec<Mask>) {
        match family.iter().find(|&&s| s & current == 0) {
            None => out.push(current),
            Some(&uncovered) => {
                for v in bits(uncovered & start_allowed) {
                    rec(family, current | bit(v), start_allowed, out);
                }
            }
        }
    }
    let mut raw = Vec::new();
    rec(family, 0, full_mask(n), &mut raw);
    minimal_antichain(&raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn card_lex_order() {
        // {4} < {1,3} in (card, lex); {1,3} < {2,3}; {1,4} < {2,3}.
        let m4 = from_vertices(&[4], 4).unwrap();
        let m13 = from_vertices(&[1, 3], 4).unwrap();
        let m23 = from_vertices(&[2, 3], 4).unwrap();
        let m14 = from_vertices(&[1, 4], 4).unwrap();
        assert_eq!(card_lex(m4, m13), Ordering::Less);
        assert_eq!(card_lex(m13, m23), Ordering::Less);
        assert_eq!(card_lex(m14, m23), Ordering::Less);
        // pure lex differs: {1,3} < {4} lexicographically
        assert_eq!(lex(m13, m4), Ordering::Less);
    }

    #[test]
    fn transversals_of_paper_components() {
        // Components {1,3},{2,3},{4}: minimal hitting sets {3,4} and {1,2,4}.
        let fam = [0b101, 0b110, 0b1000];
        let ts = minimal_transversals(4, &fam);
        assert_eq!(ts, vec![0b1100, 0b1011]);
    }

    #[test]
    fn submask_walk_counts() {
        let m = 0b10110;
        assert_eq!(submasks(m).count(), 8);
        assert!(submasks(m).all(|s| contains(m, s)));
    }
}
