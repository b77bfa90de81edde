//! The input document schema and canonical form.
//!
//! A document is UTF-8 JSON: `{"n": int, K: [[int,...],...]}` where `K` is
//! exactly one of `generators`, `facets` or `primary_components`, vertices
//! 1-based. The canonical form uses `generators` with subsets in
//! (cardinality, lex) order; re-parsing a canonical form is the identity.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::subsets;
use serde::{Deserialize, Serialize};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InputDoc {
    n: usize,
    #[serde(default)]
    generators: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    facets: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    primary_components: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Serialize)]
struct CanonicalDoc {
    n: usize,
    generators: Vec<Vec<usize>>,
}

/// Parse a document and canonicalize: the three input styles for the same
/// ring yield the identical ideal/complex pair.
pub fn parse_input(text: &str) -> Result<(SquarefreeIdeal, SimplicialComplex)> {
    let doc: InputDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid document: {e}")))?;
    let given = [
        ("generators", doc.generators.as_ref()),
        ("facets", doc.facets.as_ref()),
        ("primary_components", doc.primary_components.as_ref()),
    ];
    let present: Vec<&str> = given.iter().filter(|(_, v)| v.is_some()).map(|(k, _)| *k).collect();
    if present.len() != 1 {
        return Err(Error::Parse(format!(
            "exactly one of generators|facets|primary_components must be given, found {}",
            if present.is_empty() { "none".to_string() } else { present.join("+") }
        )));
    }
    let n = doc.n;
    if n == 0 || n > subsets::MAX_VERTICES {
        return Err(Error::TooManyVertices(n, subsets::MAX_VERTICES));
    }
    let to_masks = |lists: &[Vec<usize>]| -> Result<Vec<subsets::Mask>> {
        lists.iter().map(|l| subsets::from_vertices(l, n)).collect()
    };
    let ideal = if let Some(gens) = &doc.generators {
        SquarefreeIdeal::new(n, to_masks(gens)?)?
    } else if let Some(facets) = &doc.facets {
        let delta = SimplicialComplex::new(n, to_masks(facets)?)?;
        SquarefreeIdeal::from_complex(&delta)?
    } else {
        let comps = to_masks(doc.primary_components.as_ref().unwrap())?;
        if comps.contains(&0) {
            return Err(Error::Parse("empty primary component".into()));
        }
        SquarefreeIdeal::from_primary_components(n, &comps)?
    };
    let delta = ideal.stanley_reisner_complex();
    Ok((ideal, delta))
}

/// Canonical JSON for an ideal: `{"n":N,"generators":[...]}` with subsets
/// in (cardinality, lex) order and ascending vertices.
pub fn canonical_json(ideal: &SquarefreeIdeal) -> String {
    let doc = CanonicalDoc {
        n: ideal.n(),
        generators: ideal.generators().iter().map(|&g| subsets::to_vertices(g)).collect(),
    };
    serde_json::to_string(&doc).expect("canonical document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::from_vertices;

    #[test]
    fn parse_primary_components_paper_example() {
        let (ideal, _) =
            parse_input(r#"{"n":4,"primary_components":[[1,3],[2,3],[4]]}"#).unwrap();
        let want =
            vec![from_vertices(&[3, 4], 4).unwrap(), from_vertices(&[1, 2, 4], 4).unwrap()];
        assert_eq!(ideal.generators(), want.as_slice());
    }

    #[test]
    fn parse_generators_reduces_antichain() {
        let (ideal, _) = parse_input(r#"{"n":2,"generators":[[1],[1,2]]}"#).unwrap();
        assert_eq!(ideal.generators(), &[from_vertices(&[1], 2).unwrap()]);
    }

    #[test]
    fn parse_facets_two_disjoint_edges() {
        let (ideal, delta) = parse_input(r#"{"n":4,"facets":[[1,2],[3,4]]}"#).unwrap();
        let want: Vec<_> = [[1usize, 3], [1, 4], [2, 3], [2, 4]]
            .iter()
            .map(|s| from_vertices(s, 4).unwrap())
            .collect();
        assert_eq!(ideal.generators(), want.as_slice());
        assert_eq!(delta.facets().len(), 2);
    }

    #[test]
    fn three_styles_agree_and_canonical_form_is_idempotent() {
        let a = parse_input(r#"{"n":4,"primary_components":[[1,3],[2,3],[4]]}"#).unwrap();
        let b = parse_input(r#"{"n":4,"generators":[[3,4],[1,2,4]]}"#).unwrap();
        let c = parse_input(r#"{"n":4,"facets":[[2,4],[1,4],[1,2,3]]}"#).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.0, c.0);
        assert_eq!(a.1, c.1);
        let canon = canonical_json(&a.0);
        let re = parse_input(&canon).unwrap();
        assert_eq!(re.0, a.0);
        assert_eq!(canonical_json(&re.0), canon);
    }

    #[test]
    fn malformed_documents() {
        assert!(parse_input("not json").is_err());
        assert!(parse_input(r#"{"n":4}"#).is_err());
        assert!(parse_input(r#"{"n":4,"generators":[[1]],"facets":[[1]]}"#).is_err());
        assert!(parse_input(r#"{"n":4,"generators":[[5]]}"#).is_err());
        assert!(parse_input(r#"{"n":25,"generators":[[1]]}"#).is_err());
        assert!(parse_input(r#"{"n":4,"generators":[[]]}"#).is_err());
        assert!(parse_input(r#"{"n":4,"primary_components":[]}"#).is_err());
        assert!(parse_input(r#"{"n":4,"generators":[[1]],"extra":1}"#).is_err());
    }
}
