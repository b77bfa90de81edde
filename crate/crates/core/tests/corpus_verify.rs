//! Corpus smoke tests: generated families run clean through the full
//! classification with every applicable implication passing.

use lyutab_core::corpus::{generate, Certificate, CorpusSpec, Family};
use lyutab_core::field::{PrimeField, Rationals};
use lyutab_core::lyub::classify_and_verify;

#[test]
fn shellable_elements_are_sequentially_cm_with_trivial_tables() {
    let spec = CorpusSpec { family: Family::NonpureShellable, n: 5, count: 10, seed: 1 };
    for el in generate(&spec).unwrap() {
        match &el.certificate {
            Certificate::Shelling(order) => assert!(lyutab_core::corpus::is_valid_shelling(order)),
            _ => panic!("expected a shelling certificate"),
        }
        let ideal = el.ideal().unwrap();
        let (analysis, _checks) = classify_and_verify(&ideal, &Rationals).unwrap();
        assert!(
            analysis.classification.is_seq_cm_hom,
            "shellable complex must be sequentially CM: facets {:?}",
            el.complex.facets()
        );
        assert!(analysis.table.is_trivial());
    }
}

#[test]
fn forest_elements_have_trivial_tables() {
    let spec = CorpusSpec { family: Family::Forest, n: 5, count: 10, seed: 2 };
    for el in generate(&spec).unwrap() {
        assert!(lyutab_core::corpus::is_simplicial_forest(el.complex.facets()));
        let ideal = el.ideal().unwrap();
        let (analysis, _checks) = classify_and_verify(&ideal, &Rationals).unwrap();
        assert!(
            analysis.classification.is_seq_cm_hom,
            "facet ideal of a forest must be sequentially CM: facets {:?}",
            el.complex.facets()
        );
        assert!(analysis.table.is_trivial());
    }
}

#[test]
fn random_elements_pass_all_checks_in_both_characteristics() {
    let spec = CorpusSpec { family: Family::Random { q: 0.35 }, n: 5, count: 12, seed: 3 };
    let elements = generate(&spec).unwrap();
    let f2 = PrimeField::new(2).unwrap();
    for el in &elements {
        let ideal = el.ideal().unwrap();
        // classify_and_verify errors hard on any failed implication
        classify_and_verify(&ideal, &Rationals).unwrap();
        classify_and_verify(&ideal, &f2).unwrap();
    }
}
