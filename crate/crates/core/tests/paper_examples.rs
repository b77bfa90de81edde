//! End-to-end checks of the worked examples: two coordinate planes, the
//! simplicial-tree ideal, and the irrelevant ideal.

use lyutab_core::field::{PrimeField, Rationals};
use lyutab_core::input::parse_input;
use lyutab_core::lyub::{analyze, classify_and_verify, CheckOutcome};
use lyutab_core::subsets::from_vertices;

#[test]
fn two_planes_table_and_classification() {
    let (ideal, _) = parse_input(r#"{"n":4,"primary_components":[[1,2],[3,4]]}"#).unwrap();
    let (analysis, checks) = classify_and_verify(&ideal, &Rationals).unwrap();
    let t = &analysis.table;
    assert_eq!(t.d(), 2);
    assert_eq!(t.lambda(0, 1), 1);
    assert_eq!(t.lambda(2, 2), 2);
    let total: u64 = t.rows().iter().flatten().sum();
    assert_eq!(total, 3, "no entries besides λ01 and λ22");
    assert!(!t.is_trivial());

    let c = &analysis.classification;
    assert!(!c.is_cm);
    assert!(!c.is_seq_cm_hom);
    assert!(!c.is_seq_cm_duval);
    assert!(c.is_ccm);
    assert!(c.is_unmixed);
    assert_eq!(c.depth, 1);
    assert_eq!(c.hh_components, 2);
    assert_eq!(c.lc_nonvanishing.iter().copied().collect::<Vec<_>>(), vec![2, 3]);

    // deficiency profiles: K^0 = 0; K^1 CM of dim 0; K^2 CM of dim 2
    assert!(c.deficiency_profiles[0].is_zero);
    assert_eq!(c.deficiency_profiles[1].dim, Some(0));
    assert!(c.deficiency_profiles[1].is_cm);
    assert_eq!(c.deficiency_profiles[2].dim, Some(2));
    assert!(c.deficiency_profiles[2].is_cm);

    assert_eq!(checks["seq_cm_implies_trivial_table"], CheckOutcome::NotApplicable);
    assert_eq!(checks["cm_implies_trivial_table"], CheckOutcome::NotApplicable);
    assert_eq!(checks["ccm_implies_column_vanishing"], CheckOutcome::Pass);
    assert_eq!(checks["unmixed_depth_implies_superdiagonal_shape"], CheckOutcome::Pass);
    assert_eq!(checks["highest_lambda_equals_hh_components"], CheckOutcome::Pass);
}

#[test]
fn two_planes_quotient_profile() {
    // R/I has dim 2, depth 1, and is not CM; the depth comes from the
    // nonvanishing Ext set {2,3}, and independently from the disconnected
    // complex via the skeleton test.
    let (ideal, delta) = parse_input(r#"{"n":4,"facets":[[1,2],[3,4]]}"#).unwrap();
    let m = lyutab_core::sqmod::SqfModule::quotient(&Rationals, &ideal);
    let profile = lyutab_core::sqmod::module_profile(&m).unwrap();
    assert_eq!(profile.dim, Some(2));
    assert_eq!(profile.depth, Some(1));
    assert!(!profile.is_cm);
    assert_eq!(profile.nonvanishing_ext.iter().copied().collect::<Vec<_>>(), vec![2, 3]);
    assert!(!lyutab_core::homology::is_cohen_macaulay(&delta, &Rationals).unwrap());
}

#[test]
fn tree_ideal_is_sequentially_cm_with_trivial_table() {
    let (ideal, _) = parse_input(r#"{"n":4,"primary_components":[[1,3],[2,3],[4]]}"#).unwrap();
    // the generator supports {3,4} and {1,2,4} form a simplicial tree
    assert!(lyutab_core::corpus::is_simplicial_forest(ideal.generators()));

    let (analysis, checks) = classify_and_verify(&ideal, &Rationals).unwrap();
    assert_eq!(analysis.table.d(), 3);
    assert!(analysis.table.is_trivial());
    let c = &analysis.classification;
    assert!(c.is_seq_cm_hom);
    assert!(c.is_seq_cm_duval);
    assert!(!c.is_cm);
    assert_eq!(c.lc_nonvanishing.iter().copied().collect::<Vec<_>>(), vec![1, 2]);
    assert_eq!(checks["seq_cm_implies_trivial_table"], CheckOutcome::Pass);
    assert_eq!(checks["cm_implies_trivial_table"], CheckOutcome::NotApplicable);
}

#[test]
fn irrelevant_ideal_over_prime_field() {
    let (ideal, _) = parse_input(r#"{"n":4,"generators":[[1],[2],[3],[4]]}"#).unwrap();
    let analysis = analyze(&ideal, &PrimeField::new(2).unwrap()).unwrap();
    assert_eq!(analysis.table.d(), 0);
    assert_eq!(analysis.table.lambda(0, 0), 1);
    assert!(analysis.classification.is_cm);
}

#[test]
fn complete_intersection_examples() {
    // (x1,x2) in n=4: only K^2 nonzero, CM of dimension 2; lc = {2}
    let (ideal, _) = parse_input(r#"{"n":4,"generators":[[1],[2]]}"#).unwrap();
    let analysis = analyze(&ideal, &Rationals).unwrap();
    let c = &analysis.classification;
    assert!(c.is_cm);
    assert!(analysis.table.is_trivial());
    assert_eq!(c.lc_nonvanishing.iter().copied().collect::<Vec<_>>(), vec![2]);
    for (i, p) in c.deficiency_profiles.iter().enumerate() {
        if i == 2 {
            assert_eq!(p.dim, Some(2));
            assert!(p.is_cm);
        } else {
            assert!(p.is_zero);
        }
    }
}

#[test]
fn second_level_resolution_of_the_canonical_module() {
    // For two planes, K^2 is two point modules; its minimal resolution has
    // total Betti numbers (2, 4, 2), with both top generators in degree
    // {1,2,3,4} — these are what feed λ_{2,2} = 2.
    let (ideal, _) = parse_input(r#"{"n":4,"primary_components":[[1,2],[3,4]]}"#).unwrap();
    let analysis = analyze(&ideal, &Rationals).unwrap();
    let k2 = &analysis.ext[2];
    let res = lyutab_core::resolution::minimal_free_resolution(k2).unwrap();
    assert_eq!(res.betti_total(), vec![2, 4, 2]);
    assert_eq!(res.betti(2, from_vertices(&[1, 2, 3, 4], 4).unwrap()), 2);
}
