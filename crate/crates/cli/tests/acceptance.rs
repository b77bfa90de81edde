//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Exact integer equality everywhere; the only tolerances are the
//! stated runtime and memory budgets.
//!
//! Run with `cargo test -p lyutab-cli --test acceptance -- --nocapture`.

use lyutab_core::corpus::{generate, CorpusElement, CorpusSpec, Family};
use lyutab_core::field::{Field, PrimeField, Rationals};
use lyutab_core::homology::{is_cohen_macaulay, reduced_homology};
use lyutab_core::input::parse_input;
use lyutab_core::lyub::{analyze, classify_and_verify, verify, Analysis};
use lyutab_core::subsets;
use lyutab_core::SquarefreeIdeal;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

fn inputs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../inputs")
}

fn load(name: &str) -> SquarefreeIdeal {
    let text = std::fs::read_to_string(inputs().join(name)).unwrap();
    parse_input(&text).unwrap().0
}

fn criterion(number: u32, description: &str, run: impl FnOnce() + std::panic::UnwindSafe) {
    match std::panic::catch_unwind(run) {
        Ok(()) => println!("ACCEPTANCE {number:02} PASS — {description}"),
        Err(e) => {
            println!("ACCEPTANCE {number:02} FAIL — {description}");
            std::panic::resume_unwind(e);
        }
    }
}

/// The mixed corpus behind criteria 4-10: random, shellable and forest
/// families, n ≤ 6, 240 elements in total.
fn full_corpus() -> Vec<CorpusElement> {
    let specs = [
        CorpusSpec { family: Family::Random { q: 0.5 }, n: 4, count: 60, seed: 1001 },
        CorpusSpec { family: Family::Random { q: 0.35 }, n: 5, count: 60, seed: 1002 },
        CorpusSpec { family: Family::Random { q: 0.25 }, n: 6, count: 40, seed: 1003 },
        CorpusSpec { family: Family::NonpureShellable, n: 5, count: 30, seed: 1004 },
        CorpusSpec { family: Family::NonpureShellable, n: 6, count: 20, seed: 1005 },
        CorpusSpec { family: Family::Forest, n: 5, count: 20, seed: 1006 },
        CorpusSpec { family: Family::Forest, n: 6, count: 10, seed: 1007 },
    ];
    let mut out = Vec::new();
    for spec in specs {
        out.extend(generate(&spec).unwrap());
    }
    assert!(out.len() >= 200, "property suites need at least 200 complexes");
    out
}

fn seq_cm_family_corpus() -> Vec<CorpusElement> {
    let specs = [
        CorpusSpec { family: Family::NonpureShellable, n: 5, count: 60, seed: 2001 },
        CorpusSpec { family: Family::NonpureShellable, n: 6, count: 40, seed: 2002 },
        CorpusSpec { family: Family::Forest, n: 5, count: 60, seed: 2003 },
        CorpusSpec { family: Family::Forest, n: 6, count: 40, seed: 2004 },
    ];
    let mut out = Vec::new();
    for spec in specs {
        out.extend(generate(&spec).unwrap());
    }
    assert!(out.len() >= 200);
    out
}

/// Analyses of every corpus element over both mandated characteristics.
fn analyses_both_chars(
    corpus: &[CorpusElement],
) -> Vec<(SquarefreeIdeal, Analysis<Rationals>, Analysis<PrimeField>)> {
    use rayon::prelude::*;
    let f2 = PrimeField::new(2).unwrap();
    corpus
        .par_iter()
        .map(|el| {
            let ideal = el.ideal().unwrap();
            let a0 = analyze(&ideal, &Rationals).unwrap();
            let a2 = analyze(&ideal, &f2).unwrap();
            (ideal, a0, a2)
        })
        .collect()
}

fn vm_peak_gib() -> Option<f64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmPeak:"))?;
    let kb: f64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb / (1024.0 * 1024.0))
}

#[test]
fn criterion_01_two_planes_table() {
    criterion(1, "two-planes ideal reproduces λ01=1, λ22=2, d=2 in under a second", || {
        let ideal = load("two_planes.json");
        let t0 = Instant::now();
        let analysis = analyze(&ideal, &Rationals).unwrap();
        let elapsed = t0.elapsed();
        let t = &analysis.table;
        assert_eq!(t.d(), 2);
        assert_eq!(t.lambda(0, 1), 1);
        assert_eq!(t.lambda(2, 2), 2);
        let total: u64 = t.rows().iter().flatten().sum();
        assert_eq!(total, 3, "all other entries vanish");
        assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    });
}

#[test]
fn criterion_02_tree_ideal() {
    criterion(
        2,
        "tree ideal: trivial table d=3, sequentially CM by both oracles, H^r ≠ 0 for r ∈ {1,2}",
        || {
            let ideal = load("tree.json");
            let t0 = Instant::now();
            let (analysis, _checks) = classify_and_verify(&ideal, &Rationals).unwrap();
            let elapsed = t0.elapsed();
            assert_eq!(analysis.table.d(), 3);
            assert!(analysis.table.is_trivial());
            assert!(analysis.classification.is_seq_cm_hom);
            assert!(analysis.classification.is_seq_cm_duval);
            let lc: Vec<usize> =
                analysis.classification.lc_nonvanishing.iter().copied().collect();
            assert_eq!(lc, vec![1, 2]);
            assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
        },
    );
}

#[test]
fn criterion_03_nine_variable_ideal() {
    criterion(
        3,
        "nine-variable 12-component ideal: trivial table d=7, not seq CM, H^r ≠ 0 for r ∈ {2,3,4,5}",
        || {
            let ideal = load("nine_vars.json");
            let t0 = Instant::now();
            let (analysis, _checks) = classify_and_verify(&ideal, &Rationals).unwrap();
            let elapsed = t0.elapsed();
            assert_eq!(analysis.table.d(), 7);
            assert!(analysis.table.is_trivial());
            assert!(!analysis.classification.is_seq_cm_hom);
            assert!(!analysis.classification.is_seq_cm_duval);
            let lc: Vec<usize> =
                analysis.classification.lc_nonvanishing.iter().copied().collect();
            assert_eq!(lc, vec![2, 3, 4, 5]);
            assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
            if let Some(gib) = vm_peak_gib() {
                assert!(gib < 4.0, "VmPeak {gib:.2} GiB exceeds the 4 GB budget");
            }
            println!("  criterion 3 runtime: {elapsed:?}");
        },
    );
}

#[test]
fn criterion_04_euler_characteristic() {
    criterion(4, "Σ (−1)^(p−i) λ_{p,i} = 1 on every corpus element, char 0 and 2", || {
        let corpus = full_corpus();
        let all = analyses_both_chars(&corpus);
        for (ideal, a0, a2) in &all {
            for a in [a0.table.euler_sum(), a2.table.euler_sum()] {
                assert_eq!(a, 1, "Euler sum failed for {}", lyutab_core::input::canonical_json(ideal));
            }
        }
        println!("  criterion 4 checked {} elements x 2 characteristics", all.len());
    });
}

#[test]
fn criterion_05_table_shape_properties() {
    criterion(5, "λ_{p,i} = 0 for p > i or i > d, and λ_{d,d} ≥ 1, on every element", || {
        let corpus = full_corpus();
        let all = analyses_both_chars(&corpus);
        for (ideal, a0, a2) in &all {
            for t in [&a0.table, &a2.table] {
                let d = t.d();
                for p in 0..=d {
                    for i in 0..p {
                        assert_eq!(
                            t.lambda(p, i),
                            0,
                            "entry below the diagonal for {}",
                            lyutab_core::input::canonical_json(ideal)
                        );
                    }
                }
                assert!(t.highest() >= 1);
            }
        }
    });
}

#[test]
fn criterion_06_seq_cm_implies_trivial() {
    criterion(
        6,
        "sequentially CM ⇒ trivial table, zero violations on shellable and forest families",
        || {
            let corpus = seq_cm_family_corpus();
            let all = analyses_both_chars(&corpus);
            let mut seq_cm_count = 0usize;
            for (ideal, a0, a2) in &all {
                assert!(
                    a0.classification.is_seq_cm_hom && a0.classification.is_seq_cm_duval,
                    "family element not sequentially CM: {}",
                    lyutab_core::input::canonical_json(ideal)
                );
                assert!(a0.table.is_trivial());
                assert!(a2.classification.is_seq_cm_hom);
                assert!(a2.table.is_trivial());
                seq_cm_count += 2;
            }
            println!("  criterion 6: {seq_cm_count} sequentially CM classifications, all trivial");
        },
    );
}

#[test]
fn criterion_07_oracle_agreement() {
    criterion(7, "homological and skeleton seq-CM oracles agree on 100% of elements", || {
        let corpus = full_corpus();
        let all = analyses_both_chars(&corpus);
        for (ideal, a0, a2) in &all {
            for a in [&a0.classification, &a2.classification] {
                assert_eq!(
                    a.is_seq_cm_hom,
                    a.is_seq_cm_duval,
                    "oracle disagreement on {}",
                    lyutab_core::input::canonical_json(ideal)
                );
            }
        }
    });
}

#[test]
fn criterion_08_highest_number_is_graph_count() {
    criterion(8, "λ_{d,d} equals the Hochster-Huneke component count; CM ⇒ λ_{d,d} = 1", || {
        let corpus = full_corpus();
        let all = analyses_both_chars(&corpus);
        for (ideal, a0, a2) in &all {
            assert_eq!(
                a0.table.highest(),
                a0.classification.hh_components as u64,
                "λ_dd mismatch on {}",
                lyutab_core::input::canonical_json(ideal)
            );
            assert_eq!(a2.table.highest(), a2.classification.hh_components as u64);
            if a0.classification.is_cm {
                assert_eq!(a0.table.highest(), 1);
            }
            if a2.classification.is_cm {
                assert_eq!(a2.table.highest(), 1);
            }
        }
    });
}

#[test]
fn criterion_09_ccm_and_unmixed_shapes() {
    criterion(
        9,
        "CCM ⇒ λ_{i,d} = 0 for i < d; unmixed/depth hypothesis forces the superdiagonal shape",
        || {
            let corpus = full_corpus();
            let all = analyses_both_chars(&corpus);
            let mut ccm_hits = 0usize;
            let mut shape_hits = 0usize;
            for (ideal, a0, a2) in &all {
                let (c0, h0) = check_shapes(&a0.table, &a0.classification, ideal);
                let (c2, h2) = check_shapes(&a2.table, &a2.classification, ideal);
                ccm_hits += c0 + c2;
                shape_hits += h0 + h2;
            }
            assert!(ccm_hits > 0, "the corpus should contain CCM elements");
            assert!(shape_hits > 0, "the corpus should exercise the unmixed case");
            println!("  criterion 9: {ccm_hits} CCM cases, {shape_hits} unmixed-shape cases");
        },
    );
}

/// Returns (1 if the CCM column check applied, 1 if the unmixed shape
/// check applied); panics on any violation.
fn check_shapes(
    t: &lyutab_core::LyubeznikTable,
    c: &lyutab_core::Classification,
    ideal: &SquarefreeIdeal,
) -> (usize, usize) {
    let d = c.d;
    let mut applied = (0, 0);
    if c.is_ccm {
        applied.0 = 1;
        for i in 0..d {
            assert_eq!(
                t.lambda(i, d),
                0,
                "CCM column violation on {}",
                lyutab_core::input::canonical_json(ideal)
            );
        }
    }
    let depth_ok = (0..d).all(|i| match c.deficiency_profiles[i].depth {
        None => true,
        Some(dep) => dep + 1 >= i,
    });
    if c.is_unmixed && depth_ok {
        applied.1 = 1;
        let mut sum = 0u64;
        for p in 0..=d {
            for i in p..=d {
                let v = t.lambda(p, i);
                if v == 0 {
                    continue;
                }
                let on_super = i == p + 1 && i + 1 <= d;
                let corner = p == d && i == d;
                assert!(
                    on_super || corner,
                    "shape violation on {}",
                    lyutab_core::input::canonical_json(ideal)
                );
                if on_super {
                    sum += v;
                }
            }
        }
        assert_eq!(sum, t.highest() - 1, "sum relation violated");
    }
    applied
}

#[test]
fn criterion_10_hochster_formula_cross_validation() {
    criterion(
        10,
        "dim Ext^{n-i}(R/I,ω)_F equals the reduced link-homology dimension for every (i,F)",
        || {
            use rayon::prelude::*;
            let corpus = full_corpus();
            let f2 = PrimeField::new(2).unwrap();
            corpus.par_iter().for_each(|el| {
                let ideal = el.ideal().unwrap();
                hochster_check(&ideal, &Rationals);
                hochster_check(&ideal, &f2);
            });
            println!("  criterion 10 cross-validated {} elements x 2 characteristics", corpus.len());
        },
    );
}

fn hochster_check<F: Field>(ideal: &SquarefreeIdeal, f: &F) {
    let n = ideal.n();
    let delta = ideal.stanley_reisner_complex();
    let m = lyutab_core::sqmod::SqfModule::quotient(f, ideal);
    let res = lyutab_core::resolution::minimal_free_resolution(&m).unwrap();
    let ext = lyutab_core::ext::ext_modules(&res).unwrap();
    for deg in 0..(1u32 << n) {
        if !delta.is_face(deg) {
            for e in &ext {
                assert_eq!(e.dim_at(deg), 0, "nonzero Ext fiber outside the complex");
            }
            continue;
        }
        let link = delta.link(deg).unwrap();
        let h = reduced_homology(&link, f).unwrap();
        let fcard = subsets::card(deg) as isize;
        for i in 0..=n {
            assert_eq!(
                ext[n - i].dim_at(deg),
                h.betti(i as isize - fcard - 1),
                "Hochster mismatch at i={i}, F={:?} for {}",
                subsets::to_vertices(deg),
                lyutab_core::input::canonical_json(ideal)
            );
        }
    }
}

#[test]
fn criterion_11_characteristic_sensitivity() {
    criterion(
        11,
        "projective-plane complex is CM over Q but not over F_2, and the reports differ",
        || {
            let text = std::fs::read_to_string(inputs().join("projective_plane.json")).unwrap();
            let (ideal, delta) = parse_input(&text).unwrap();
            let f2 = PrimeField::new(2).unwrap();
            // Reisner on the complex itself
            assert!(is_cohen_macaulay(&delta, &Rationals).unwrap());
            assert!(!is_cohen_macaulay(&delta, &f2).unwrap());
            // classification over both fields
            let a0 = analyze(&ideal, &Rationals).unwrap();
            let a2 = analyze(&ideal, &f2).unwrap();
            verify(&a0).unwrap();
            verify(&a2).unwrap();
            assert!(a0.classification.is_cm);
            assert!(a0.table.is_trivial());
            assert!(!a2.classification.is_cm);
            assert!(!a2.table.is_trivial());
            // the rendered reports differ between --char 0 and --char 2
            let bin = env!("CARGO_BIN_EXE_lyutab");
            let path = inputs().join("projective_plane.json");
            let run = |ch: &str| {
                std::process::Command::new(bin)
                    .args(["classify", path.to_str().unwrap(), "--char", ch, "--format", "json"])
                    .output()
                    .unwrap()
            };
            let (r0, r2) = (run("0"), run("2"));
            assert!(r0.status.success() && r2.status.success());
            assert_ne!(r0.stdout, r2.stdout);
        },
    );
}
