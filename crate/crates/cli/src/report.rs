//! Report construction: the JSON documents and the text renderings for the
//! four subcommands. Everything here is deterministic given the analysis.

use lyutab_core::field::Field;
use lyutab_core::lyub::{Analysis, CheckOutcome, CHECK_NAMES};
use lyutab_core::subsets;
use lyutab_core::SquarefreeIdeal;
use std::collections::BTreeMap;

/// Assumption recorded in every classification report: the highest
/// Lyubeznik number is computed from the combinatorial Hochster-Huneke
/// graph on the monomial primes, with no separable-closure adjustment.
pub const HH_ASSUMPTION: &str =
    "highest Lyubeznik number computed as connected components of the combinatorial \
     Hochster-Huneke graph on the monomial minimal primes";

fn outcome_str(o: CheckOutcome) -> &'static str {
    match o {
        CheckOutcome::Pass => "pass",
        CheckOutcome::NotApplicable => "n/a",
    }
}

pub fn table_json<F: Field>(analysis: &Analysis<F>, characteristic: u64) -> serde_json::Value {
    serde_json::json!({
        "d": analysis.table.d(),
        "characteristic": characteristic,
        "table": analysis.table.rows(),
        "trivial": analysis.table.is_trivial(),
    })
}

pub fn table_text<F: Field>(analysis: &Analysis<F>, characteristic: u64) -> String {
    format!(
        "Lyubeznik table (d = {}, characteristic {})\n{}trivial: {}\n",
        analysis.table.d(),
        characteristic,
        analysis.table.to_text(),
        analysis.table.is_trivial()
    )
}

pub fn classify_json<F: Field>(
    analysis: &Analysis<F>,
    checks: &BTreeMap<&'static str, CheckOutcome>,
    characteristic: u64,
) -> serde_json::Value {
    let checks_json: serde_json::Map<String, serde_json::Value> = CHECK_NAMES
        .iter()
        .filter_map(|&name| {
            checks.get(name).map(|&o| (name.to_string(), serde_json::json!(outcome_str(o))))
        })
        .collect();
    serde_json::json!({
        "d": analysis.table.d(),
        "characteristic": characteristic,
        "table": analysis.table.rows(),
        "trivial": analysis.table.is_trivial(),
        "classification": serde_json::to_value(&analysis.classification).expect("serializable"),
        "checks": checks_json,
        "assumptions": [HH_ASSUMPTION],
    })
}

pub fn classify_text<F: Field>(
    analysis: &Analysis<F>,
    checks: &BTreeMap<&'static str, CheckOutcome>,
    characteristic: u64,
) -> String {
    let c = &analysis.classification;
    let mut out = String::new();
    out.push_str(&table_text(analysis, characteristic));
    out.push_str(&format!("depth: {}\n", c.depth));
    out.push_str(&format!("cohen_macaulay: {}\n", c.is_cm));
    out.push_str(&format!("seq_cm_homological: {}\n", c.is_seq_cm_hom));
    out.push_str(&format!("seq_cm_skeleta: {}\n", c.is_seq_cm_duval));
    out.push_str(&format!("canonically_cm: {}\n", c.is_ccm));
    out.push_str(&format!("unmixed: {}\n", c.is_unmixed));
    let lc: Vec<String> = c.lc_nonvanishing.iter().map(usize::to_string).collect();
    out.push_str(&format!("local_cohomology_nonvanishing: {{{}}}\n", lc.join(",")));
    out.push_str(&format!("hochster_huneke_components: {}\n", c.hh_components));
    for (i, p) in c.deficiency_profiles.iter().enumerate() {
        if p.is_zero {
            out.push_str(&format!("K^{i}: zero\n"));
        } else {
            out.push_str(&format!(
                "K^{i}: dim {}, depth {}, cm {}\n",
                p.dim.unwrap(),
                p.depth.unwrap(),
                p.is_cm
            ));
        }
    }
    for name in CHECK_NAMES {
        if let Some(&o) = checks.get(name) {
            out.push_str(&format!("check {name}: {}\n", outcome_str(o)));
        }
    }
    out
}

pub fn duals_json(ideal: &SquarefreeIdeal) -> serde_json::Value {
    let subsets_list = |masks: &[subsets::Mask]| -> Vec<Vec<usize>> {
        masks.iter().map(|&m| subsets::to_vertices(m)).collect()
    };
    let delta = ideal.stanley_reisner_complex();
    let dual = ideal
        .alexander_dual()
        .map(|d| serde_json::json!(subsets_list(d.generators())))
        .unwrap_or(serde_json::Value::Null);
    serde_json::json!({
        "n": ideal.n(),
        "generators": subsets_list(ideal.generators()),
        "facets": subsets_list(delta.facets()),
        "primary_components": subsets_list(&ideal.primary_decomposition()),
        "alexander_dual": dual,
    })
}

pub fn duals_text(ideal: &SquarefreeIdeal) -> String {
    let fmt = |masks: &[subsets::Mask]| -> String {
        if masks.is_empty() {
            return "(none)".into();
        }
        masks
            .iter()
            .map(|&m| {
                let vs: Vec<String> = subsets::to_vertices(m).iter().map(usize::to_string).collect();
                format!("{{{}}}", vs.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    let delta = ideal.stanley_reisner_complex();
    let mut out = String::new();
    out.push_str(&format!("n: {}\n", ideal.n()));
    out.push_str(&format!("generators: {}\n", fmt(ideal.generators())));
    out.push_str(&format!("facets: {}\n", fmt(delta.facets())));
    out.push_str(&format!("primary_components: {}\n", fmt(&ideal.primary_decomposition())));
    match ideal.alexander_dual() {
        Ok(d) => out.push_str(&format!("alexander_dual: {}\n", fmt(d.generators()))),
        Err(_) => out.push_str("alexander_dual: undefined for the zero ideal\n"),
    }
    out
}
