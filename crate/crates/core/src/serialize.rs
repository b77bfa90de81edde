//! JSON (de)serialization of resolutions and squarefree modules for the
//! on-disk cache. Scalars are exact literals; subset degrees are sorted
//! 1-based vertex lists, so payloads are byte-stable.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;
use crate::resolution::FreeResolution;
use crate::sqmod::SqfModule;
use crate::subsets;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize)]
struct ResolutionDoc {
    n: usize,
    steps: Vec<Vec<Vec<usize>>>,
    diffs: Vec<MatDoc>,
}

#[derive(Serialize, Deserialize)]
struct MatDoc {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct ModuleDoc {
    n: usize,
    components: Vec<(Vec<usize>, usize)>,
    mult: Vec<(Vec<usize>, usize, MatDoc)>,
}

fn mat_doc<F: Field>(m: &Mat<F>) -> MatDoc {
    MatDoc { rows: m.rows(), cols: m.cols(), entries: m.to_string_rows() }
}

fn mat_from_doc<F: Field>(f: &F, doc: &MatDoc) -> Result<Mat<F>> {
    Mat::from_string_rows(f, doc.rows, doc.cols, &doc.entries)
}

pub fn resolution_to_value<F: Field>(res: &FreeResolution<F>) -> serde_json::Value {
    let doc = ResolutionDoc {
        n: res.n(),
        steps: res
            .steps
            .iter()
            .map(|s| s.iter().map(|&g| subsets::to_vertices(g)).collect())
            .collect(),
        diffs: res.diffs.iter().map(mat_doc).collect(),
    };
    serde_json::to_value(doc).expect("resolution serializes")
}

pub fn resolution_from_value<F: Field>(
    f: &F,
    value: &serde_json::Value,
) -> Result<FreeResolution<F>> {
    let doc: ResolutionDoc = serde_json::from_value(value.clone())
        .map_err(|e| Error::Parse(format!("bad resolution payload: {e}")))?;
    let steps: Result<Vec<Vec<subsets::Mask>>> = doc
        .steps
        .iter()
        .map(|s| s.iter().map(|vs| subsets::from_vertices(vs, doc.n)).collect())
        .collect();
    let diffs: Result<Vec<Mat<F>>> = doc.diffs.iter().map(|d| mat_from_doc(f, d)).collect();
    FreeResolution::from_parts(f, doc.n, steps?, diffs?)
}

pub fn module_to_value<F: Field>(m: &SqfModule<F>) -> serde_json::Value {
    let doc = ModuleDoc {
        n: m.n(),
        components: m
            .components()
            .iter()
            .map(|(&deg, &dim)| (subsets::to_vertices(deg), dim))
            .collect(),
        mult: m
            .mult_entries()
            .iter()
            .map(|(&(deg, j), mat)| (subsets::to_vertices(deg), j as usize + 1, mat_doc(mat)))
            .collect(),
    };
    serde_json::to_value(doc).expect("module serializes")
}

pub fn module_from_value<F: Field>(f: &F, value: &serde_json::Value) -> Result<SqfModule<F>> {
    let doc: ModuleDoc = serde_json::from_value(value.clone())
        .map_err(|e| Error::Parse(format!("bad module payload: {e}")))?;
    let mut comps = BTreeMap::new();
    for (vs, dim) in &doc.components {
        comps.insert(subsets::from_vertices(vs, doc.n)?, *dim);
    }
    let mut mult = BTreeMap::new();
    for (vs, j, mat) in &doc.mult {
        if *j == 0 || *j > doc.n {
            return Err(Error::Parse("multiplication variable out of range".into()));
        }
        mult.insert(
            (subsets::from_vertices(vs, doc.n)?, (*j - 1) as u32),
            mat_from_doc(f, mat)?,
        );
    }
    SqfModule::new(f, doc.n, comps, mult)
}
