//! Golden-file suite plus a seeded randomized battery.
//!
//! A golden case is a JSON object
//! `{"args": [..], "files": {name: json}, "exit": code, "output": json}`;
//! the arguments are run with the named files served from `files`, and both
//! the exit code and the parsed output must match. `"stdout"` (a string)
//! may replace `"output"` for non-JSON output.

use std::collections::BTreeMap;
use std::path::Path;

use gsft_core::equivalence::{se_between_augmentation_and_extension, verify_se};
use gsft_core::gsft::{augmentation_matrix, extension_matrix, is_inert, zeta_equal};
use gsft_core::{FiniteGroup, IntMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::sample;

/// Golden cases compiled into the binary, by name.
pub const EMBEDDED: &[(&str, &str)] = &[
    ("augment_example", include_str!("../golden/augment_example.json")),
    ("extend_example", include_str!("../golden/extend_example.json")),
    ("inert_example", include_str!("../golden/inert_example.json")),
    ("inert_swap_action", include_str!("../golden/inert_swap_action.json")),
    ("inert_four_vertex", include_str!("../golden/inert_four_vertex.json")),
    ("quotient_swap_action", include_str!("../golden/quotient_swap_action.json")),
    ("quotient_four_vertex", include_str!("../golden/quotient_four_vertex.json")),
    ("census_product_fixed_points", include_str!("../golden/census_product_fixed_points.json")),
    ("census_four_vertex_product", include_str!("../golden/census_four_vertex_product.json")),
    ("kimroush_full_two", include_str!("../golden/kimroush_full_two.json")),
    ("kimroush_golden_mean", include_str!("../golden/kimroush_golden_mean.json")),
    ("zeta_equal_example", include_str!("../golden/zeta_equal_example.json")),
    ("weight_example", include_str!("../golden/weight_example.json")),
    ("posmove_left", include_str!("../golden/posmove_left.json")),
    ("se_aug_ext_u", include_str!("../golden/se_aug_ext_u.json")),
    ("lift_se_documented", include_str!("../golden/lift_se_documented.json")),
    ("descend_se_minimal", include_str!("../golden/descend_se_minimal.json")),
];

#[derive(Debug, Default)]
pub struct Report {
    pub passed: Vec<String>,
    pub failures: Vec<(String, String)>,
}

impl Report {
    fn record(&mut self, name: impl Into<String>, result: Result<(), String>) {
        match result {
            Ok(()) => self.passed.push(name.into()),
            Err(e) => self.failures.push((name.into(), e)),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed.len(),
            "failed": self.failures.len(),
            "failures": self.failures.iter().map(|(n, d)| json!({"name": n, "detail": d})).collect::<Vec<_>>(),
        })
    }
}

/// Runs one golden case given as text.
pub fn check_case(text: &str) -> Result<(), String> {
    let case: Value = serde_json::from_str(text).map_err(|e| format!("unreadable golden file: {e}"))?;
    let args: Vec<String> = case["args"]
        .as_array()
        .ok_or("golden file has no \"args\" array")?
        .iter()
        .map(|a| a.as_str().map(str::to_owned).ok_or("non-string argument"))
        .collect::<Result<_, _>>()?;
    let mut files = BTreeMap::new();
    if let Some(map) = case["files"].as_object() {
        for (k, v) in map {
            files.insert(k.clone(), v.to_string());
        }
    }
    let expected_code = case["exit"].as_i64().ok_or("golden file has no \"exit\" code")?;
    let outcome = crate::run(std::iter::once("gsft".to_owned()).chain(args), &mut files);
    if i64::from(outcome.code) != expected_code {
        return Err(format!("exit code {} instead of {expected_code}: {}", outcome.code, outcome.stdout.trim()));
    }
    if let Some(expected) = case.get("output") {
        let got: Value = serde_json::from_str(&outcome.stdout).map_err(|e| format!("output is not JSON: {e}"))?;
        if &got != expected {
            return Err(format!("output differs: got {got}"));
        }
    } else if let Some(expected) = case.get("stdout").and_then(Value::as_str) {
        if outcome.stdout != expected {
            return Err(format!("output differs: got {:?}", outcome.stdout));
        }
    } else {
        return Err("golden file has neither \"output\" nor \"stdout\"".into());
    }
    Ok(())
}

fn golden_cases(dir: Option<&str>) -> Result<Vec<(String, String)>, String> {
    let Some(dir) = dir else {
        return Ok(EMBEDDED.iter().map(|(n, t)| ((*n).to_owned(), (*t).to_owned())).collect());
    };
    let mut paths: Vec<_> = std::fs::read_dir(Path::new(dir))
        .map_err(|e| format!("{dir}: {e}"))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            std::fs::read_to_string(&p)
                .map(|t| (name, t))
                .map_err(|e| format!("{}: {e}", p.display()))
        })
        .collect()
}

fn battery_equivalence(samples: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in 0..samples {
        let group = FiniteGroup::cyclic(rng.gen_range(2..=3)).map_err(|e| e.to_string())?;
        let n = rng.gen_range(1..=3);
        let b = sample::group_ring_matrix(&mut rng, &group, n, 2);
        let inert = is_inert(&b).map_err(|e| e.to_string())?.is_inert();
        let zeta = zeta_equal(&b).map_err(|e| e.to_string())?;
        if inert != zeta {
            return Err(format!("sample {k}: inert = {inert} but zeta_equal = {zeta}"));
        }
        let pa = augmentation_matrix(&b).reciprocal_charpoly().map_err(|e| e.to_string())?;
        let pe = extension_matrix(&b)
            .and_then(|e| e.matrix.reciprocal_charpoly())
            .map_err(|e| e.to_string())?;
        if !pa.divides(&pe) {
            return Err(format!("sample {k}: augmentation polynomial does not divide"));
        }
    }
    Ok(())
}

fn battery_fixed_points() -> Result<(), String> {
    let x = IntMatrix::from_i64(&[&[2]]);
    let u = IntMatrix::from_i64(&[&[1, 1], &[1, 0]]);
    let y = IntMatrix::from_i64(&[&[0, 1, 0, 0], &[0, 0, 1, 1], &[1, 1, 0, 0], &[0, 0, 1, 0]]);
    let tr = |a: &IntMatrix, b: &IntMatrix| a.kronecker(b).and_then(|m| m.trace()).map_err(|e| e.to_string());
    let (xu, xy) = (tr(&x, &u)?, tr(&x, &y)?);
    if xu != 2.into() || xy != 0.into() {
        return Err(format!("fixed points {xu} and {xy} instead of 2 and 0"));
    }
    let det = y.determinant().map_err(|e| e.to_string())?;
    if det != 1.into() && det != (-1).into() {
        return Err(format!("|det| = {det} instead of 1"));
    }
    Ok(())
}

fn battery_witnesses(samples: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa0e);
    for k in 0..samples {
        let group = FiniteGroup::cyclic(rng.gen_range(2..=3)).map_err(|e| e.to_string())?;
        let b = sample::inert_multiple(&mut rng, &group, 3, 2);
        let w = se_between_augmentation_and_extension(&b).map_err(|e| format!("sample {k}: {e}"))?;
        let ext = extension_matrix(&b).map_err(|e| e.to_string())?.matrix;
        let report = verify_se(&augmentation_matrix(&b), &ext, &w).map_err(|e| e.to_string())?;
        if !report.is_valid() {
            return Err(format!("sample {k}: {}", report.first_failure().unwrap_or_default()));
        }
    }
    Ok(())
}

pub fn run(quick: bool, golden_dir: Option<&str>) -> Report {
    let mut report = Report::default();
    match golden_cases(golden_dir) {
        Ok(cases) => {
            for (name, text) in cases {
                report.record(format!("golden/{name}"), check_case(&text));
            }
        }
        Err(e) => report.record("golden", Err(e)),
    }
    let scale = if quick { 1 } else { 10 };
    report.record("battery/inert_iff_zeta_equal", battery_equivalence(20 * scale));
    report.record("battery/fixed_points", battery_fixed_points());
    report.record("battery/augmentation_extension_witness", battery_witnesses(5 * scale));
    report
}
