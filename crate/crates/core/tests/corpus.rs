//! Replays the checked-in fuzz seeds through the decoders, with the same
//! re-parse checks as the fuzz targets.

use std::fs;
use std::path::PathBuf;

use gsft_core::json::*;
use serde_json::Value;

fn seeds(target: &str) -> Vec<(String, Value)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            let v = serde_json::from_slice(&fs::read(&p).unwrap()).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, v)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn group_spec_seeds() {
    let mut parsed = 0;
    for (name, v) in seeds("group_spec") {
        let _ = group_spec_from_json(&v);
        if let Ok(g) = group_from_json(&v) {
            let out = group_to_json(&g);
            assert_eq!(group_to_json(&group_from_json(&out).unwrap()), out, "{name}");
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}

#[test]
fn int_matrix_seeds() {
    for (name, v) in seeds("int_matrix") {
        let m = int_matrix_from_json(&v).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(int_matrix_from_json(&int_matrix_to_json(&m)).unwrap(), m, "{name}");
    }
}

#[test]
fn group_ring_matrix_seeds() {
    for (name, v) in seeds("group_ring_matrix") {
        let m = group_ring_matrix_from_json(&v).unwrap_or_else(|e| panic!("{name}: {e}"));
        let out = group_ring_matrix_to_json(&m);
        assert_eq!(group_ring_matrix_to_json(&group_ring_matrix_from_json(&out).unwrap()), out, "{name}");
    }
}

#[test]
fn graph_action_seeds() {
    for (name, v) in seeds("graph_action") {
        let a = graph_action_from_json(&v).unwrap_or_else(|e| panic!("{name}: {e}"));
        let out = graph_action_to_json(&a);
        assert_eq!(graph_action_to_json(&graph_action_from_json(&out).unwrap()), out, "{name}");
    }
}

#[test]
fn witness_seeds() {
    for (name, v) in seeds("witness") {
        let int = int_witness_from_json(&v);
        let ring = group_ring_witness_from_json(&v, None);
        assert!(int.is_ok() || ring.is_ok(), "{name} decodes as neither witness kind");
        if let Ok(w) = int {
            assert_eq!(int_witness_from_json(&int_witness_to_json(&w)).unwrap(), w, "{name}");
        }
        if let Ok(w) = ring {
            let out = group_ring_witness_to_json(&w);
            assert_eq!(group_ring_witness_to_json(&group_ring_witness_from_json(&out, None).unwrap()), out, "{name}");
        }
    }
}
