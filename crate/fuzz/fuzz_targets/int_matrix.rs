#![no_main]

use gsft_core::json::{int_matrix_from_json, int_matrix_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else { return };
    if let Ok(m) = int_matrix_from_json(&v) {
        let out = int_matrix_to_json(&m);
        assert_eq!(int_matrix_from_json(&out).expect("emitted matrix re-parses"), m);
    }
});
