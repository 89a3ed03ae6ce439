#![no_main]

use gsft_core::json::{group_ring_matrix_from_json, group_ring_matrix_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else { return };
    if let Ok(m) = group_ring_matrix_from_json(&v) {
        let out = group_ring_matrix_to_json(&m);
        let back = group_ring_matrix_from_json(&out).expect("emitted matrix re-parses");
        assert_eq!(group_ring_matrix_to_json(&back), out);
    }
});
