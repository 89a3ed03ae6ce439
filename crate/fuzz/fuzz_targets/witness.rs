#![no_main]

use gsft_core::json::{group_ring_witness_from_json, group_ring_witness_to_json, int_witness_from_json, int_witness_to_json};
use libfuzzer_sys::fuzz_target;

// Both witness flavours share one decoder surface; try each.
fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else { return };
    if let Ok(w) = int_witness_from_json(&v) {
        let out = int_witness_to_json(&w);
        assert_eq!(int_witness_from_json(&out).expect("emitted witness re-parses"), w);
    }
    if let Ok(w) = group_ring_witness_from_json(&v, None) {
        let out = group_ring_witness_to_json(&w);
        let back = group_ring_witness_from_json(&out, None).expect("emitted witness re-parses");
        assert_eq!(group_ring_witness_to_json(&back), out);
    }
});
