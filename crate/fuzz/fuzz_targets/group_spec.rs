#![no_main]

use gsft_core::json::{group_from_json, group_spec_from_json, group_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else { return };
    let _ = group_spec_from_json(&v);
    if let Ok(g) = group_from_json(&v) {
        let out = group_to_json(&g);
        let back = group_from_json(&out).expect("emitted group re-parses");
        assert_eq!(group_to_json(&back), out);
    }
});
