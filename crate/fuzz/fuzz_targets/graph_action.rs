#![no_main]

use gsft_core::json::{graph_action_from_json, graph_action_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else { return };
    if let Ok(a) = graph_action_from_json(&v) {
        let out = graph_action_to_json(&a);
        let back = graph_action_from_json(&out).expect("emitted action re-parses");
        assert_eq!(graph_action_to_json(&back), out);
    }
});
