#![no_main]
use aqsc_core::geometry::EdgePairing;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(pairing) = serde_json::from_slice::<EdgePairing>(data) {
        if pairing.n_edges() <= 4096 {
            let cycles = pairing.vertex_cycles();
            assert_eq!(cycles.iter().map(Vec::len).sum::<usize>(), pairing.n_edges());
        }
    }
});
