#![no_main]
use aqsc_core::design::CodeParameters;
use aqsc_core::{SchlafliSymbol, Surface};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let _ = serde_json::from_slice::<Surface>(data);
    let _ = serde_json::from_slice::<SchlafliSymbol>(data);
    if let Ok(record) = serde_json::from_slice::<CodeParameters>(data) {
        let _ = record.notation();
        if record.n > 0 && i64::try_from(record.n).is_ok() && i64::try_from(record.k).is_ok() {
            let _ = record.rate();
        }
    }
});
