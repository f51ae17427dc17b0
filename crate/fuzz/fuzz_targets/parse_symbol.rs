#![no_main]
use aqsc_core::SchlafliSymbol;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(sym) = s.parse::<SchlafliSymbol>() {
            assert_eq!(sym.to_string().parse::<SchlafliSymbol>(), Ok(sym));
        }
    }
});
