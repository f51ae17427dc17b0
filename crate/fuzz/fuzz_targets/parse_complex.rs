#![no_main]
use aqsc_core::oracle::{css_from_complex, parse_complex, write_complex};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(complex) = parse_complex(text) else { return };
    assert_eq!(parse_complex(&write_complex(&complex)).as_ref(), Ok(&complex));
    if complex.n_edges() <= 256 {
        if let Ok(code) = css_from_complex(&complex) {
            assert!(code.commutes());
        }
    }
});
