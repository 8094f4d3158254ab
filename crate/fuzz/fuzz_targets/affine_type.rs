#![no_main]

use affine_roots::AffineType;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(t) = AffineType::parse(text) {
        assert_eq!(AffineType::parse(&t.to_string()).ok(), Some(t));
    }
});
