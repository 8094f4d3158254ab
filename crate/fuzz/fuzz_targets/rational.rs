#![no_main]

use convex_order::parse_rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(x) = parse_rational(text) {
        let again = parse_rational(&x.to_string()).expect("display output must parse");
        assert_eq!(x, again);
    }
});
