#![no_main]

use exactq::LaurentPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(p) = text.parse::<LaurentPoly>() {
        let again: LaurentPoly = p.to_string().parse().expect("display output must parse");
        assert_eq!(p, again);
    }
});
