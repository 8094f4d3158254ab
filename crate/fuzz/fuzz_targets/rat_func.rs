#![no_main]

use exactq::RatFunc;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(r) = text.parse::<RatFunc>() {
        let again: RatFunc = r.to_string().parse().expect("display output must parse");
        assert_eq!(r, again);
    }
});
