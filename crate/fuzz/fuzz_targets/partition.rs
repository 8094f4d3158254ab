#![no_main]

use libfuzzer_sys::fuzz_target;
use symfun::Partition;

fuzz_target!(|text: &str| {
    if let Ok(p) = text.parse::<Partition>() {
        assert_eq!(p.to_string(), text);
    }
});
