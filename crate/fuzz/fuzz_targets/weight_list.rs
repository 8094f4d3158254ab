#![no_main]

use analysis_cli::parse_weight_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let _ = parse_weight_list(text);
});
