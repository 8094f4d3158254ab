#![no_main]

use analysis_cli::RunConfig;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(c) = RunConfig::parse(text) {
        let again = RunConfig::parse(&c.to_text()).expect("canonical text must parse");
        assert_eq!(c, again);
        assert_eq!(c.hash(), again.hash());
    }
});
