#![no_main]

use libfuzzer_sys::fuzz_target;
use qshuffle::Word;

fuzz_target!(|text: &str| {
    if let Ok(w) = text.parse::<Word>() {
        let again: Word = w.to_string().parse().expect("display output must parse");
        assert_eq!(w, again);
    }
});
