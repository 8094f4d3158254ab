#![no_main]

use affine_roots::WeightVec;
use libfuzzer_sys::fuzz_target;
use qshuffle::{decode_gram, encode_gram};

/// Weights above this height enumerate too many words to be useful here.
const MAX_HEIGHT: i64 = 6;

fuzz_target!(|text: &str| {
    // Take the expected hash and weight from the input's own header so that
    // real cache files make good seeds.
    let mut lines = text.lines().skip(1);
    let hash = lines.next().and_then(|l| l.strip_prefix("cartan=")).unwrap_or("");
    let nu: Option<Vec<i64>> = lines
        .next()
        .and_then(|l| l.strip_prefix("nu="))
        .and_then(|l| l.split(',').map(|x| x.parse().ok()).collect());
    let Some(nu) = nu.filter(|v| v.len() <= 8 && v.iter().all(|&x| (0..=MAX_HEIGHT).contains(&x))) else {
        return;
    };
    let nu = WeightVec(nu);
    if nu.height() > MAX_HEIGHT {
        return;
    }
    let check = |input: &str| {
        if let Ok(g) = decode_gram(input, hash, &nu) {
            let again = decode_gram(&encode_gram(&g, hash), hash, &nu).expect("encoded matrix must decode");
            assert_eq!(g, again);
        }
    };
    check(text);
    // Re-seal the body with a valid checksum to reach the entry parser.
    let body = text.rfind("crc=").map_or(text, |k| &text[..k]);
    check(&format!("{body}crc={:08x}\n", crc32fast::hash(body.as_bytes())));
});
