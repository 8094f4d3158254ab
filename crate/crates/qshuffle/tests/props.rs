use std::collections::BTreeMap;

use affine_roots::{build_cartan, AffineType, WeightVec};
use exactq::LaurentPoly;
use proptest::prelude::*;
use qshuffle::{bar_dual, shuffle_mul, words_of_weight, ShuffleVec, Side, Word};

fn vector(n: usize, letters: Vec<u8>, coeffs: Vec<(i64, i64)>) -> ShuffleVec {
    let word = Word(letters);
    let weight = word.weight(n);
    let words = words_of_weight(&weight);
    let mut m = BTreeMap::new();
    for (k, (e, c)) in coeffs.into_iter().enumerate() {
        if c != 0 {
            m.insert(words[k % words.len()].clone(), LaurentPoly::from_small(e, vec![c]));
        }
    }
    if m.is_empty() {
        m.insert(word, LaurentPoly::one());
    }
    ShuffleVec::from_parts(Side::Dual, weight, m, LaurentPoly::one()).unwrap()
}

fn arb_vec(n: usize) -> impl Strategy<Value = ShuffleVec> {
    (
        prop::collection::vec(0..n as u8, 1..=3),
        prop::collection::vec((-3i64..=3, -4i64..=4), 1..=3),
    )
        .prop_map(move |(l, c)| vector(n, l, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn associative(a in arb_vec(3), b in arb_vec(3), c in arb_vec(3)) {
        let cd = build_cartan(AffineType::A, 2).unwrap();
        let l = shuffle_mul(&cd, &shuffle_mul(&cd, &a, &b).unwrap(), &c).unwrap();
        let r = shuffle_mul(&cd, &a, &shuffle_mul(&cd, &b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn twisted_antimultiplicative_bar(a in arb_vec(2), b in arb_vec(2)) {
        let cd = build_cartan(AffineType::A, 1).unwrap();
        let lhs = bar_dual(&shuffle_mul(&cd, &a, &b).unwrap()).unwrap();
        let rhs = shuffle_mul(&cd, &bar_dual(&b).unwrap(), &bar_dual(&a).unwrap()).unwrap();
        let t = LaurentPoly::monomial_i64(1, cd.form(a.weight(), b.weight()));
        prop_assert_eq!(lhs, rhs.scale_laurent(&t));
    }

    #[test]
    fn word_text_round_trip(letters in prop::collection::vec(any::<u8>(), 0..8)) {
        let w = Word(letters);
        let back: Word = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn words_of_weight_counts(a in 0i64..4, b in 0i64..4) {
        let ws = words_of_weight(&WeightVec(vec![a, b]));
        let mut binom = 1u64;
        for k in 0..b as u64 { binom = binom * (a as u64 + b as u64 - k) / (k + 1); }
        prop_assert_eq!(ws.len() as u64, binom);
        prop_assert!(ws.windows(2).all(|p| p[0] < p[1]));
    }
}
