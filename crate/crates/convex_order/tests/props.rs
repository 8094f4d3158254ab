use std::cmp::Ordering;

use affine_roots::{build_cartan, AffineType};
use convex_order::{format_rational, parse_rational, verify_convexity, ConvexOrderSpec, RootPreorder};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn functional_orders_are_convex(h in proptest::collection::vec(-40i64..40, 3), den in 1i64..9, seed in any::<u64>()) {
        let c = build_cartan(AffineType::A, 2).unwrap();
        let rows = vec![h.iter().map(|x| BigRational::new(BigInt::from(*x), BigInt::from(den))).collect()];
        // Non-generic functionals are rejected; generic ones must be convex.
        if let Ok(o) = ConvexOrderSpec::new(c.clone(), rows, 7) {
            let report = verify_convexity(&c, &o, 7, 40, seed);
            prop_assert!(report.is_convex(), "{:?}", report);
            let roots = c.positive_roots_up_to(7);
            for x in &roots {
                for y in &roots {
                    for z in &roots {
                        if o.cmp_roots(&x.vector, &y.vector) != Ordering::Greater
                            && o.cmp_roots(&y.vector, &z.vector) != Ordering::Greater
                        {
                            prop_assert!(o.cmp_roots(&x.vector, &z.vector) != Ordering::Greater);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn segments_match_inversion_sets(a in 1i64..30, b in 1i64..30) {
        let c = build_cartan(AffineType::A, 1).unwrap();
        let rows = vec![vec![BigRational::from_integer(a.into()), BigRational::from_integer(b.into())]];
        if let Ok(o) = ConvexOrderSpec::new(c.clone(), rows, 40) {
            for n in 0..6 {
                if let Ok(word) = o.reduced_word_from_segment(n, 40) {
                    let mut inv: Vec<_> = c.inversion_set(&word).unwrap().into_iter().map(|r| r.vector).collect();
                    let mut seg: Vec<_> = o.first_n_roots(n, 40).unwrap().into_iter().map(|r| r.vector).collect();
                    inv.sort();
                    seg.sort();
                    prop_assert_eq!(inv, seg);
                }
            }
        }
    }

    #[test]
    fn rational_round_trip(n in any::<i64>(), d in 1i64..i64::MAX) {
        let r = BigRational::new(n.into(), d.into());
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn rational_parser_total(s in "\\PC{0,12}") {
        let _ = parse_rational(&s);
    }
}
