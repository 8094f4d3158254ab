use exactq::{LaurentPoly, RatFunc};
use proptest::prelude::*;

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..6, prop::collection::vec(-20i64..20, 0..7)).prop_map(|(low, c)| LaurentPoly::from_small(low, c))
}

fn arb_big_poly() -> impl Strategy<Value = LaurentPoly> {
    (-4i64..4, prop::collection::vec(any::<i64>(), 0..4)).prop_map(|(low, c)| LaurentPoly::from_small(low, c))
}

fn arb_nonzero() -> impl Strategy<Value = LaurentPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn ring_axioms_with_overflowing_coefficients(a in arb_big_poly(), b in arb_big_poly(), c in arb_big_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn bar_is_ring_involution(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_nonzero()) {
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn text_round_trip(a in arb_big_poly()) {
        let s = a.to_string();
        prop_assert_eq!(s.parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn ratfunc_agrees_with_laurent(a in arb_poly(), b in arb_poly()) {
        let (ra, rb) = (RatFunc::from(a.clone()), RatFunc::from(b.clone()));
        prop_assert_eq!((&ra + &rb).to_laurent().unwrap(), &a + &b);
        prop_assert_eq!((&ra * &rb).to_laurent().unwrap(), &a * &b);
        prop_assert_eq!((&ra - &rb).to_laurent().unwrap(), &a - &b);
        prop_assert_eq!(ra.bar().to_laurent().unwrap(), a.bar());
    }

    #[test]
    fn ratfunc_field_laws(a in arb_poly(), b in arb_nonzero(), c in arb_poly(), d in arb_nonzero()) {
        let x = RatFunc::new(a, b).unwrap();
        let y = RatFunc::new(c, d).unwrap();
        let s = &x + &y;
        prop_assert_eq!(&s - &y, x.clone());
        if !y.is_zero() {
            let p = &x * &y;
            prop_assert_eq!((&p / &y).unwrap(), x.clone());
        }
        prop_assert_eq!(x.bar().bar(), x.clone());
        prop_assert_eq!((&x * &y).bar(), &x.bar() * &y.bar());
        let t = x.to_string();
        prop_assert_eq!(t.parse::<RatFunc>().unwrap(), x);
    }
}
