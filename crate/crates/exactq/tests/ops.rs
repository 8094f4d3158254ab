use exactq::{bar, divide_exact, q_factorial, q_int, ExactError, LaurentPoly, RatFunc};
use std::collections::BTreeMap;

fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, c)))
}

/// Schoolbook multiplication on exponent maps, independent of the crate.
fn oracle_mul(a: &BTreeMap<i64, i128>, b: &BTreeMap<i64, i128>) -> BTreeMap<i64, i128> {
    let mut out = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[test]
fn quantum_integers() {
    assert_eq!(q_int(1), LaurentPoly::one());
    assert_eq!(q_int(2), lp(&[(-1, 1), (1, 1)]));
    assert_eq!(q_int(3), lp(&[(-2, 1), (0, 1), (2, 1)]));
    for n in 0..8 {
        assert!(q_int(n).is_bar_invariant());
    }
}

#[test]
fn quantum_factorials() {
    assert_eq!(q_factorial(0), LaurentPoly::one());
    assert_eq!(q_factorial(2), lp(&[(-1, 1), (1, 1)]));
    let two: BTreeMap<i64, i128> = [(-1, 1), (1, 1)].into_iter().collect();
    let three: BTreeMap<i64, i128> = [(-2, 1), (0, 1), (2, 1)].into_iter().collect();
    let expect = oracle_mul(&two, &three);
    let got: BTreeMap<i64, i128> = q_factorial(3)
        .terms()
        .into_iter()
        .map(|(e, c)| (e, i128::try_from(c).unwrap()))
        .collect();
    assert_eq!(got, expect);
    assert_eq!(q_factorial(3), lp(&[(-3, 1), (-1, 2), (1, 2), (3, 1)]));
}

#[test]
fn bar_examples() {
    assert_eq!(bar(&lp(&[(0, 3), (2, 1)])), lp(&[(-2, 1), (0, 3)]));
    assert_eq!(bar(&LaurentPoly::zero()), LaurentPoly::zero());
    assert_eq!(bar(&lp(&[(0, 1), (1, 1)])), lp(&[(-1, 1), (0, 1)]));
}

#[test]
fn exact_division_examples() {
    let a = lp(&[(-2, -1), (2, 1)]);
    let b = lp(&[(-1, -1), (1, 1)]);
    assert_eq!(divide_exact(&a, &b).unwrap(), lp(&[(-1, 1), (1, 1)]));
    assert_eq!(divide_exact(&lp(&[(0, 1), (2, 1)]), &lp(&[(1, 1)])).unwrap(), lp(&[(-1, 1), (1, 1)]));
    assert_eq!(divide_exact(&lp(&[(0, 1), (1, 1)]), &lp(&[(0, 1), (2, 1)])), Err(ExactError::NotDivisible));
    assert_eq!(divide_exact(&a, &LaurentPoly::zero()), Err(ExactError::DivisionByZero));
}

#[test]
fn rendering_grammar() {
    assert_eq!(LaurentPoly::zero().to_string(), "0");
    assert_eq!(lp(&[(-1, 1), (1, 1)]).to_string(), "1*q^-1 + 1*q^1");
    assert_eq!(lp(&[(0, -3), (4, 2)]).to_string(), "-3*q^0 + 2*q^4");
    for s in ["0", "1*q^0", "-7*q^-3 + 2*q^5"] {
        assert_eq!(s.parse::<LaurentPoly>().unwrap().to_string(), s);
    }
    for bad in ["", "1", "q^2", "1*q^2 + 1*q^1", "0*q^1", "1*q^1+1*q^2", "01*q^0", "-0*q^0", "1*q^0 + 1*q^0"] {
        assert!(bad.parse::<LaurentPoly>().is_err(), "{bad:?} accepted");
    }
}

#[test]
fn overflow_promotes_to_big_integers() {
    let big = LaurentPoly::monomial_i64(i64::MAX, 0);
    let s = &big + &big;
    assert_eq!(s.coeff(0), num_bigint::BigInt::from(i64::MAX) * 2);
    let p = big.mul_ref(&big);
    assert_eq!(p.coeff(0), num_bigint::BigInt::from(i64::MAX) * num_bigint::BigInt::from(i64::MAX));
    let back = p.divide_exact(&big).unwrap();
    assert_eq!(back, big);
    assert_eq!(&(&s - &big) - &big, LaurentPoly::zero());
}

#[test]
fn ratfunc_normal_form() {
    let one_minus_q2 = lp(&[(0, 1), (2, -1)]);
    let r = RatFunc::new(lp(&[(0, 1), (1, 1)]), one_minus_q2.clone()).unwrap();
    // (1+q)/(1-q^2) = 1/(1-q) = -1/(q-1)
    assert_eq!(r.numer(), &lp(&[(0, -1)]));
    assert_eq!(r.denom(), &lp(&[(0, -1), (1, 1)]));
    let x = RatFunc::new(one_minus_q2.clone(), one_minus_q2.clone()).unwrap();
    assert!(x.is_one());
    // q-powers move to the numerator.
    let y = RatFunc::new(LaurentPoly::one(), lp(&[(2, 1)])).unwrap();
    assert_eq!(y.to_laurent().unwrap(), lp(&[(-2, 1)]));
    assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    let s = r.to_string();
    assert_eq!(s.parse::<RatFunc>().unwrap(), r);
}

#[test]
fn polynomial_gcd() {
    use exactq::{gcd, q_int, LaurentPoly};
    let a = q_int(2).mul_ref(&q_int(3)).shift(5);
    let b = q_int(2).mul_ref(&q_int(4)).scale(&(-6).into());
    // [2] = q^{-1}(1+q^2) up to units; gcd([2][3], -6[2][4]) = 1 + q^2.
    assert_eq!(gcd(&a, &b), LaurentPoly::from_small(0, vec![1, 0, 1]));
    assert_eq!(gcd(&LaurentPoly::zero(), &b.scale(&(-1).into())), gcd(&b, &b));
    assert!(gcd(&LaurentPoly::zero(), &LaurentPoly::zero()).is_zero());
}
