use std::cmp::Ordering;

use affine_roots::{build_cartan, AffineType, CartanDatum, Root, WeightVec};
use convex_order::{
    cones_meet, nonneg_solution, parse_rational, verify_convexity, ClauseViolation, ConvexOrderSpec, ExplicitOrder,
    OrderError, RootPreorder,
};
use num_rational::BigRational;

fn q(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

fn a1() -> CartanDatum {
    build_cartan(AffineType::A, 1).unwrap()
}

fn a2() -> CartanDatum {
    build_cartan(AffineType::A, 2).unwrap()
}

fn order(c: CartanDatum, rows: &[&[&str]], h: i64) -> Result<ConvexOrderSpec, OrderError> {
    ConvexOrderSpec::new(c, rows.iter().map(|r| r.iter().map(|x| q(x)).collect()).collect(), h)
}

fn root(c: &CartanDatum, v: &[i64]) -> Root {
    c.classify(&WeightVec(v.to_vec())).unwrap()
}

fn vecs(rs: &[Root]) -> Vec<Vec<i64>> {
    rs.iter().map(|r| r.vector.0.clone()).collect()
}

/// Floating-point key `h(α)/ht(α)` for a one-row functional.
fn key(h: &[f64], v: &[i64]) -> f64 {
    let s: f64 = h.iter().zip(v).map(|(a, b)| a * *b as f64).sum();
    s / v.iter().sum::<i64>() as f64
}

#[test]
fn compare_matches_cross_multiplication() {
    let c = a1();
    let o = order(c.clone(), &[&["1", "2"]], 10).unwrap();
    let (a0, a1r, d, d2) = (root(&c, &[1, 0]), root(&c, &[0, 1]), root(&c, &[1, 1]), root(&c, &[2, 2]));
    assert_eq!(o.compare(&a1r, &d).unwrap(), Ordering::Greater);
    assert_eq!(o.compare(&a0, &d).unwrap(), Ordering::Less);
    assert_eq!(o.compare(&d, &d2).unwrap(), Ordering::Equal);
    // Independent oracle: floating keys on every pair of distinct real roots.
    let roots = c.positive_roots_up_to(10);
    for x in &roots {
        for y in &roots {
            if x.is_imaginary() && y.is_imaginary() {
                continue;
            }
            let expect = key(&[1.0, 2.0], &x.vector.0).partial_cmp(&key(&[1.0, 2.0], &y.vector.0)).unwrap();
            assert_eq!(o.compare(x, y).unwrap(), expect, "{x} vs {y}");
        }
    }
}

#[test]
fn degenerate_functional_is_rejected() {
    let err = order(a1(), &[&["1", "1"]], 4).unwrap_err();
    assert!(matches!(err, OrderError::AmbiguousOrder(_, _)));
    assert!(matches!(order(a1(), &[&["1"]], 4).unwrap_err(), OrderError::BadShape { .. }));
    assert!(matches!(order(a1(), &[&["1", "2"], &["0", "1"]], 4).unwrap_err(), OrderError::BadTwoRowShape));
}

#[test]
fn initial_segments_and_words() {
    let c = a1();
    let o = order(c.clone(), &[&["1", "2"]], 20).unwrap();
    assert!(o.first_n_roots(0, 10).unwrap().is_empty());
    assert_eq!(vecs(&o.first_n_roots(2, 10).unwrap()), vec![vec![1, 0], vec![2, 1]]);
    assert_eq!(vecs(&o.first_n_roots(3, 10).unwrap()), vec![vec![1, 0], vec![2, 1], vec![3, 2]]);
    assert_eq!(o.reduced_word_from_segment(1, 10).unwrap(), vec![0]);
    assert_eq!(o.reduced_word_from_segment(2, 10).unwrap(), vec![0, 1]);
    assert_eq!(o.reduced_word_from_segment(3, 10).unwrap(), vec![0, 1, 0]);
    for n in 0..=12 {
        let word = o.reduced_word_from_segment(n, 30).unwrap();
        let mut inv = vecs(&c.inversion_set(&word).unwrap());
        let mut seg = vecs(&o.first_n_roots(n, 30).unwrap());
        inv.sort();
        seg.sort();
        assert_eq!(inv, seg);
    }
    assert!(matches!(o.first_n_roots(50, 4), Err(OrderError::BoundTooSmall(4))));
}

#[test]
fn two_row_order_is_not_of_word_type() {
    // h(α_1) = (0,1), h(α_2) = (1/2,0), h(δ) = 0.
    let c = a2();
    let o = order(c.clone(), &[&["-1/2", "0", "1/2"], &["-1", "1", "0"]], 12).unwrap();
    let sorted = o.sorted_roots(12);
    let target = WeightVec(vec![1, 0, 1]);
    let pos = sorted.iter().position(|r| r.vector == target).unwrap();
    // Everything before δ-α_1 with first coordinate negative keeps growing.
    assert!(matches!(o.first_n_roots(pos + 1, 12), Err(OrderError::NotWordTypeAtScale(_))));
    assert!(o.first_n_roots(1, 12).is_ok());
    // Roots between δ-α̃ and α̃ are its δ-translates and the imaginary roots.
    let between: Vec<&Root> = sorted
        .iter()
        .skip_while(|r| r.vector != target)
        .take_while(|r| r.vector != WeightVec(vec![0, 1, 0]))
        .collect();
    for r in between {
        let p = c.project_p(&r.vector);
        assert!(r.is_imaginary() || p == vec![-1, 0] || p == vec![1, 0], "{r}");
    }
}

#[test]
fn positive_systems() {
    let c = a1();
    let o = order(c.clone(), &[&["1", "2"]], 10).unwrap();
    assert_eq!(o.positive_system_below_delta(10).unwrap(), vec![vec![-1]]);
    assert_eq!(o.positive_system_above_delta(10).unwrap(), vec![vec![1]]);
    let o = order(c, &[&["2", "1"]], 10).unwrap();
    assert_eq!(o.positive_system_below_delta(10).unwrap(), vec![vec![1]]);

    let c = a2();
    let o = order(c.clone(), &[&["1", "31/10", "367/50"]], 12).unwrap();
    let below = o.positive_system_below_delta(12).unwrap();
    let above = o.positive_system_above_delta(12).unwrap();
    assert_eq!(below.len(), 3);
    let mut neg: Vec<Vec<i64>> = below.iter().map(|b| b.iter().map(|x| -x).collect()).collect();
    neg.sort();
    assert_eq!(neg, above);
}

/// Definitional scan for minimal pairs, written independently.
fn is_minimal(o: &ConvexOrderSpec, c: &CartanDatum, alpha: &Root, beta: &Root, gamma: &Root) -> bool {
    let lt = |x: &WeightVec, y: &WeightVec| o.cmp_roots(x, y) == Ordering::Less;
    let le = |x: &WeightVec, y: &WeightVec| o.cmp_roots(x, y) != Ordering::Greater;
    if &beta.vector + &gamma.vector != alpha.vector || !lt(&gamma.vector, &beta.vector) {
        return false;
    }
    for g in c.positive_roots_up_to(alpha.height) {
        let b = &alpha.vector - &g.vector;
        if c.classify(&b).is_some() && lt(&gamma.vector, &g.vector) && le(&g.vector, &b) && lt(&b, &beta.vector) {
            return false;
        }
    }
    true
}

#[test]
fn minimal_pairs() {
    let c = a1();
    let o = order(c.clone(), &[&["1", "2"]], 12).unwrap();
    let p = o.minimal_pair(&root(&c, &[1, 1])).unwrap();
    assert_eq!((p.beta.vector.0.clone(), p.gamma.vector.0.clone()), (vec![0, 1], vec![1, 0]));
    let p = o.minimal_pair(&root(&c, &[2, 1])).unwrap();
    assert_eq!((p.beta.vector.0.clone(), p.gamma.vector.0.clone()), (vec![1, 1], vec![1, 0]));
    assert!(!p.is_real());
    assert!(matches!(o.minimal_pair(&root(&c, &[1, 0])), Err(OrderError::NoPairExists(_))));

    for (c, rows) in [(a1(), vec!["1", "2"]), (a2(), vec!["1", "31/10", "367/50"])] {
        let o = ConvexOrderSpec::new(c.clone(), vec![rows.iter().map(|x| q(x)).collect()], 10).unwrap();
        for alpha in c.positive_roots_up_to(8) {
            if alpha.height == 1 || (alpha.is_imaginary() && alpha.vector != *c.delta()) {
                continue;
            }
            let p = o.minimal_pair(&alpha).unwrap();
            assert!(is_minimal(&o, &c, &alpha, &p.beta, &p.gamma), "{alpha}");
        }
    }
}

#[test]
fn convexity_of_functional_orders() {
    let c = a1();
    let o = order(c.clone(), &[&["1", "2"]], 8).unwrap();
    let report = verify_convexity(&c, &o, 8, 200, 7);
    assert!(report.is_convex(), "{report:?}");
    assert!(report.pairs_checked > 0 && report.cone_samples > 0);

    let c = a2();
    let o = order(c.clone(), &[&["-1/2", "0", "1/2"], &["-1", "1", "0"]], 9).unwrap();
    assert!(verify_convexity(&c, &o, 9, 200, 11).is_convex());
}

#[test]
fn scrambled_order_is_caught() {
    let c = a1();
    let o = order(c.clone(), &[&["1", "2"]], 8).unwrap();
    let explicit = ExplicitOrder::from_preorder(&c, &o, 8);
    assert!(verify_convexity(&c, &explicit, 8, 50, 3).is_convex());
    let bad = explicit.swap_adjacent(&c, 0).unwrap();
    let report = verify_convexity(&c, &bad, 8, 50, 3);
    assert!(report.clause_violations.iter().any(|v| matches!(v, ClauseViolation::Sum { .. })));
}

#[test]
fn cone_separation_lp() {
    let c = a1();
    let (a0, a1r) = (root(&c, &[1, 0]), root(&c, &[0, 1]));
    assert!(cones_meet(&[a0.clone()], &[a1r.clone()]).is_none());
    // α_0 + α_1 = δ: the cones of {α_0, α_1} and {δ} meet.
    let (cc, dd) = cones_meet(&[a0, a1r], &[root(&c, &[1, 1])]).unwrap();
    assert_eq!(cc, vec![q("1/3"), q("1/3")]);
    assert_eq!(dd, vec![q("1/3")]);
    // x + y = 1, x - y = 3 has only the negative solution y = -1.
    let rows = vec![vec![q("1"), q("1")], vec![q("1"), q("-1")]];
    assert!(nonneg_solution(&rows, &[q("1"), q("3")]).is_none());
    assert_eq!(nonneg_solution(&rows, &[q("2"), q("0")]).unwrap(), vec![q("1"), q("1")]);
}

#[test]
fn rational_grammar() {
    assert_eq!(q("-3/6"), BigRational::new((-1).into(), 2.into()));
    assert_eq!(q("7"), BigRational::from_integer(7.into()));
    for bad in ["", "1/0", "1/-2", "+1", "1.5", "a", "1/", "/2", "--1", " 1"] {
        assert!(parse_rational(bad).is_err(), "{bad:?}");
    }
}
