use affine_roots::{build_cartan, AffineType, CartanDatum, WeightVec};
use exactq::{LaurentPoly, RatFunc};
use klr_dims::{
    detect_convention, graded_dim, graded_dim_numerator, gram_crosscheck, permutations_between, Convention, KlrError,
};
use qshuffle::{one_minus_q2, words_of_weight, Word};

fn word(s: &str) -> Word {
    s.parse().unwrap()
}

fn w(v: &[i64]) -> WeightVec {
    WeightVec(v.to_vec())
}

fn over_free(num: LaurentPoly, h: u32) -> RatFunc {
    RatFunc::new(num, one_minus_q2().pow(h)).unwrap()
}

/// All permutations of `0..n` by repeated insertion.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=k).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    out
}

fn cartan(rank: usize) -> CartanDatum {
    build_cartan(AffineType::A, rank).unwrap()
}

#[test]
fn twice_a_simple_root() {
    let c = cartan(1);
    let d = graded_dim(&c, &w(&[2, 0]), &word("0.0"), &word("0.0")).unwrap();
    assert_eq!(d, over_free(LaurentPoly::from_small(-2, vec![1, 0, 1]), 2));
}

#[test]
fn adjacent_simple_roots() {
    let c = cartan(2);
    let nu = w(&[1, 1, 0]);
    assert_eq!(graded_dim(&c, &nu, &word("0.1"), &word("0.1")).unwrap(), over_free(LaurentPoly::one(), 2));
    assert_eq!(
        graded_dim(&c, &nu, &word("0.1"), &word("1.0")).unwrap(),
        over_free(LaurentPoly::monomial_i64(1, 1), 2)
    );
}

#[test]
fn orthogonal_simple_roots() {
    let c = cartan(3);
    assert_eq!(c.dot_nodes(0, 2), 0);
    let nu = w(&[1, 0, 1, 0]);
    assert_eq!(graded_dim(&c, &nu, &word("0.2"), &word("2.0")).unwrap(), over_free(LaurentPoly::one(), 2));
}

#[test]
fn preconditions() {
    let c = cartan(1);
    let err = graded_dim(&c, &w(&[3, 3]), &word("0.0.0.1.1.1"), &word("0.0.0.1.1.1")).unwrap_err();
    assert_eq!(err, KlrError::HeightBoundExceeded { height: 6, bound: 5 });
    assert!(matches!(graded_dim(&c, &w(&[1, 1]), &word("0.0"), &word("0.1")), Err(KlrError::WrongWeight { .. })));
}

#[test]
fn enumeration_matches_brute_force() {
    for (c, nu) in [(cartan(1), w(&[3, 2])), (cartan(2), w(&[2, 1, 1])), (cartan(2), w(&[1, 1, 1]))] {
        let words = words_of_weight(&nu);
        let n = nu.height() as usize;
        for i in &words {
            let mut total = 0;
            for j in &words {
                let found = permutations_between(&nu, i, j).unwrap();
                let mut brute = LaurentPoly::zero();
                let mut count = 0;
                for p in all_permutations(n) {
                    if (0..n).all(|k| j.0[p[k]] == i.0[k]) {
                        count += 1;
                        let inv: i64 = (0..n)
                            .flat_map(|k| (k + 1..n).map(move |l| (k, l)))
                            .filter(|&(k, l)| p[k] > p[l])
                            .map(|(k, l)| -c.dot_nodes(i.0[k] as usize, i.0[l] as usize))
                            .sum();
                        brute = &brute + &LaurentPoly::monomial_i64(1, inv);
                    }
                }
                assert_eq!(found.len(), count);
                assert!(found.iter().all(|b| b.target() == *j));
                assert_eq!(graded_dim_numerator(&c, &nu, i, j).unwrap(), brute);
                total += count;
            }
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }
}

#[test]
fn convention_is_detected_and_holds_up_to_height_four() {
    for rank in [1, 2] {
        let c = cartan(rank);
        let conv = detect_convention(&c, 3).unwrap();
        assert_eq!(conv, Convention::Identity);
        let weights: Vec<WeightVec> = match rank {
            1 => vec![w(&[2, 2]), w(&[3, 1]), w(&[1, 3]), w(&[4, 0])],
            _ => vec![w(&[2, 1, 1]), w(&[1, 2, 1]), w(&[2, 2, 0]), w(&[1, 1, 2])],
        };
        for nu in weights {
            let report = gram_crosscheck(&c, &nu, conv).unwrap();
            let n = words_of_weight(&nu).len();
            assert_eq!(report.rows.len(), n * n);
            assert!(gram_crosscheck(&c, &nu, Convention::Bar).is_err() || report.rows.iter().all(|r| r.gram_numerator == r.gram_numerator.bar()));
        }
    }
}

#[test]
fn csv_rows() {
    let c = cartan(1);
    let report = gram_crosscheck(&c, &w(&[1, 1]), Convention::Identity).unwrap();
    let csv = report.to_csv();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "i,j,numerator");
    assert_eq!(lines.len(), 5);
    assert!(lines.contains(&"0.1,0.1,1*q^0"));
    assert!(lines.contains(&"0.1,1.0,1*q^2"));
}
