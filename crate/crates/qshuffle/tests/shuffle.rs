use std::collections::BTreeMap;

use affine_roots::{build_cartan, AffineType, CartanDatum, WeightVec};
use exactq::{LaurentPoly, RatFunc};
use qshuffle::{
    bar_dual, bar_f, concat_mul, deconcat, divided_power_letter, f_pair, one_minus_q2, serre_element, shuffle_mul,
    theta_letter, theta_word, words_of_weight, GramMatrix, ShuffleVec, Side, Word,
};

fn a1() -> CartanDatum {
    build_cartan(AffineType::A, 1).unwrap()
}

fn a2() -> CartanDatum {
    build_cartan(AffineType::A, 2).unwrap()
}

fn lp(low: i64, c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_small(low, c.to_vec())
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn unit(c: &CartanDatum, s: &str) -> ShuffleVec {
    ShuffleVec::unit(Side::Dual, w(s), c.n_nodes())
}

fn vec_of(c: &CartanDatum, side: Side, terms: &[(&str, LaurentPoly)]) -> ShuffleVec {
    let weight = w(terms[0].0).weight(c.n_nodes());
    let coords: BTreeMap<Word, LaurentPoly> = terms.iter().map(|(s, p)| (w(s), p.clone())).collect();
    ShuffleVec::from_parts(side, weight, coords, LaurentPoly::one()).unwrap()
}

fn over_gram_den(p: LaurentPoly, h: u32) -> RatFunc {
    RatFunc::new(p, one_minus_q2().pow(h)).unwrap()
}

/// Shuffle product straight from the definition: every subset of positions
/// for the left factor, exponent `−Σ_{k∈S, l∉S, l<k} w_l·w_k`.
fn brute_shuffle(c: &CartanDatum, a: &ShuffleVec, b: &ShuffleVec) -> ShuffleVec {
    let mut out: BTreeMap<Word, RatFunc> = BTreeMap::new();
    for (u, cu) in a.coords() {
        for (v, cv) in b.coords() {
            let n = u.len() + v.len();
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != u.len() {
                    continue;
                }
                let (mut iu, mut iv) = (u.0.iter(), v.0.iter());
                let word: Vec<u8> =
                    (0..n).map(|k| if mask >> k & 1 == 1 { *iu.next().unwrap() } else { *iv.next().unwrap() }).collect();
                let mut e = 0;
                for k in 0..n {
                    for l in 0..k {
                        if mask >> k & 1 == 1 && mask >> l & 1 == 0 {
                            e += c.dot_nodes(word[l] as usize, word[k] as usize);
                        }
                    }
                }
                let term = &(&cu * &cv) * &RatFunc::from(LaurentPoly::monomial_i64(1, -e));
                let slot = out.entry(Word(word)).or_insert_with(RatFunc::zero);
                *slot = &*slot + &term;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    ShuffleVec::from_ratfuncs(a.side(), a.weight() + b.weight(), out).unwrap()
}

#[test]
fn small_products() {
    let c = a2();
    let ii = shuffle_mul(&c, &unit(&c, "1"), &unit(&c, "1")).unwrap();
    assert_eq!(ii, vec_of(&c, Side::Dual, &[("1.1", lp(-2, &[1, 0, 1]))]));
    let ij = shuffle_mul(&c, &unit(&c, "1"), &unit(&c, "2")).unwrap();
    assert_eq!(ij, vec_of(&c, Side::Dual, &[("1.2", lp(0, &[1])), ("2.1", lp(1, &[1]))]));
    let e = shuffle_mul(&c, &unit(&c, "1"), &unit(&c, "()")).unwrap();
    assert_eq!(e, unit(&c, "1"));
    assert!(shuffle_mul(&c, &unit(&c, "1"), &theta_letter(&c, 1)).is_err());
}

#[test]
fn products_match_definition() {
    for c in [a1(), a2()] {
        let n = c.n_nodes() as u8;
        let vecs: Vec<ShuffleVec> = [vec![0u8], vec![1, 0], vec![0, 1, 1], vec![n - 1, 0, n - 1]]
            .iter()
            .map(|l| {
                let word = Word(l.clone());
                let other = Word(l.iter().rev().cloned().collect());
                let weight = word.weight(c.n_nodes());
                let mut m = BTreeMap::new();
                m.insert(word, lp(-1, &[2, 0, 1]));
                m.insert(other, lp(0, &[1, -3]));
                ShuffleVec::from_parts(Side::Dual, weight, m, lp(0, &[1, 1])).unwrap()
            })
            .collect();
        for a in &vecs {
            for b in &vecs {
                assert_eq!(shuffle_mul(&c, a, b).unwrap(), brute_shuffle(&c, a, b));
            }
        }
    }
}

#[test]
fn shuffle_realizes_the_product_of_f() {
    for c in [a1(), a2()] {
        let n = c.n_nodes();
        for u in words_of_weight(&WeightVec(vec![1; n])) {
            for v in words_of_weight(&WeightVec::unit(n, 0).scale(2)) {
                let lhs = shuffle_mul(&c, &theta_word(&c, &u), &theta_word(&c, &v)).unwrap();
                assert_eq!(lhs, theta_word(&c, &u.concat(&v)));
            }
        }
    }
}

#[test]
fn deconcatenation() {
    let c = a2();
    let ij = unit(&c, "1.2");
    let (wi, wj) = (WeightVec::unit(3, 1), WeightVec::unit(3, 2));
    let d = deconcat(&ij, &wi, &wj).unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[&(w("1"), w("2"))], RatFunc::one());
    assert!(deconcat(&ij, &wj, &wi).unwrap().is_empty());
    assert!(deconcat(&ij, &wi, &wi).is_err());
}

/// `(a⋆b)_{w₁w₂} = Σ q^{−wt(b₁)·wt(a₂)} (a₁⋆b₁)_{w₁} (a₂⋆b₂)_{w₂}` over all
/// deconcatenations `a = a₁a₂`, `b = b₁b₂`.
#[test]
fn coproduct_of_product() {
    let c = a1();
    let a = shuffle_mul(&c, &unit(&c, "0.1"), &unit(&c, "0")).unwrap();
    let b = unit(&c, "1.1").add(&unit(&c, "1.1")).unwrap();
    let prod = shuffle_mul(&c, &a, &b).unwrap();
    let nu = prod.weight().clone();
    for w0 in words_of_weight(&nu) {
        for k in 0..=w0.len() {
            let (w1, w2) = w0.split_at(k);
            let mut rhs = RatFunc::zero();
            for (ua, ca) in a.coords() {
                for (ub, cb) in b.coords() {
                    for ka in 0..=ua.len() {
                        for kb in 0..=ub.len() {
                            let (a1, a2) = ua.split_at(ka);
                            let (b1, b2) = ub.split_at(kb);
                            if a1.len() + b1.len() != w1.len() {
                                continue;
                            }
                            let x1 = shuffle_mul(&c, &unit(&c, &a1.to_string()), &unit(&c, &b1.to_string())).unwrap();
                            let x2 = shuffle_mul(&c, &unit(&c, &a2.to_string()), &unit(&c, &b2.to_string())).unwrap();
                            let e = c.form(&b1.weight(2), &a2.weight(2));
                            let t = &(&x1.get(&w1) * &x2.get(&w2)) * &(&ca * &cb);
                            rhs = &rhs + &(&t * &RatFunc::from(LaurentPoly::monomial_i64(1, -e)));
                        }
                    }
                }
            }
            assert_eq!(prod.get(&w0), rhs, "{w1} | {w2}");
        }
    }
}

#[test]
fn gram_values() {
    let c = a1();
    let g = GramMatrix::build(&c, &WeightVec(vec![0, 2]));
    assert_eq!(g.size(), 1);
    assert_eq!(g.entry(0, 0), over_gram_den(lp(-2, &[1, 0, 1]), 2));
    let g = GramMatrix::build(&c, &WeightVec(vec![1, 1]));
    assert_eq!(g.words(), &[w("0.1"), w("1.0")]);
    assert_eq!(g.entry(0, 0), over_gram_den(lp(0, &[1]), 2));
    assert_eq!(g.entry(1, 1), over_gram_den(lp(0, &[1]), 2));
    assert_eq!(g.entry(0, 1), over_gram_den(lp(2, &[1]), 2));
    let g = GramMatrix::build(&c, &WeightVec(vec![1, 0]));
    assert_eq!(g.entry(0, 0), over_gram_den(lp(0, &[1]), 1));
    for nu in [vec![2, 2], vec![3, 1], vec![1, 3]] {
        assert!(GramMatrix::build(&c, &WeightVec(nu)).is_symmetric());
    }
}

#[test]
fn rank_bounds_agree_with_elimination() {
    for (c, weights) in [
        (a1(), vec![vec![1, 1], vec![2, 1], vec![2, 2], vec![3, 1], vec![3, 2], vec![4, 1]]),
        (a2(), vec![vec![1, 1, 1], vec![2, 1, 0], vec![2, 1, 1], vec![2, 2, 0]]),
    ] {
        for nu in weights {
            let g = GramMatrix::build(&c, &WeightVec(nu.clone()));
            let b = g.rank_bounds(&c);
            let exact = g.rank_exact();
            assert!(b.lower <= exact && exact <= b.upper, "{nu:?}");
            assert!(b.is_exact(), "{nu:?}: {b:?}");
            assert_eq!(g.rank(&c), exact);
        }
    }
}

#[test]
fn serre_elements_span_radical_directions() {
    for (c, i, j) in [(a1(), 0, 1), (a1(), 1, 0), (a2(), 0, 1), (a2(), 2, 1)] {
        let s = serre_element(&c, i, j);
        let g = GramMatrix::build(&c, s.weight());
        assert!(g.apply(&s).unwrap().is_zero());
    }
}

#[test]
fn pairings() {
    let c = a1();
    let g1 = GramMatrix::build(&c, &WeightVec(vec![1, 0]));
    let t0 = theta_letter(&c, 0);
    assert_eq!(f_pair(&g1, &t0, &t0).unwrap(), over_gram_den(LaurentPoly::one(), 1));
    assert_eq!(f_pair(&g1, &t0, &unit(&c, "0")).unwrap(), RatFunc::one());
    let g = GramMatrix::build(&c, &WeightVec(vec![1, 1]));
    let x = theta_word(&c, &w("0.1"));
    let y = theta_word(&c, &w("1.0"));
    assert_eq!(f_pair(&g, &x, &y).unwrap(), over_gram_den(lp(2, &[1]), 2));
    // ⟨θ_u θ_v, z⟩ = Σ c_{w₁} c_{w₂} z_{w₁w₂}: pairing a concatenation.
    let g2 = GramMatrix::build(&c, &WeightVec(vec![2, 1]));
    let z = theta_word(&c, &w("0.1.0"));
    let cu = ShuffleVec::unit(Side::Free, w("0"), 2);
    let cv = ShuffleVec::unit(Side::Free, w("1.0"), 2);
    let cat = concat_mul(&cu, &cv).unwrap();
    let lhs = f_pair(&g2, &g2.apply(&cat).unwrap(), &z).unwrap();
    assert_eq!(lhs, cat.dot(&z));
}

#[test]
fn bar_involutions() {
    let c = a1();
    let nu = WeightVec(vec![2, 1]);
    let g = GramMatrix::build(&c, &nu);
    for u in g.words() {
        let t = theta_word(&c, u);
        assert_eq!(bar_f(&g, &t).unwrap(), t);
    }
    let q = RatFunc::q();
    let g1 = GramMatrix::build(&c, &WeightVec(vec![1, 0]));
    let t0 = theta_letter(&c, 0);
    assert_eq!(bar_f(&g1, &t0.scale(&q)).unwrap(), t0.scale(&q.inv().unwrap()));
    let x = theta_word(&c, &w("0.0.1"))
        .scale(&RatFunc::from(lp(-1, &[3, 0, 1])))
        .add(&theta_word(&c, &w("1.0.0")).scale(&RatFunc::new(lp(0, &[1]), lp(0, &[1, 1])).unwrap()))
        .unwrap();
    let once = bar_f(&g, &x).unwrap();
    assert_ne!(once, x);
    assert_eq!(bar_f(&g, &once).unwrap(), x);

    assert_eq!(bar_dual(&unit(&c, "0")).unwrap(), unit(&c, "0"));
    let qv = unit(&c, "0.1").scale(&q);
    assert_eq!(bar_dual(&qv).unwrap(), unit(&c, "0.1").scale(&q.inv().unwrap()));
    // bar(a⋆b) = q^{λ·μ} bar(b)⋆bar(a)
    let a = vec_of(&c, Side::Dual, &[("0.1", lp(1, &[1])), ("1.0", lp(0, &[2]))]);
    let b = vec_of(&c, Side::Dual, &[("0.0", lp(-2, &[1, 1]))]);
    let lhs = bar_dual(&shuffle_mul(&c, &a, &b).unwrap()).unwrap();
    let rhs = shuffle_mul(&c, &bar_dual(&b).unwrap(), &bar_dual(&a).unwrap()).unwrap();
    let lm = c.form(a.weight(), b.weight());
    assert_eq!(lhs, rhs.scale(&RatFunc::from(LaurentPoly::monomial_i64(1, lm))));
}

#[test]
fn divided_powers() {
    let c = a1();
    assert_eq!(divided_power_letter(&c, 0, 1), theta_letter(&c, 0));
    assert_eq!(divided_power_letter(&c, 0, 0), ShuffleVec::unit(Side::F, Word::empty(), 2));
    let d2 = divided_power_letter(&c, 1, 2);
    assert_eq!(d2.get(&w("1.1")), over_gram_den(lp(-1, &[1]), 2));
    assert_eq!(divided_power_letter(&c, 1, 3).get(&w("1.1.1")), over_gram_den(lp(-3, &[1]), 3));
}

#[test]
fn word_text() {
    assert_eq!(w("0.1.10").0, vec![0, 1, 10]);
    assert_eq!(w("()"), Word::empty());
    assert_eq!(Word(vec![2, 0]).to_string(), "2.0");
    for bad in ["", ".", "1..2", "a", "1.256", "1.-1"] {
        assert!(bad.parse::<Word>().is_err(), "{bad:?}");
    }
}
