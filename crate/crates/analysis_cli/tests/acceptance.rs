//! Acceptance checks: one line per criterion, `PASS` or `FAIL`, followed by
//! the measured quantities.  Exits with status 1 if any criterion fails.

use std::collections::{BTreeSet, HashMap};
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use affine_roots::{build_cartan, AffineType, CartanDatum, Root, WeightVec};
use analysis_cli::{run, RunConfig, RunOptions};
use convex_order::{
    cones_meet, parse_rational, verify_convexity, ClauseViolation, ConvexOrderSpec, ExplicitOrder, RootPreorder,
};
use exactq::LaurentPoly;
use pbw_engine::{Engine, Triangularity};
use qshuffle::bar_dual;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const A1_ROW: [&str; 2] = ["1", "2"];
const A1_ROW_ALT: [&str; 2] = ["3", "1"];
const A2_ROW: [&str; 3] = ["1", "31/10", "367/50"];

type Outcome = Result<String, String>;

fn spec(rank: usize, row: &[&str], bound: i64) -> ConvexOrderSpec {
    let c = build_cartan(AffineType::A, rank).unwrap();
    ConvexOrderSpec::new(c, vec![row.iter().map(|x| parse_rational(x).unwrap()).collect()], bound).unwrap()
}

fn engine(rank: usize, row: &[&str], bound: i64) -> Engine {
    Engine::new(spec(rank, row, bound)).unwrap()
}

/// Nonzero `ν ∈ ℕ^n` with `ht ν ≤ h`.
fn weights_up_to(n: usize, h: i64) -> Vec<WeightVec> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<i64>| (0..=h).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.into_iter().filter(|v| (1..=h).contains(&v.iter().sum::<i64>())).map(WeightVec).collect()
}

/// Coefficients of `Π_α (1 − t^α)^{−mult α}` up to height `h`; roots are
/// read off the pairing (norm 2, or in its radical with multiplicity
/// `|I| − 1`).
fn kostant_table(c: &CartanDatum, h: i64) -> HashMap<Vec<i64>, u64> {
    let n = c.n_nodes();
    let p = c.pairing();
    let form = |a: &[i64], b: &[i64]| -> i64 { (0..n).map(|i| (0..n).map(|j| a[i] * p[i][j] * b[j]).sum::<i64>()).sum() };
    let mut vectors: Vec<Vec<i64>> = weights_up_to(n, h).into_iter().map(|w| w.0).collect();
    vectors.sort_by_key(|v| v.iter().sum::<i64>());
    let mut table: HashMap<Vec<i64>, u64> = HashMap::new();
    table.insert(vec![0; n], 1);
    for f in &vectors {
        let mult = if form(f, f) == 2 {
            1
        } else if (0..n).all(|i| (0..n).map(|j| p[i][j] * f[j]).sum::<i64>() == 0) {
            n - 1
        } else {
            0
        };
        for _ in 0..mult {
            for v in &vectors {
                let prev: Vec<i64> = v.iter().zip(f).map(|(a, b)| a - b).collect();
                if prev.iter().all(|&x| x >= 0) {
                    let add = table.get(&prev).copied().unwrap_or(0);
                    *table.entry(v.clone()).or_insert(0) += add;
                }
            }
        }
    }
    table
}

fn dimension_identity() -> Outcome {
    let mut cases = 0;
    let mut times = Vec::new();
    for (rank, row, h) in [(1, &A1_ROW[..], 8), (2, &A2_ROW[..], 6)] {
        let start = Instant::now();
        let e = engine(rank, row, h);
        let table = kostant_table(e.cartan(), h);
        for nu in weights_up_to(rank + 1, h) {
            let rank_g = e.dim(&nu).map_err(|x| x.to_string())?;
            let parts = e.enumerate_root_partitions(&nu).map_err(|x| x.to_string())?.len();
            let oracle = table.get(&nu.0).copied().unwrap_or(0) as usize;
            if rank_g != parts || parts != oracle {
                return Err(format!("{nu}: rank {rank_g}, partitions {parts}, generating function {oracle}"));
            }
            cases += 1;
        }
        times.push(format!("A{rank} {:.1}s", start.elapsed().as_secs_f64()));
    }
    Ok(format!("{cases} weights; {}", times.join(", ")))
}

fn cuspidal() -> Outcome {
    let mut roots = 0;
    for (rank, row) in [(1, &A1_ROW[..]), (1, &A1_ROW_ALT[..]), (2, &A2_ROW[..])] {
        let e = engine(rank, row, 7);
        let reals: Vec<Root> = e.cartan().positive_roots_up_to(7).into_iter().filter(|r| r.is_real()).collect();
        for r in reals {
            let v = e.cuspidal_dual_root_vector(&r).map_err(|x| x.to_string())?;
            if v.certificate.dimension != 1 {
                return Err(format!("{r}: dimension {}", v.certificate.dimension));
            }
            let coords = v.dual.to_laurent().ok_or_else(|| format!("{r}: coordinates are not Laurent"))?;
            if !coords.values().all(LaurentPoly::is_nonnegative) {
                return Err(format!("{r}: a coordinate has a negative coefficient"));
            }
            if bar_dual(&v.dual).map_err(|x| x.to_string())? != v.dual {
                return Err(format!("{r}: not bar-invariant"));
            }
            roots += 1;
        }
    }
    Ok(format!("{roots} real roots over three orders"))
}

/// Canonical bases and dual PBW positivity share the A1 sweep.
fn canonical_and_duals() -> (Outcome, Outcome) {
    let e = engine(1, &A1_ROW, 8);
    let mut elements = 0;
    let mut coords = 0;
    let canonical = (|| -> Outcome {
        for nu in weights_up_to(2, 8) {
            let cb = e.canonical_basis(&nu).map_err(|x| x.to_string())?;
            let t = &cb.triangularity;
            if !t.is_unitriangular() || t.direction() != Some(Triangularity::Upper) || !t.class_mixing.is_empty() {
                return Err(format!("{nu}: bar matrix is not unitriangular: {t:?}"));
            }
            let a = &cb.bar.entries;
            for (p, row) in cb.coeffs.iter().enumerate() {
                // Bar invariance in PBW coordinates: Σ_s bar(c_s) A_{st} = c_t.
                for (t_idx, c_t) in row.iter().enumerate() {
                    let mut acc = LaurentPoly::zero();
                    for (s, c_s) in row.iter().enumerate() {
                        acc = &acc + &c_s.bar().mul_ref(&a[s][t_idx]);
                    }
                    if &acc != c_t {
                        return Err(format!("{nu}: b_{p} is not bar-invariant"));
                    }
                }
                for (s, c) in row.iter().enumerate() {
                    let ok = if s == p {
                        c.is_one()
                    } else {
                        c.is_zero() || (c.is_nonnegative() && c.low_exp().is_some_and(|x| x >= 1))
                    };
                    if !ok {
                        return Err(format!("{nu}: coefficient {c} at ({p}, {s})"));
                    }
                }
                elements += 1;
            }
        }
        Ok(format!("{elements} canonical elements; both extensions agree"))
    })();
    let duals = (|| -> Outcome {
        for nu in weights_up_to(2, 8) {
            let b = e.pbw_basis(&nu).map_err(|x| x.to_string())?;
            for (p, d) in b.partitions.iter().zip(&b.duals) {
                let l = d.to_laurent().ok_or_else(|| format!("{nu} {p}: not Laurent"))?;
                if !l.values().all(LaurentPoly::is_nonnegative) {
                    return Err(format!("{nu} {p}: negative coefficient"));
                }
                coords += l.len();
            }
        }
        Ok(format!("{coords} word coordinates"))
    })();
    (canonical, duals)
}

fn outcome(o: Result<Vec<pbw_engine::CheckOutcome>, pbw_engine::PbwError>) -> Outcome {
    let o = o.map_err(|x| x.to_string())?;
    let cases: usize = o.iter().map(|x| x.cases).sum();
    match o.iter().find(|x| !x.passed()) {
        Some(bad) => Err(format!("{}: {:?}", bad.name, bad.failures)),
        None => Ok(format!("{cases} cases ({})", o.iter().map(|x| x.name.as_str()).collect::<Vec<_>>().join(", "))),
    }
}

fn ls_support() -> Outcome {
    let e = engine(1, &A1_ROW, 8);
    outcome(e.check_ls_support(8).map(|x| vec![x]))
}

fn inner_products() -> Outcome {
    let a1 = engine(1, &A1_ROW, 6);
    let a2 = engine(2, &A2_ROW, 6);
    let r = (|| {
        Ok(vec![a1.check_psi_pairings(3)?, a1.check_p_pairings(3)?, a2.check_psi_pairings(2)?, a2.check_p_pairings(2)?])
    })();
    outcome(r)
}

fn bridge() -> Outcome {
    let a1 = engine(1, &A1_ROW, 8);
    let a2 = engine(2, &A2_ROW, 9);
    let r = (|| {
        Ok(vec![a1.check_phi_bridge(3)?, a2.check_phi_bridge(3)?, a1.check_multi_lr(4)?, a2.check_multi_lr(3)?])
    })();
    outcome(r)
}

fn commutativity() -> Outcome {
    let a1 = engine(1, &A1_ROW, 12);
    let a2 = engine(2, &A2_ROW, 6);
    let r = (|| {
        Ok(vec![a1.check_psi_commutativity(6)?, a2.check_psi_commutativity(2)?, a1.check_schur_stability(4)?])
    })();
    outcome(r)
}

fn convexity() -> Outcome {
    let mut segments = 0;
    for (rank, row, max) in [(1, &A1_ROW[..], 12), (2, &A2_ROW[..], 10)] {
        let o = spec(rank, row, 30);
        let c = o.cartan();
        for n in 1..=max {
            let word = o.reduced_word_from_segment(n, 30).map_err(|x| x.to_string())?;
            let inv: BTreeSet<WeightVec> =
                c.inversion_set(&word).map_err(|x| x.to_string())?.into_iter().map(|r| r.vector).collect();
            let seg: BTreeSet<WeightVec> =
                o.first_n_roots(n, 30).map_err(|x| x.to_string())?.into_iter().map(|r| r.vector).collect();
            if inv != seg {
                return Err(format!("A{rank} segment {n}: word {word:?}"));
            }
            segments += 1;
        }
    }
    // Random instances A ≺ B drawn from the sorted roots of two orders.
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut instances = 0;
    for (rank, row) in [(1, &A1_ROW[..]), (2, &A2_ROW[..])] {
        let o = spec(rank, row, 8);
        let roots = o.sorted_roots(8);
        let mut k = 0;
        while k < 100 {
            let cut = rng.gen_range(1..roots.len());
            let pick = |rng: &mut ChaCha8Rng, lo: usize, hi: usize| -> Vec<Root> {
                let m = rng.gen_range(1..=3.min(hi - lo));
                (0..m).map(|_| roots[rng.gen_range(lo..hi)].clone()).collect()
            };
            let below = pick(&mut rng, 0, cut);
            let above = pick(&mut rng, cut, roots.len());
            let separated =
                below.iter().all(|x| above.iter().all(|y| o.cmp_roots(&x.vector, &y.vector) == std::cmp::Ordering::Less));
            if !separated {
                continue;
            }
            if cones_meet(&below, &above).is_some() {
                return Err(format!("cones of {below:?} and {above:?} meet"));
            }
            k += 1;
            instances += 1;
        }
    }
    // Moving the first root past the second breaks the convexity clause.
    let c = build_cartan(AffineType::A, 1).unwrap();
    let o = spec(1, &A1_ROW, 8);
    let bad = ExplicitOrder::from_preorder(&c, &o, 8).swap_adjacent(&c, 0).unwrap();
    let report = verify_convexity(&c, &bad, 8, 50, 3);
    if !report.clause_violations.iter().any(|v| matches!(v, ClauseViolation::Sum { .. })) {
        return Err("the scrambled order was not flagged".into());
    }
    if !verify_convexity(&c, &o, 8, 200, 7).is_convex() {
        return Err("the functional order was flagged".into());
    }
    Ok(format!("{segments} segments, {instances} infeasible cone instances, scrambled order flagged"))
}

fn mv_width() -> Outcome {
    let e = engine(1, &A1_ROW, 6);
    outcome(e.check_mv_width(3).map(|x| vec![x]))
}

fn klr() -> Outcome {
    let mut pairs = 0;
    let mut conventions = BTreeSet::new();
    for rank in [1, 2] {
        let c = build_cartan(AffineType::A, rank).unwrap();
        let conv = klr_dims::detect_convention(&c, 3).map_err(|x| x.to_string())?;
        conventions.insert(conv.to_string());
        for nu in weights_up_to(rank + 1, 4) {
            pairs += klr_dims::gram_crosscheck(&c, &nu, conv).map_err(|x| x.to_string())?.rows.len();
        }
    }
    if conventions.len() != 1 {
        return Err(format!("conventions differ between Cartan data: {conventions:?}"));
    }
    Ok(format!("{pairs} word pairs, numerator convention {}", conventions.into_iter().next().unwrap_or_default()))
}

fn read_dir(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&p).unwrap()))
        .collect();
    files.sort();
    files
}

fn determinism() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|x| x.to_string())?;
    let text = format!(
        "[cartan]\ntype = \"A\"\nrank = 1\n[order]\nrows = \"1\" \"2\"\nheight_bound = 6\n[weights]\nup_to = 4\n[run]\ncache_dir = \"{}\"\nseed = 5\n",
        tmp.path().join("cache").display()
    );
    let config = RunConfig::parse(&text).map_err(|x| x.to_string())?;
    let mut outputs = Vec::new();
    for k in 0..3 {
        let dir = tmp.path().join(format!("run{k}"));
        let artifacts = run(&config, &RunOptions::default()).map_err(|x| x.to_string())?;
        if artifacts.summary.exit_code() != 0 {
            return Err(format!("run {k} exited with {}", artifacts.summary.exit_code()));
        }
        artifacts.write(&dir).map_err(|x| x.to_string())?;
        outputs.push(read_dir(&dir));
    }
    // Run 0 is cold; runs 1 and 2 read the cache written by run 0.
    if outputs.iter().any(|o| *o != outputs[0]) {
        return Err("artifacts differ between runs".into());
    }
    Ok(format!("{} artifacts byte-identical over a cold and two warm runs", outputs[0].len()))
}

fn main() -> ExitCode {
    let names = [
        "dimension identity",
        "cuspidal uniqueness and positivity",
        "bar unitriangularity and canonical positivity",
        "dual PBW character positivity",
        "straightening support",
        "inner products of imaginary vectors",
        "symmetric-function bridge and LR rule",
        "commutativity and Jacobi-Trudi stability",
        "convex order geometry",
        "MV face width",
        "KLR graded dimensions",
        "determinism",
    ];
    let start = Instant::now();
    let results: Vec<Outcome> = std::thread::scope(|s| {
        let dims = s.spawn(dimension_identity);
        let cusp = s.spawn(cuspidal);
        let can = s.spawn(canonical_and_duals);
        let ls = s.spawn(ls_support);
        let inner = s.spawn(inner_products);
        let br = s.spawn(bridge);
        let comm = s.spawn(commutativity);
        let conv = s.spawn(convexity);
        let mv = s.spawn(mv_width);
        let kl = s.spawn(klr);
        let det = s.spawn(determinism);
        let join = |h: std::thread::ScopedJoinHandle<'_, Outcome>| h.join().unwrap_or_else(|_| Err("panicked".into()));
        let (c3, c4) = can.join().unwrap_or_else(|_| (Err("panicked".into()), Err("panicked".into())));
        vec![join(dims), join(cusp), c3, c4, join(ls), join(inner), join(br), join(comm), join(conv), join(mv), join(kl), join(det)]
    });
    let mut failed = false;
    for (k, (name, r)) in names.iter().zip(&results).enumerate() {
        match r {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", k + 1),
            Err(detail) => {
                failed = true;
                println!("criterion {:>2} FAIL {name}: {detail}", k + 1)
            }
        }
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
