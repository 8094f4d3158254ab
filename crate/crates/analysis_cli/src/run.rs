use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use affine_roots::{build_cartan, CartanDatum, WeightVec};
use convex_order::{verify_convexity, ClauseViolation, ConvexOrderSpec, ExplicitOrder};
use pbw_engine::{CheckOutcome, Engine, PbwError};
use qshuffle::{GramCache, GramMatrix, ShuffleVec};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{RunConfig, Suite};
use crate::error::CliError;

/// Environment variable that overrides the configured cache directory.
pub const CACHE_ENV: &str = "PBWFORGE_CACHE";

/// Cache directory used when neither the environment nor the config names one.
pub const DEFAULT_CACHE_DIR: &str = ".pbwforge-cache";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// The suite could not run (bad input for a precondition).
    Fail,
    /// A theorem check failed; the details hold the finding records.
    Finding,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub status: Status,
    pub details: Vec<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub config_hash: String,
    pub suites: Vec<SuiteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

impl Summary {
    /// 0 if every suite passed, 2 if any reported a finding, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.suites.iter().any(|s| s.status == Status::Finding) {
            2
        } else if self.suites.iter().any(|s| s.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes") + "\n"
    }
}

/// The summary and the CSV artifacts (file name to contents) of a run.
#[derive(Clone, Debug)]
pub struct Artifacts {
    pub summary: Summary,
    pub csv: BTreeMap<String, String>,
    /// Non-fatal diagnostics, such as an unusable cache.
    pub warnings: Vec<String>,
}

impl Artifacts {
    /// Writes `summary.json` and the CSV files into `dir`.
    pub fn write(&self, dir: &Path) -> Result<(), CliError> {
        let io = |path: PathBuf| move |source| CliError::Io { path, source };
        fs::create_dir_all(dir).map_err(io(dir.to_path_buf()))?;
        let path = dir.join("summary.json");
        fs::write(&path, self.summary.to_json()).map_err(io(path.clone()))?;
        for (name, text) in &self.csv {
            let path = dir.join(name);
            fs::write(&path, text).map_err(io(path.clone()))?;
        }
        Ok(())
    }
}

/// Options that do not change results.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Record wall-clock timings per suite in the summary.
    pub timings: bool,
    /// Run these suites instead of the configured ones.
    pub suites: Option<Vec<Suite>>,
}

/// The effective cache directory: `PBWFORGE_CACHE`, then the config, then
/// the default.
pub fn cache_dir(config: Option<&RunConfig>) -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
        return PathBuf::from(dir);
    }
    config.and_then(|c| c.cache_dir.clone()).unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR))
}

/// The order of a configuration.
pub fn order_spec(config: &RunConfig) -> Result<ConvexOrderSpec, CliError> {
    let c = build_cartan(config.family, config.rank)?;
    Ok(ConvexOrderSpec::new(c, config.rows.clone(), config.height_bound)?)
}

/// The engine of a configuration, with the Gram cache attached.
pub fn engine(config: &RunConfig) -> Result<Engine, CliError> {
    Ok(Engine::new(order_spec(config)?)?.with_gram_cache(GramCache::new(cache_dir(Some(config)))))
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 input")
}

fn outcome_detail(o: &CheckOutcome) -> Value {
    json!({ "check": o.name, "cases": o.cases, "failures": o.failures })
}

/// Turns the result of a block of checks into a report.
fn finish(name: Suite, result: Result<Vec<Value>, PbwError>, failed: bool) -> SuiteReport {
    match result {
        Ok(details) => SuiteReport {
            name: name.to_string(),
            status: if failed { Status::Finding } else { Status::Pass },
            details,
        },
        Err(e) => SuiteReport {
            name: name.to_string(),
            status: if e.is_theorem_violation() { Status::Finding } else { Status::Fail },
            details: vec![json!({ "error": e.to_string() })],
        },
    }
}

fn checks(name: Suite, run: impl FnOnce() -> Result<Vec<CheckOutcome>, PbwError>) -> SuiteReport {
    match run() {
        Ok(outcomes) => {
            let failed = outcomes.iter().any(|o| !o.passed());
            finish(name, Ok(outcomes.iter().map(outcome_detail).collect()), failed)
        }
        Err(e) => finish(name, Err(e), false),
    }
}

/// Partitions as CSV text: `weight,partition,word,coefficient` rows of the
/// dual PBW characters.
pub fn pbw_rows(engine: &Engine, nu: &WeightVec) -> Result<Vec<Vec<String>>, PbwError> {
    let b = engine.pbw_basis(nu)?;
    let mut rows = Vec::new();
    for (p, d) in b.partitions.iter().zip(&b.duals) {
        rows.extend(character_rows(d).into_iter().map(|(w, c)| vec![nu.to_string(), p.to_string(), w, c]));
    }
    Ok(rows)
}

fn character_rows(d: &ShuffleVec) -> Vec<(String, String)> {
    d.coords().into_iter().map(|(w, c)| (w.to_string(), c.to_laurent().map_or_else(|| c.to_string(), |l| l.to_string()))).collect()
}

/// `weight,partition,pbw_partition,coefficient` rows of the canonical basis.
pub fn canonical_rows(engine: &Engine, nu: &WeightVec) -> Result<Vec<Vec<String>>, PbwError> {
    let cb = engine.canonical_basis(nu)?;
    let parts = &cb.basis.partitions;
    let mut rows = Vec::new();
    for (p, row) in cb.coeffs.iter().enumerate() {
        for (s, c) in row.iter().enumerate() {
            if !c.is_zero() {
                rows.push(vec![nu.to_string(), parts[p].to_string(), parts[s].to_string(), c.to_string()]);
            }
        }
    }
    Ok(rows)
}

/// `i,j,numerator` rows of a Gram matrix; the denominator is
/// `(1 − q²)^{ht ν}`.
pub fn gram_rows(g: &GramMatrix) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for (a, i) in g.words().iter().enumerate() {
        for (b, j) in g.words().iter().enumerate() {
            rows.push(vec![i.to_string(), j.to_string(), g.numerator(a, b).to_string()]);
        }
    }
    rows
}

pub const PBW_HEADER: [&str; 4] = ["weight", "partition", "word", "coefficient"];
pub const CANONICAL_HEADER: [&str; 4] = ["weight", "partition", "pbw_partition", "coefficient"];
pub const GRAM_HEADER: [&str; 3] = ["i", "j", "numerator"];

pub fn to_csv(header: &[&str], rows: Vec<Vec<String>>) -> String {
    csv_text(header, rows)
}

struct Runner<'a> {
    config: &'a RunConfig,
    cartan: CartanDatum,
    weights: Vec<WeightVec>,
    engine: Option<Engine>,
    csv: BTreeMap<String, String>,
}

impl Runner<'_> {
    fn engine(&self) -> &Engine {
        self.engine.as_ref().expect("built before the algebraic suites")
    }

    fn max_height(&self) -> i64 {
        self.weights.iter().map(|w| w.height()).max().unwrap_or(0)
    }

    /// Largest `n` with `nδ` among the covered heights.
    fn imaginary_degree(&self) -> u32 {
        (self.max_height() / self.cartan.delta().height()) as u32
    }

    fn convexity(&mut self) -> Result<SuiteReport, CliError> {
        let spec = order_spec(self.config)?;
        let h = self.config.height_bound;
        let mut order = ExplicitOrder::from_preorder(&self.cartan, &spec, h);
        for &k in &self.config.swaps {
            order = order
                .swap_adjacent(&self.cartan, k)
                .ok_or_else(|| CliError::Config { line: 0, message: format!("swap position {k} is out of range") })?;
        }
        let report = verify_convexity(&self.cartan, &order, h, self.config.samples, self.config.seed);
        let mut details = vec![json!({
            "pairs_checked": report.pairs_checked,
            "cone_samples": report.cone_samples,
        })];
        for v in &report.clause_violations {
            details.push(match v {
                ClauseViolation::Sum { alpha, beta, sum } => {
                    json!({ "violation": "sum", "alpha": alpha.to_string(), "beta": beta.to_string(), "sum": sum.to_string() })
                }
                ClauseViolation::Tie { alpha, beta } => {
                    json!({ "violation": "tie", "alpha": alpha.to_string(), "beta": beta.to_string() })
                }
            });
        }
        for v in &report.cone_violations {
            let roots = |rs: &[affine_roots::Root]| rs.iter().map(|r| r.to_string()).collect::<Vec<_>>();
            details.push(json!({ "violation": "cones", "below": roots(&v.below), "above": roots(&v.above) }));
        }
        let rows = order
            .sequence()
            .iter()
            .enumerate()
            .map(|(k, r)| [vec![k.to_string()], r.csv_row().split(',').map(String::from).collect()].concat())
            .collect();
        self.csv.insert("convexity.csv".into(), csv_text(&["position", "root", "kind", "height"], rows));
        Ok(SuiteReport {
            name: Suite::Convexity.to_string(),
            status: if report.is_convex() { Status::Pass } else { Status::Finding },
            details,
        })
    }

    fn pbw(&mut self) -> SuiteReport {
        let engine = self.engine();
        let mut details = Vec::new();
        let mut failed = false;
        let mut rows = Vec::new();
        let result = (|| -> Result<(), PbwError> {
            for (nu, b) in self.weights.iter().zip(engine.pbw_bases(&self.weights)) {
                let dim = engine.dim(nu)?;
                let parts = engine.enumerate_root_partitions(nu)?.len();
                let b = b?;
                failed |= dim != parts;
                details.push(json!({ "weight": nu.to_string(), "dim": dim, "partitions": parts, "basis": b.len() }));
                rows.extend(pbw_rows(engine, nu)?);
            }
            Ok(())
        })();
        let csv = csv_text(&PBW_HEADER, rows);
        let report = finish(Suite::Pbw, result.map(|_| details), failed);
        self.csv.insert("pbw.csv".into(), csv);
        report
    }

    fn canonical(&mut self) -> SuiteReport {
        let engine = self.engine();
        let mut details = Vec::new();
        let mut failed = false;
        let mut rows = Vec::new();
        let result = (|| -> Result<(), PbwError> {
            for nu in &self.weights {
                let cb = engine.canonical_basis(nu)?;
                let positive = cb.is_positive();
                failed |= !positive;
                details.push(json!({
                    "weight": nu.to_string(),
                    "size": cb.coeffs.len(),
                    "positive": positive,
                    "non_positive": cb
                        .non_positive
                        .iter()
                        .map(|&(p, s)| format!("{} / {}", cb.basis.partitions[p], cb.basis.partitions[s]))
                        .collect::<Vec<_>>(),
                }));
                rows.extend(canonical_rows(engine, nu)?);
            }
            Ok(())
        })();
        let csv = csv_text(&CANONICAL_HEADER, rows);
        let report = finish(Suite::Canonical, result.map(|_| details), failed);
        self.csv.insert("canonical.csv".into(), csv);
        report
    }

    fn klr(&mut self) -> Result<SuiteReport, CliError> {
        let c = &self.cartan;
        let probe = self.max_height().min(3);
        let conv = match klr_dims::detect_convention(c, probe) {
            Ok(conv) => conv,
            Err(e) => {
                return Ok(SuiteReport {
                    name: Suite::Klr.to_string(),
                    status: Status::Finding,
                    details: vec![json!({ "error": e.to_string() })],
                })
            }
        };
        let mut details = vec![json!({ "convention": conv.to_string(), "probe_height": probe })];
        let mut rows = Vec::new();
        let mut status = Status::Pass;
        for nu in self.weights.iter().filter(|w| w.height() <= klr_dims::MAX_HEIGHT) {
            match klr_dims::gram_crosscheck(c, nu, conv) {
                Ok(r) => {
                    details.push(json!({ "weight": nu.to_string(), "pairs": r.rows.len() }));
                    rows.extend(r.rows.into_iter().map(|x| {
                        vec![nu.to_string(), x.i.to_string(), x.j.to_string(), x.dim_numerator.to_string()]
                    }));
                }
                Err(e) => {
                    status = Status::Finding;
                    details.push(json!({ "weight": nu.to_string(), "error": e.to_string() }));
                }
            }
        }
        self.csv.insert("klr.csv".into(), csv_text(&["weight", "i", "j", "numerator"], rows));
        Ok(SuiteReport { name: Suite::Klr.to_string(), status, details })
    }

    fn suite(&mut self, s: Suite) -> Result<SuiteReport, CliError> {
        if s != Suite::Convexity && s != Suite::Klr && self.engine.is_none() {
            self.engine = Some(engine(self.config)?);
        }
        let n = self.imaginary_degree();
        let h = self.max_height();
        Ok(match s {
            Suite::Convexity => self.convexity()?,
            Suite::Pbw => self.pbw(),
            Suite::Canonical => self.canonical(),
            Suite::Klr => self.klr()?,
            Suite::Ls => {
                let e = self.engine();
                checks(s, || Ok(vec![e.check_ls_support(h)?]))
            }
            Suite::Imaginary => {
                let e = self.engine();
                checks(s, || {
                    if n == 0 {
                        return Ok(vec![]);
                    }
                    Ok(vec![
                        e.check_labeling()?,
                        e.check_psi_pairings(n)?,
                        e.check_p_pairings(n)?,
                        e.check_imaginary_block(n)?,
                        e.check_psi_commutativity(n)?,
                        e.check_schur_stability(n)?,
                    ])
                })
            }
            Suite::Bridge => {
                let e = self.engine();
                checks(s, || if n == 0 { Ok(vec![]) } else { Ok(vec![e.check_phi_bridge(n)?, e.check_multi_lr(n)?]) })
            }
            Suite::Mv => {
                let e = self.engine();
                checks(s, || if n == 0 { Ok(vec![]) } else { Ok(vec![e.check_mv_width(n)?]) })
            }
        })
    }
}

/// Runs the suites of `config` in dependency order.
pub fn run(config: &RunConfig, options: &RunOptions) -> Result<Artifacts, CliError> {
    let mut suites = options.suites.clone().unwrap_or_else(|| config.suites.clone());
    suites.sort();
    suites.dedup();
    let cartan = build_cartan(config.family, config.rank)?;
    let mut runner = Runner { config, cartan, weights: config.weight_list(), engine: None, csv: BTreeMap::new() };
    let mut reports = Vec::new();
    let mut timings = BTreeMap::new();
    for s in suites {
        let start = Instant::now();
        reports.push(runner.suite(s)?);
        timings.insert(s.to_string(), start.elapsed().as_millis());
    }
    let mut warnings = Vec::new();
    if let Some(e) = &runner.engine {
        let stats = e.gram_cache_stats();
        if stats.failed > 0 {
            warnings.push(format!(
                "warning: the Gram cache at {} was unusable for {} matrices; they were recomputed",
                cache_dir(Some(config)).display(),
                stats.failed
            ));
        }
        if stats.recovered > 0 {
            warnings.push(format!("warning: replaced {} corrupt Gram cache files", stats.recovered));
        }
    }
    let summary =
        Summary { config_hash: config.hash(), suites: reports, timings_ms: options.timings.then_some(timings) };
    Ok(Artifacts { summary, csv: runner.csv, warnings })
}
