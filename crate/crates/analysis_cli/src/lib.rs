//! Run configuration, verification suites and reports for `pbwforge`.
//!
//! A [`RunConfig`] names a Cartan datum, a convex order, a set of weights
//! and the suites to run.  [`run`] executes the suites in dependency order
//! (convexity, then PBW and canonical bases, then the downstream checks)
//! and returns a JSON [`Summary`] plus CSV artifacts.  Outputs are
//! deterministic: the same configuration gives byte-identical artifacts,
//! whether or not the Gram cache is warm.  Timings are only recorded on
//! request, since they are the one nondeterministic field.

mod config;
mod error;
mod run;

pub use config::{parse_weight_list, RunConfig, Suite, WeightSpec};
pub use error::CliError;
pub use run::{
    cache_dir, canonical_rows, engine, gram_rows, order_spec, pbw_rows, run, to_csv, Artifacts, RunOptions, Status,
    Summary, SuiteReport, CACHE_ENV, CANONICAL_HEADER, DEFAULT_CACHE_DIR, GRAM_HEADER, PBW_HEADER,
};
