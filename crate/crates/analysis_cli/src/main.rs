use std::path::{Path, PathBuf};
use std::process::ExitCode;

use affine_roots::{build_cartan, AffineType, WeightVec};
use analysis_cli::{
    cache_dir, canonical_rows, engine, gram_rows, order_spec, parse_weight_list, pbw_rows, run, to_csv, CliError,
    RunConfig, RunOptions, Suite, CANONICAL_HEADER, GRAM_HEADER, PBW_HEADER,
};
use clap::{Parser, Subcommand, ValueEnum};
use qshuffle::GramCache;
use serde_json::json;

#[derive(Parser)]
#[command(name = "pbwforge", version, about = "PBW and canonical bases of affine quantum groups, with theorem checks")]
struct Cli {
    /// Run configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots up to a height.
    Roots {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        height: i64,
    },
    /// Show or check the configured convex order.
    Order {
        #[arg(value_enum)]
        action: OrderAction,
    },
    /// Print the dual PBW characters of a weight.
    Pbw {
        #[arg(long)]
        nu: String,
    },
    /// Print the canonical basis of a weight in PBW coordinates.
    Canonical {
        #[arg(long)]
        nu: String,
    },
    /// Run verification suites and write the summary and CSV artifacts.
    Verify {
        /// Restrict to these suites (repeatable).
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Record wall-clock timings in the summary.
        #[arg(long)]
        timings: bool,
    },
    /// Export a Gram matrix, dual PBW characters or a canonical basis.
    Export {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        nu: String,
    },
    /// Manage the Gram matrix cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderAction {
    Show,
    Check,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Gram,
    Pbw,
    Canonical,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    Clear,
    Stat,
}

/// Writes to stdout; a closed pipe ends the output quietly.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        std::process::exit(0);
    }
}

macro_rules! emitln {
    ($($arg:tt)*) => { emit(&(format!($($arg)*) + "\n")) };
}

fn load_config(path: Option<&Path>) -> Result<RunConfig, CliError> {
    let path = path.ok_or_else(|| CliError::Usage("this command needs --config <path>".into()))?;
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    RunConfig::parse(&text)
}

fn weight(text: &str, config: &RunConfig) -> Result<WeightVec, CliError> {
    let mut ws = parse_weight_list(text).map_err(CliError::Usage)?;
    let n = config.rank + 1;
    match (ws.pop(), ws.is_empty()) {
        (Some(w), true) if w.len() == n && w.is_nonneg() && !w.is_zero() && w.height() <= config.height_bound => Ok(w),
        _ => Err(CliError::Usage(format!(
            "--nu must be one nonzero vector of {n} nonnegative integers of height ≤ {}",
            config.height_bound
        ))),
    }
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    let config_path = cli.config.as_deref();
    match cli.command {
        Command::Roots { family, rank, height } => {
            let c = build_cartan(AffineType::parse(&family)?, rank)?;
            emitln!("coordinates,kind,height");
            for r in c.positive_roots_up_to(height) {
                emitln!("{}", r.csv_row());
            }
            Ok(0)
        }
        Command::Order { action: OrderAction::Show } => {
            let config = load_config(config_path)?;
            let spec = order_spec(&config)?;
            let roots = spec.sorted_roots(config.height_bound);
            emitln!("position,root,kind,height");
            for (k, r) in roots.iter().enumerate() {
                emitln!("{k},{}", r.csv_row());
            }
            Ok(0)
        }
        Command::Order { action: OrderAction::Check } => {
            let config = load_config(config_path)?;
            let options = RunOptions { timings: false, suites: Some(vec![Suite::Convexity]) };
            let artifacts = run(&config, &options)?;
            emit(&artifacts.summary.to_json());
            Ok(artifacts.summary.exit_code())
        }
        Command::Pbw { nu } => {
            let config = load_config(config_path)?;
            let nu = weight(&nu, &config)?;
            emit(&to_csv(&PBW_HEADER, pbw_rows(&engine(&config)?, &nu)?));
            Ok(0)
        }
        Command::Canonical { nu } => {
            let config = load_config(config_path)?;
            let nu = weight(&nu, &config)?;
            emit(&to_csv(&CANONICAL_HEADER, canonical_rows(&engine(&config)?, &nu)?));
            Ok(0)
        }
        Command::Verify { suites, timings } => {
            let config = load_config(config_path)?;
            let suites = if suites.is_empty() {
                None
            } else {
                Some(suites.iter().map(|s| s.parse()).collect::<Result<Vec<Suite>, String>>().map_err(CliError::Usage)?)
            };
            let artifacts = run(&config, &RunOptions { timings, suites })?;
            for w in &artifacts.warnings {
                eprintln!("{w}");
            }
            artifacts.write(&config.output_dir)?;
            for s in &artifacts.summary.suites {
                emitln!("{:<10} {}", s.name, serde_json::to_value(s.status).expect("status").as_str().unwrap_or(""));
            }
            Ok(artifacts.summary.exit_code())
        }
        Command::Export { what, format, nu } => {
            let config = load_config(config_path)?;
            let nu = weight(&nu, &config)?;
            let e = engine(&config)?;
            let (header, rows): (&[&str], Vec<Vec<String>>) = match what {
                What::Gram => (&GRAM_HEADER, gram_rows(&*e.gram(&nu)?)),
                What::Pbw => (&PBW_HEADER, pbw_rows(&e, &nu)?),
                What::Canonical => (&CANONICAL_HEADER, canonical_rows(&e, &nu)?),
            };
            match format {
                Format::Csv => emit(&to_csv(header, rows)),
                Format::Json => {
                    let records: Vec<serde_json::Map<String, serde_json::Value>> = rows
                        .into_iter()
                        .map(|r| header.iter().map(|h| h.to_string()).zip(r.into_iter().map(serde_json::Value::from)).collect())
                        .collect();
                    let mut doc = json!({ "weight": nu.to_string(), "rows": records });
                    if let What::Gram = what {
                        doc["denominator"] = json!(qshuffle::one_minus_q2().pow(nu.height() as u32).to_string());
                    }
                    emitln!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
                }
            }
            Ok(0)
        }
        Command::Cache { action } => {
            let config = match config_path {
                Some(p) => Some(load_config(Some(p))?),
                None => None,
            };
            let cache = GramCache::new(cache_dir(config.as_ref()));
            match action {
                CacheAction::Clear => emitln!("removed {} entries from {}", cache.clear()?, cache.dir().display()),
                CacheAction::Stat => {
                    let entries = cache.entries()?;
                    let bytes: u64 = entries.iter().filter_map(|p| std::fs::metadata(p).ok()).map(|m| m.len()).sum();
                    emitln!("dir {}\nentries {}\nbytes {bytes}", cache.dir().display(), entries.len());
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
