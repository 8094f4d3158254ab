use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use affine_roots::{AffineType, WeightVec};
use convex_order::{format_rational, parse_rational};
use num_rational::BigRational;
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// A verification suite, listed in dependency order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Convexity,
    Pbw,
    Canonical,
    Ls,
    Imaginary,
    Bridge,
    Klr,
    Mv,
}

impl Suite {
    pub const ALL: [Suite; 8] =
        [Suite::Convexity, Suite::Pbw, Suite::Canonical, Suite::Ls, Suite::Imaginary, Suite::Bridge, Suite::Klr, Suite::Mv];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Convexity => "convexity",
            Suite::Pbw => "pbw",
            Suite::Canonical => "canonical",
            Suite::Ls => "ls",
            Suite::Imaginary => "imaginary",
            Suite::Bridge => "bridge",
            Suite::Klr => "klr",
            Suite::Mv => "mv",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// The weights a run covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSpec {
    List(Vec<WeightVec>),
    /// Every nonzero `ν ∈ ℕI` with `ht ν ≤ N`.
    UpTo(i64),
}

/// A parsed run configuration.
///
/// The text form is UTF-8 with `[section]` headers and `key = value`
/// lines; `#` starts a comment.  Keys:
///
/// ```text
/// [cartan]
/// type = "A"                  # A, D or E
/// rank = 1
///
/// [order]
/// rows = "1" "2"              # rows of quoted rationals, separated by `|`
/// height_bound = 8
/// swaps = 3, 4                # optional; adjacent transpositions (convexity only)
///
/// [weights]
/// up_to = 4                   # or: list = 1,1; 2,0
///
/// [run]
/// suites = pbw, canonical     # optional; default all
/// cache_dir = "cache"         # optional
/// output_dir = "out"          # optional; default "pbwforge-out"
/// seed = 0                    # optional
/// samples = 200               # optional; random cone-separation instances
/// ```
///
/// Unknown sections or keys and repeated keys are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub family: AffineType,
    pub rank: usize,
    pub rows: Vec<Vec<BigRational>>,
    pub height_bound: i64,
    pub swaps: Vec<usize>,
    pub weights: WeightSpec,
    pub suites: Vec<Suite>,
    pub cache_dir: Option<PathBuf>,
    pub output_dir: PathBuf,
    pub seed: u64,
    pub samples: usize,
}

const KEYS: [&str; 12] = [
    "cartan.type",
    "cartan.rank",
    "order.rows",
    "order.height_bound",
    "order.swaps",
    "weights.up_to",
    "weights.list",
    "run.suites",
    "run.cache_dir",
    "run.output_dir",
    "run.seed",
    "run.samples",
];

fn err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Config { line, message: message.into() }
}

fn unquote(line: usize, s: &str) -> Result<String, CliError> {
    let s = s.trim();
    let inner = s
        .strip_prefix('"')
        .and_then(|x| x.strip_suffix('"'))
        .ok_or_else(|| err(line, format!("expected a quoted string, found {s:?}")))?;
    if inner.contains('"') {
        return Err(err(line, "quotes inside strings are not allowed"));
    }
    Ok(inner.to_string())
}

fn parse_int<T: FromStr>(line: usize, s: &str) -> Result<T, CliError> {
    s.trim().parse().map_err(|_| err(line, format!("expected an integer, found {:?}", s.trim())))
}

/// The line up to the first `#` outside a quoted string.
fn strip_comment(raw: &str) -> &str {
    let mut quoted = false;
    for (k, ch) in raw.char_indices() {
        match ch {
            '"' => quoted = !quoted,
            '#' if !quoted => return &raw[..k],
            _ => {}
        }
    }
    raw
}

/// Splits `s` into quoted tokens separated by whitespace.
fn quoted_tokens(line: usize, s: &str) -> Result<Vec<String>, CliError> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('"').ok_or_else(|| err(line, format!("expected a quoted rational at {rest:?}")))?;
        let end = body.find('"').ok_or_else(|| err(line, "unterminated string"))?;
        out.push(body[..end].to_string());
        rest = body[end + 1..].trim_start();
    }
    Ok(out)
}

/// Parses `1,1; 2,0` into weight vectors.
pub fn parse_weight_list(s: &str) -> Result<Vec<WeightVec>, String> {
    s.split(';')
        .map(|w| {
            w.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad weight coordinate {:?}", x.trim())))
                .collect::<Result<Vec<i64>, String>>()
                .map(WeightVec)
        })
        .collect()
}

fn weight_text(w: &WeightVec) -> String {
    w.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl RunConfig {
    /// Parses and validates the text form.
    pub fn parse(text: &str) -> Result<RunConfig, CliError> {
        let mut section = String::new();
        let mut seen: BTreeSet<String> = BTreeSet::new();
        let mut family = None;
        let mut rank = None;
        let mut rows = None;
        let mut height_bound = None;
        let mut swaps = Vec::new();
        let mut weights = None;
        let mut suites = None;
        let mut cache_dir = None;
        let mut output_dir = None;
        let mut seed = 0;
        let mut samples = 200;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = strip_comment(raw).trim();
            if content.is_empty() {
                continue;
            }
            if let Some(name) = content.strip_prefix('[') {
                let name = name.strip_suffix(']').ok_or_else(|| err(line, "malformed section header"))?.trim();
                if !["cartan", "order", "weights", "run"].contains(&name) {
                    return Err(err(line, format!("unknown section [{name}]")));
                }
                section = name.to_string();
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| err(line, "expected `key = value`"))?;
            let full = format!("{section}.{}", key.trim());
            if section.is_empty() || !KEYS.contains(&full.as_str()) {
                return Err(err(line, format!("unknown key {full:?}")));
            }
            if !seen.insert(full.clone()) {
                return Err(err(line, format!("repeated key {full:?}")));
            }
            let value = value.trim();
            match full.as_str() {
                "cartan.type" => {
                    family = Some(AffineType::parse(&unquote(line, value)?).map_err(|e| err(line, e.to_string()))?)
                }
                "cartan.rank" => rank = Some(parse_int::<usize>(line, value)?),
                "order.rows" => {
                    let parsed = value
                        .split('|')
                        .map(|r| {
                            quoted_tokens(line, r)?
                                .iter()
                                .map(|x| parse_rational(x).map_err(|e| err(line, e.to_string())))
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    rows = Some(parsed);
                }
                "order.height_bound" => height_bound = Some(parse_int::<i64>(line, value)?),
                "order.swaps" => {
                    swaps = value.split(',').map(|x| parse_int::<usize>(line, x)).collect::<Result<_, _>>()?;
                }
                "weights.up_to" => weights = Some(WeightSpec::UpTo(parse_int(line, value)?)),
                "weights.list" => {
                    if weights.is_some() {
                        return Err(err(line, "give either weights.up_to or weights.list"));
                    }
                    weights = Some(WeightSpec::List(parse_weight_list(value).map_err(|m| err(line, m))?));
                }
                "run.suites" => {
                    let mut list: Vec<Suite> =
                        value.split(',').map(|x| x.trim().parse().map_err(|m: String| err(line, m))).collect::<Result<_, _>>()?;
                    let n = list.len();
                    list.sort();
                    list.dedup();
                    if list.len() != n {
                        return Err(err(line, "repeated suite"));
                    }
                    suites = Some(list);
                }
                "run.cache_dir" => cache_dir = Some(PathBuf::from(unquote(line, value)?)),
                "run.output_dir" => output_dir = Some(PathBuf::from(unquote(line, value)?)),
                "run.seed" => seed = parse_int(line, value)?,
                "run.samples" => samples = parse_int(line, value)?,
                _ => unreachable!("keys are checked above"),
            }
            if full == "weights.up_to" && seen.contains("weights.list") {
                return Err(err(line, "give either weights.up_to or weights.list"));
            }
        }
        let missing = |k: &str| err(0, format!("missing key {k:?}"));
        let config = RunConfig {
            family: family.ok_or_else(|| missing("cartan.type"))?,
            rank: rank.ok_or_else(|| missing("cartan.rank"))?,
            rows: rows.ok_or_else(|| missing("order.rows"))?,
            height_bound: height_bound.ok_or_else(|| missing("order.height_bound"))?,
            swaps,
            weights: weights.ok_or_else(|| missing("weights.up_to or weights.list"))?,
            suites: suites.unwrap_or_else(|| Suite::ALL.to_vec()),
            cache_dir,
            output_dir: output_dir.unwrap_or_else(|| PathBuf::from("pbwforge-out")),
            seed,
            samples,
        };
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<(), CliError> {
        let n = affine_roots::build_cartan(self.family, self.rank).map_err(|e| err(0, e.to_string()))?.n_nodes();
        if self.height_bound < 1 {
            return Err(err(0, "order.height_bound must be positive"));
        }
        if self.suites.is_empty() {
            return Err(err(0, "run.suites is empty"));
        }
        if !self.swaps.is_empty() && self.suites != [Suite::Convexity] {
            return Err(err(0, "order.swaps is only allowed with suites = convexity"));
        }
        for p in [&self.output_dir].into_iter().chain(self.cache_dir.as_ref()) {
            let s = p.to_string_lossy();
            if s.is_empty() || s.contains('"') {
                return Err(err(0, format!("bad path {s:?}")));
            }
        }
        match &self.weights {
            WeightSpec::UpTo(h) if *h < 1 || *h > self.height_bound => {
                return Err(err(0, format!("weights.up_to must lie in 1..={}", self.height_bound)))
            }
            WeightSpec::List(ws) => {
                for w in ws {
                    if w.len() != n || !w.is_nonneg() || w.is_zero() || w.height() > self.height_bound {
                        return Err(err(0, format!("weight {w} must be a nonzero vector of ℕ^{n} of height ≤ {}", self.height_bound)));
                    }
                }
                if ws.is_empty() {
                    return Err(err(0, "weights.list is empty"));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// The canonical text form; `parse(to_text(c)) == c`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("[cartan]\ntype = \"{}\"\nrank = {}\n\n", self.family, self.rank));
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| format!("\"{}\"", format_rational(x))).collect::<Vec<_>>().join(" "))
            .collect();
        out.push_str(&format!("[order]\nrows = {}\nheight_bound = {}\n", rows.join(" | "), self.height_bound));
        if !self.swaps.is_empty() {
            let s: Vec<String> = self.swaps.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("swaps = {}\n", s.join(", ")));
        }
        out.push_str("\n[weights]\n");
        match &self.weights {
            WeightSpec::UpTo(h) => out.push_str(&format!("up_to = {h}\n")),
            WeightSpec::List(ws) => {
                out.push_str(&format!("list = {}\n", ws.iter().map(weight_text).collect::<Vec<_>>().join("; ")))
            }
        }
        out.push_str("\n[run]\n");
        out.push_str(&format!("suites = {}\n", self.suites.iter().map(|s| s.name()).collect::<Vec<_>>().join(", ")));
        if let Some(d) = &self.cache_dir {
            out.push_str(&format!("cache_dir = \"{}\"\n", d.display()));
        }
        out.push_str(&format!("output_dir = \"{}\"\n", self.output_dir.display()));
        out.push_str(&format!("seed = {}\nsamples = {}\n", self.seed, self.samples));
        out
    }

    /// SHA-256 of the canonical text without the cache and output
    /// directories, which do not affect results.
    pub fn hash(&self) -> String {
        let mut c = self.clone();
        c.cache_dir = None;
        c.output_dir = PathBuf::from("-");
        let digest = Sha256::digest(c.to_text().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// The weights of the run, sorted by height and then lexicographically.
    pub fn weight_list(&self) -> Vec<WeightVec> {
        let n = self.rank + 1;
        let mut out = match &self.weights {
            WeightSpec::List(ws) => ws.clone(),
            WeightSpec::UpTo(h) => {
                let mut all = vec![vec![]];
                for _ in 0..n {
                    all = all
                        .into_iter()
                        .flat_map(|v: Vec<i64>| (0..=*h).map(move |x| [v.clone(), vec![x]].concat()))
                        .collect();
                }
                all.into_iter().filter(|v| (1..=*h).contains(&v.iter().sum::<i64>())).map(WeightVec).collect()
            }
        };
        out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        out.dedup();
        out
    }
}
