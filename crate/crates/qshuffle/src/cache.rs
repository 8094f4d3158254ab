//! On-disk cache of Gram matrices.
//!
//! One text file per `(Cartan datum, ν)`:
//!
//! ```text
//! PBWFORGE-GRAM v1
//! cartan=<hex hash>
//! nu=<comma-separated coordinates>
//! words=<count>
//! <row> <col> <numerator> <denominator>     (one line per entry)
//! crc=<hex CRC-32 of every preceding byte>
//! ```
//!
//! Rows and columns index the words of weight `ν` in lexicographic order;
//! entries are reduced fractions of `⟨θ_w, θ_{w'}⟩` in the polynomial
//! grammar of `exactq`.  Files are written to a temporary name and renamed
//! into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use affine_roots::{CartanDatum, WeightVec};
use exactq::text::split_polys;
use exactq::{LaurentPoly, RatFunc};

use crate::error::ShuffleError;
use crate::gram::GramMatrix;
use crate::word::words_of_weight;

pub const HEADER: &str = "PBWFORGE-GRAM v1";

/// How a Gram matrix was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    /// A corrupt file was found, discarded and rewritten.
    Recovered,
}

#[derive(Clone, Debug)]
pub struct GramCache {
    dir: PathBuf,
}

fn nu_text(nu: &WeightVec) -> String {
    nu.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Serializes a Gram matrix in the cache format.
pub fn encode(g: &GramMatrix, cartan_hash: &str) -> String {
    let mut body = String::new();
    body.push_str(HEADER);
    body.push('\n');
    body.push_str(&format!("cartan={cartan_hash}\nnu={}\nwords={}\n", nu_text(g.weight()), g.size()));
    for i in 0..g.size() {
        for j in 0..g.size() {
            let e = g.entry(i, j);
            body.push_str(&format!("{i} {j} {} {}\n", e.numer(), e.denom()));
        }
    }
    let crc = crc32fast::hash(body.as_bytes());
    body.push_str(&format!("crc={crc:08x}\n"));
    body
}

/// Parses the cache format, checking the header fields against the
/// expected Cartan hash and weight.
pub fn decode(text: &str, cartan_hash: &str, nu: &WeightVec) -> Result<GramMatrix, String> {
    let body_end = text.rfind("crc=").ok_or("missing crc line")?;
    let (body, tail) = text.split_at(body_end);
    let tail = tail.strip_suffix('\n').ok_or("missing final newline")?;
    let crc = u32::from_str_radix(tail.strip_prefix("crc=").unwrap_or(""), 16).map_err(|_| "bad crc field")?;
    if tail.len() != 12 || crc32fast::hash(body.as_bytes()) != crc {
        return Err("checksum mismatch".into());
    }
    let mut lines = body.lines();
    if lines.next() != Some(HEADER) {
        return Err("bad header".into());
    }
    if lines.next() != Some(&format!("cartan={cartan_hash}")[..]) {
        return Err("cartan hash mismatch".into());
    }
    if lines.next() != Some(&format!("nu={}", nu_text(nu))[..]) {
        return Err("weight mismatch".into());
    }
    let n = words_of_weight(nu).len();
    if lines.next() != Some(&format!("words={n}")[..]) {
        return Err("word count mismatch".into());
    }
    let den = crate::gram::one_minus_q2().pow(nu.height() as u32);
    let mut num = vec![vec![LaurentPoly::zero(); n]; n];
    let mut seen = vec![vec![false; n]; n];
    for line in lines {
        let (i, rest) = line.split_once(' ').ok_or("short entry line")?;
        let (j, rest) = rest.split_once(' ').ok_or("short entry line")?;
        let (i, j): (usize, usize) = (i.parse().map_err(|_| "bad row")?, j.parse().map_err(|_| "bad column")?);
        if i >= n || j >= n || seen[i][j] {
            return Err(format!("bad or repeated entry index {i} {j}"));
        }
        let fields = split_polys(rest);
        if fields.len() != 2 {
            return Err("expected numerator and denominator".into());
        }
        let p: LaurentPoly = fields[0].parse().map_err(|e| format!("{e}"))?;
        let d: LaurentPoly = fields[1].parse().map_err(|e| format!("{e}"))?;
        let r = RatFunc::new(p, d).map_err(|e| format!("{e}"))?;
        let scaled = r.mul_laurent(&den);
        num[i][j] = scaled.to_laurent().ok_or("entry is not over (1-q^2)^h")?;
        seen[i][j] = true;
    }
    if seen.iter().any(|r| r.iter().any(|s| !s)) {
        return Err("missing entries".into());
    }
    Ok(GramMatrix::from_numerators(nu.clone(), num))
}

impl GramCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        GramCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, cartan_hash: &str, nu: &WeightVec) -> PathBuf {
        let nu = nu.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("-");
        self.dir.join(format!("gram-{cartan_hash}-{nu}.txt"))
    }

    /// Reads a cached matrix: `Ok(None)` if absent, `CacheCorrupt` if the
    /// file fails validation.
    pub fn load(&self, cartan_hash: &str, nu: &WeightVec) -> Result<Option<GramMatrix>, ShuffleError> {
        let path = self.path_for(cartan_hash, nu);
        let text = match fs::read(&path) {
            Ok(bytes) => bytes,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(source) => return Err(ShuffleError::CacheIo { path, source }),
        };
        let text = String::from_utf8(text)
            .map_err(|_| ShuffleError::CacheCorrupt { path: path.clone(), reason: "not UTF-8".into() })?;
        decode(&text, cartan_hash, nu).map(Some).map_err(|reason| ShuffleError::CacheCorrupt { path, reason })
    }

    /// Writes a matrix atomically (temporary file, then rename).
    pub fn store(&self, cartan_hash: &str, g: &GramMatrix) -> Result<(), ShuffleError> {
        let path = self.path_for(cartan_hash, g.weight());
        let io = |source| ShuffleError::CacheIo { path: path.clone(), source };
        fs::create_dir_all(&self.dir).map_err(io)?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(encode(g, cartan_hash).as_bytes()).map_err(io)?;
        f.sync_all().map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)?;
        Ok(())
    }

    /// The cached matrix, or a freshly built one (which is then stored).
    /// A corrupt file is replaced.
    pub fn get_or_build(&self, c: &CartanDatum, nu: &WeightVec) -> Result<(GramMatrix, CacheStatus), ShuffleError> {
        let hash = c.hash_hex();
        let status = match self.load(&hash, nu) {
            Ok(Some(g)) => return Ok((g, CacheStatus::Hit)),
            Ok(None) => CacheStatus::Miss,
            Err(ShuffleError::CacheCorrupt { .. }) => CacheStatus::Recovered,
            Err(e) => return Err(e),
        };
        let g = GramMatrix::build(c, nu);
        self.store(&hash, &g)?;
        Ok((g, status))
    }

    /// Cache files currently present, sorted by name.
    pub fn entries(&self) -> Result<Vec<PathBuf>, ShuffleError> {
        let rd = match fs::read_dir(&self.dir) {
            Ok(rd) => rd,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(source) => return Err(ShuffleError::CacheIo { path: self.dir.clone(), source }),
        };
        let mut out: Vec<PathBuf> = rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                p.file_name().and_then(|n| n.to_str()).map(|n| n.starts_with("gram-") && n.ends_with(".txt")).unwrap_or(false)
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Removes every cache file; returns how many were removed.
    pub fn clear(&self) -> Result<usize, ShuffleError> {
        let files = self.entries()?;
        for p in &files {
            fs::remove_file(p).map_err(|source| ShuffleError::CacheIo { path: p.clone(), source })?;
        }
        Ok(files.len())
    }
}
