use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_pbwforge");

fn write_config(dir: &Path, name: &str, extra_order: &str, weights: &str, run: &str) -> std::path::PathBuf {
    let text = format!(
        "[cartan]\ntype = \"A\"\nrank = 1\n\n[order]\nrows = \"1\" \"2\"\nheight_bound = 6\n{extra_order}\n[weights]\n{weights}\n\n[run]\noutput_dir = \"{}\"\ncache_dir = \"{}\"\nseed = 11\n{run}",
        dir.join(format!("{name}-out")).display(),
        dir.join("cache").display(),
    );
    let path = dir.join(format!("{name}.cfg"));
    fs::write(&path, text).unwrap();
    path
}

fn pbwforge(args: &[&str], env_cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args).env_remove("PBWFORGE_CACHE");
    if let Some(dir) = env_cache {
        cmd.env("PBWFORGE_CACHE", dir);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn artifacts(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap()))
        .collect();
    files.sort();
    files
}

#[test]
fn verify_passes_and_is_deterministic_across_cold_and_warm_cache() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(tmp.path(), "a1", "", "up_to = 4", "");
    let cfg = cfg.to_str().unwrap();
    let cold = pbwforge(&["--config", cfg, "verify"], None);
    assert_eq!(cold.status.code(), Some(0), "{}", String::from_utf8_lossy(&cold.stderr));
    let first = artifacts(&tmp.path().join("a1-out"));
    let names: Vec<&str> = first.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, ["canonical.csv", "convexity.csv", "klr.csv", "pbw.csv", "summary.json"]);
    assert!(fs::read_dir(tmp.path().join("cache")).unwrap().count() > 0);
    let warm = pbwforge(&["--config", cfg, "verify"], None);
    assert_eq!(warm.status.code(), Some(0));
    assert_eq!(artifacts(&tmp.path().join("a1-out")), first);
    assert_eq!(stdout(&cold), stdout(&warm));

    let summary: serde_json::Value = serde_json::from_slice(&first.last().unwrap().1).unwrap();
    assert_eq!(summary["config_hash"].as_str().unwrap().len(), 64);
    assert!(summary.get("timings_ms").is_none());
    let suites = summary["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 8);
    assert!(suites.iter().all(|s| s["status"] == "pass"));
}

#[test]
fn suite_selection_and_timings() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(tmp.path(), "sel", "", "list = 1,1; 2,1", "");
    let out = pbwforge(&["--config", cfg.to_str().unwrap(), "verify", "--suite", "pbw", "--suite", "klr", "--timings"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "pbw        pass\nklr        pass\n");
    let summary: serde_json::Value =
        serde_json::from_slice(&fs::read(tmp.path().join("sel-out/summary.json")).unwrap()).unwrap();
    assert!(summary["timings_ms"]["pbw"].is_u64());
    let bad = pbwforge(&["--config", cfg.to_str().unwrap(), "verify", "--suite", "nope"], None);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn scrambled_order_is_a_finding() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(tmp.path(), "bad", "swaps = 2", "up_to = 4", "suites = convexity\n");
    let out = pbwforge(&["--config", cfg.to_str().unwrap(), "verify"], None);
    assert_eq!(out.status.code(), Some(2));
    let summary: serde_json::Value =
        serde_json::from_slice(&fs::read(tmp.path().join("bad-out/summary.json")).unwrap()).unwrap();
    assert_eq!(summary["suites"][0]["status"], "finding");
    assert!(summary["suites"][0]["details"].as_array().unwrap().iter().any(|d| d.get("violation").is_some()));
    let check = pbwforge(&["--config", cfg.to_str().unwrap(), "order", "check"], None);
    assert_eq!(check.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_one() {
    let missing = pbwforge(&["--config", "/nonexistent/run.cfg", "verify"], None);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("error"));
    assert_eq!(pbwforge(&["verify"], None).status.code(), Some(1));
    assert_eq!(pbwforge(&["frobnicate"], None).status.code(), Some(1));
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(tmp.path(), "u", "", "up_to = 2", "bogus = 1\n");
    let out = pbwforge(&["--config", cfg.to_str().unwrap(), "verify"], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown key"));
}

#[test]
fn roots_and_order_listing() {
    let out = pbwforge(&["roots", "--type", "A", "--rank", "1", "--height", "3"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "coordinates,kind,height\n0 1,real,1\n1 0,real,1\n1 1,imaginary1,2\n1 2,real,3\n2 1,real,3\n");
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(tmp.path(), "o", "", "up_to = 2", "");
    let show = stdout(&pbwforge(&["--config", cfg.to_str().unwrap(), "order", "show"], None));
    assert!(show.starts_with("position,root,kind,height\n0,1 0,real,1\n"));
}

#[test]
fn pbw_canonical_and_export() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(tmp.path(), "x", "", "up_to = 2", "");
    let cfg = cfg.to_str().unwrap();
    let pbw = stdout(&pbwforge(&["--config", cfg, "pbw", "--nu", "1,1"], None));
    assert_eq!(
        pbw,
        "weight,partition,word,coefficient\n\"(1,1)\",[(1)],0.1,1*q^0\n\"(1,1)\",\"(0,1) (1,0)\",0.1,1*q^2\n\"(1,1)\",\"(0,1) (1,0)\",1.0,1*q^0\n"
    );
    let can = stdout(&pbwforge(&["--config", cfg, "canonical", "--nu", "1,1"], None));
    assert!(can.contains("\"(1,1)\",[(1)],\"(0,1) (1,0)\",1*q^2\n"));
    let gram = stdout(&pbwforge(&["--config", cfg, "export", "--what", "gram", "--format", "csv", "--nu", "1,1"], None));
    assert_eq!(gram.lines().count(), 5);
    let json = pbwforge(&["--config", cfg, "export", "--what", "gram", "--format", "json", "--nu", "1,1"], None);
    let doc: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(doc["denominator"], "1*q^0 + -2*q^2 + 1*q^4");
    assert_eq!(doc["rows"].as_array().unwrap().len(), 4);
    let canon = stdout(&pbwforge(&["--config", cfg, "export", "--what", "canonical", "--nu", "1,1"], None));
    assert_eq!(canon, can);
    assert_eq!(pbwforge(&["--config", cfg, "pbw", "--nu", "9,9"], None).status.code(), Some(1));
    assert_eq!(pbwforge(&["--config", cfg, "pbw", "--nu", "1,x"], None).status.code(), Some(1));
}

#[test]
fn cache_commands_and_environment_override() {
    let tmp = tempfile::tempdir().unwrap();
    let env_dir = tmp.path().join("env-cache");
    let cfg = write_config(tmp.path(), "c", "", "up_to = 3", "suites = pbw\n");
    let cfg = cfg.to_str().unwrap();
    assert_eq!(pbwforge(&["--config", cfg, "verify"], Some(&env_dir)).status.code(), Some(0));
    assert!(!tmp.path().join("cache").exists());
    let stat = stdout(&pbwforge(&["cache", "stat"], Some(&env_dir)));
    assert!(stat.contains("entries 9\n"), "{stat}");
    let cleared = stdout(&pbwforge(&["cache", "clear"], Some(&env_dir)));
    assert!(cleared.starts_with("removed 9 entries"));
    let stat = stdout(&pbwforge(&["--config", cfg, "cache", "stat"], None));
    assert!(stat.contains("entries 0\n"));
}

#[test]
fn corrupt_or_unusable_cache_is_recomputed() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(tmp.path(), "k", "", "up_to = 3", "suites = pbw\n");
    let cfg = cfg.to_str().unwrap();
    assert_eq!(pbwforge(&["--config", cfg, "verify"], None).status.code(), Some(0));
    let reference = artifacts(&tmp.path().join("k-out"));
    for entry in fs::read_dir(tmp.path().join("cache")).unwrap() {
        fs::write(entry.unwrap().path(), "garbage").unwrap();
    }
    let out = pbwforge(&["--config", cfg, "verify"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("corrupt"));
    assert_eq!(artifacts(&tmp.path().join("k-out")), reference);
    // A regular file where the cache directory should be.
    let blocked = tmp.path().join("blocked");
    fs::write(&blocked, "").unwrap();
    let out = pbwforge(&["--config", cfg, "verify"], Some(&blocked));
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unusable"));
    assert_eq!(artifacts(&tmp.path().join("k-out")), reference);
}
