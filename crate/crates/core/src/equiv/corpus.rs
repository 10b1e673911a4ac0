//! Differential test cases on disk.
//!
//! Each case is a directory holding `input.c`, `externs.json` and
//! `expected.verdict`. The verdict file names the expected status on its
//! first line; further `path = value` lines pin final Xd-C values (`exit`
//! pins main's result):
//!
//! ```text
//! equivalent
//! exit = 0
//! a[1] = 5
//! ```

use super::harness::{differential_run, DiffReport, EquivVerdict, Status, Witness};
use crate::externs::ExternTable;
use crate::value::Value;
use crate::xdc::{frontend, Checked};
use crate::xdc_interp::Verdict as XVerdict;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("{0}: missing file")]
    Missing(PathBuf),
    #[error("{0}: {1}")]
    Io(PathBuf, String),
    #[error("{0}: {1}")]
    Invalid(PathBuf, String),
    /// Rendered frontend diagnostics.
    #[error("{0}")]
    Frontend(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expected {
    pub status: Status,
    pub exit: Option<i64>,
    pub values: Vec<(String, String)>,
}

impl Expected {
    pub fn parse(text: &str) -> Result<Expected, String> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let first = lines.next().ok_or("empty verdict file")?;
        let status = Status::parse(first).ok_or_else(|| format!("unknown status `{first}`"))?;
        let mut exp = Expected { status, exit: None, values: vec![] };
        for l in lines {
            let (k, v) = l.split_once('=').ok_or_else(|| format!("expected `path = value`, got `{l}`"))?;
            let (k, v) = (k.trim(), v.trim());
            if k == "exit" {
                exp.exit = Some(v.parse().map_err(|_| format!("bad exit value `{v}`"))?);
            } else {
                exp.values.push((k.to_string(), v.to_string()));
            }
        }
        Ok(exp)
    }
}

pub struct Case {
    pub name: String,
    pub dir: PathBuf,
    pub source: String,
    pub checked: Checked,
    pub externs: ExternTable,
    pub expected: Expected,
}

fn read(p: &Path) -> Result<String, CorpusError> {
    if !p.exists() {
        return Err(CorpusError::Missing(p.to_path_buf()));
    }
    std::fs::read_to_string(p).map_err(|e| CorpusError::Io(p.to_path_buf(), e.to_string()))
}

pub fn load_case(dir: &Path) -> Result<Case, CorpusError> {
    let input = dir.join("input.c");
    let source = read(&input)?;
    let ext_path = dir.join("externs.json");
    let externs = ExternTable::from_json(&read(&ext_path)?).map_err(|e| CorpusError::Invalid(ext_path.clone(), e))?;
    let exp_path = dir.join("expected.verdict");
    let expected = Expected::parse(&read(&exp_path)?).map_err(|e| CorpusError::Invalid(exp_path.clone(), e))?;
    let file = input.display().to_string();
    let checked = frontend(&source)
        .map_err(|ds| CorpusError::Frontend(ds.iter().map(|d| d.render(&file)).collect::<Vec<_>>().join("\n")))?;
    let name = dir.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(Case { name, dir: dir.to_path_buf(), source, checked, externs, expected })
}

/// All case directories under `root`, sorted by name.
pub fn load_corpus(root: &Path) -> Result<Vec<Case>, CorpusError> {
    let entries = std::fs::read_dir(root).map_err(|e| CorpusError::Io(root.to_path_buf(), e.to_string()))?;
    let mut dirs: Vec<PathBuf> = entries.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.is_dir()).collect();
    dirs.sort();
    dirs.iter().map(|d| load_case(d)).collect()
}

fn value_matches(v: &Value, text: &str) -> bool {
    if v.to_string() == text {
        return true;
    }
    match v {
        Value::Int(n, _) => text.trim_end_matches('u').parse::<i64>() == Ok(*n),
        Value::F32(x) => text.trim_end_matches('f').parse::<f32>() == Ok(*x),
        Value::F64(x) => text.parse::<f64>() == Ok(*x),
        _ => false,
    }
}

pub struct CaseResult {
    pub name: String,
    pub expected: Status,
    /// The harness verdict, downgraded to a mismatch when a pinned value
    /// disagrees.
    pub verdict: EquivVerdict,
    pub report: DiffReport,
    pub elapsed: Duration,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.verdict.status == self.expected
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "case": self.name,
            "expected": self.expected,
            "passed": self.passed(),
            "verdict": self.verdict,
            "xdc": self.report.xdc.verdict.to_string(),
            "msvl": self.report.msvl.verdict.to_string(),
            "seconds": self.elapsed.as_secs_f64(),
        })
    }
}

fn pinned_mismatch(case: &Case, report: &DiffReport) -> Option<Witness> {
    let exp = &case.expected;
    if let Some(e) = exp.exit {
        let got = match &report.xdc.verdict {
            XVerdict::Terminates(n) => n.to_string(),
            v => v.to_string(),
        };
        if got != e.to_string() {
            return Some(Witness { path: "exit".into(), xdc: got, msvl: format!("expected {e}") });
        }
    }
    let snap = report.xdc.snapshot.as_ref();
    for (path, want) in &exp.values {
        let got = snap.and_then(|s| s.get(path));
        if !got.as_ref().is_some_and(|v| value_matches(v, want)) {
            let shown = got.map(|v| v.to_string()).unwrap_or_else(|| "<missing>".into());
            return Some(Witness { path: path.clone(), xdc: shown, msvl: format!("expected {want}") });
        }
    }
    None
}

pub fn run_case(case: &Case, fuel: u64) -> CaseResult {
    let t0 = Instant::now();
    let report = differential_run(&case.checked, &case.externs, fuel);
    let mut verdict = report.verdict.clone();
    if verdict.status == case.expected.status {
        if let Some(w) = pinned_mismatch(case, &report) {
            verdict = EquivVerdict { status: Status::Mismatch, witness: Some(w), alpha: verdict.alpha };
        }
    }
    CaseResult { name: case.name.clone(), expected: case.expected.status, verdict, report, elapsed: t0.elapsed() }
}

/// Runs cases on a few worker threads; results come back in case order.
pub fn run_corpus(cases: &[Case], fuel: u64) -> Vec<CaseResult> {
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).clamp(1, 8);
    let next = AtomicUsize::new(0);
    let mut out: Vec<(usize, CaseResult)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut mine = Vec::new();
                    loop {
                        let k = next.fetch_add(1, Ordering::Relaxed);
                        let Some(c) = cases.get(k) else { break };
                        mine.push((k, run_case(c, fuel)));
                    }
                    mine
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    out.sort_by_key(|(k, _)| *k);
    out.into_iter().map(|(_, r)| r).collect()
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// JUnit-style report for CI.
pub fn junit_xml(results: &[CaseResult]) -> String {
    let failures = results.iter().filter(|r| !r.passed()).count();
    let total: f64 = results.iter().map(|r| r.elapsed.as_secs_f64()).sum();
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<testsuite name=\"c2m-diff\" tests=\"{}\" failures=\"{failures}\" time=\"{total:.3}\">\n",
        results.len()
    ));
    for r in results {
        out.push_str(&format!(
            "  <testcase classname=\"diff\" name=\"{}\" time=\"{:.3}\"",
            xml_escape(&r.name),
            r.elapsed.as_secs_f64()
        ));
        if r.passed() {
            out.push_str("/>\n");
            continue;
        }
        let msg = match &r.verdict.witness {
            Some(w) => format!("{} (expected {}): {}: xdc {} / msvl {}", r.verdict.status, r.expected, w.path, w.xdc, w.msvl),
            None => format!("{} (expected {})", r.verdict.status, r.expected),
        };
        out.push_str(&format!(">\n    <failure message=\"{}\"/>\n  </testcase>\n", xml_escape(&msg)));
    }
    out.push_str("</testsuite>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_verdict_files() {
        let e = Expected::parse("# comment\nequivalent\nexit = 3\nx = 2\na[1] = -4\n").unwrap();
        assert_eq!(e.status, Status::Equivalent);
        assert_eq!(e.exit, Some(3));
        assert_eq!(e.values, vec![("x".into(), "2".into()), ("a[1]".into(), "-4".into())]);
        assert!(Expected::parse("").is_err());
        assert!(Expected::parse("fine").is_err());
        assert!(Expected::parse("equivalent\nx 2").is_err());
    }

    #[test]
    fn value_text_matching() {
        assert!(value_matches(&Value::int(3), "3"));
        assert!(value_matches(&Value::Int(3, crate::types::IntTy::U32), "3"));
        assert!(value_matches(&Value::F64(2.5), "2.5"));
        assert!(!value_matches(&Value::int(3), "4"));
    }

    #[test]
    fn cases_on_disk() {
        let dir = tempdir();
        std::fs::write(dir.join("input.c"), "int x;\nint main(void){ x = 2; return 1; }\n").unwrap();
        std::fs::write(dir.join("externs.json"), "{}").unwrap();
        std::fs::write(dir.join("expected.verdict"), "equivalent\nexit = 1\nx = 2\n").unwrap();
        let case = load_case(&dir).unwrap();
        let r = run_case(&case, 10_000);
        assert!(r.passed(), "{:?}", r.verdict);
        std::fs::write(dir.join("expected.verdict"), "equivalent\nx = 5\n").unwrap();
        let r = run_case(&load_case(&dir).unwrap(), 10_000);
        assert_eq!(r.verdict.status, Status::Mismatch);
        assert_eq!(r.verdict.witness.as_ref().unwrap().path, "x");
        assert!(junit_xml(&[r]).contains("failures=\"1\""));
        std::fs::remove_file(dir.join("externs.json")).unwrap();
        assert!(matches!(load_case(&dir), Err(CorpusError::Missing(_))));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    fn tempdir() -> PathBuf {
        let d = std::env::temp_dir().join(format!("c2m-case-{}", std::process::id()));
        std::fs::create_dir_all(&d).unwrap();
        d
    }
}
