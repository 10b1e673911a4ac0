//! Size and timing statistics for translated programs.
//!
//! LOC and LOM count physical nonblank lines of the C input and of the
//! canonical MSVL output. Node counts are the layout-independent measure.

use crate::diag::Diagnostic;
use crate::msvl::{emit_program, Style};
use crate::translate::translate;
use crate::xdc::ast::{Decl, Init, Item, Program, Stmt, StmtKind};
use crate::xdc::frontend;
use std::time::{Duration, Instant};

pub fn nonblank_lines(text: &str) -> usize {
    text.lines().filter(|l| !l.trim().is_empty()).count()
}

fn init_nodes(i: &Init) -> usize {
    match i {
        Init::Expr(e) => expr_nodes(e),
        Init::List(items, _) => 1 + items.iter().map(init_nodes).sum::<usize>(),
    }
}

fn expr_nodes(e: &crate::xdc::ast::Expr) -> usize {
    let mut n = 0;
    e.walk(&mut |_| n += 1);
    n
}

fn decl_nodes(d: &Decl) -> usize {
    match d {
        Decl::Vars(_, vs) => vs.iter().map(|v| 1 + v.init.as_ref().map_or(0, init_nodes)).sum(),
        Decl::Struct(..) => 1,
    }
}

fn stmt_nodes(s: &Stmt) -> usize {
    let mut n = 0;
    s.walk(&mut |s| n += 1 + s.exprs().iter().map(|e| expr_nodes(e)).sum::<usize>());
    n
}

/// Syntax-tree size of a parsed Xd-C program.
pub fn xdc_nodes(p: &Program) -> usize {
    p.items
        .iter()
        .map(|i| match i {
            Item::Decl(d) => decl_nodes(d),
            Item::Func(f) => 1 + f.params.len() + f.locals.iter().map(decl_nodes).sum::<usize>() + stmt_nodes(&f.body),
            Item::Extern(_) => 1,
        })
        .sum()
}

/// Statements other than sequencing and null statements.
pub fn statement_count(p: &Program) -> usize {
    let mut n = 0;
    for f in p.funcs() {
        f.body.walk(&mut |s| {
            if !matches!(s.kind, StmtKind::Seq(..) | StmtKind::Null) {
                n += 1;
            }
        });
    }
    n
}

#[derive(Clone, Debug, PartialEq)]
pub struct FileStats {
    pub name: String,
    pub loc: usize,
    pub lom: usize,
    pub statements: usize,
    pub nodes_in: usize,
    pub nodes_out: usize,
    /// Frontend, translation and emission, best of the repetitions.
    pub time: Duration,
}

impl FileStats {
    pub fn ratio(&self) -> f64 {
        self.lom as f64 / self.loc.max(1) as f64
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "file": self.name,
            "loc": self.loc,
            "lom": self.lom,
            "ratio": self.ratio(),
            "statements": self.statements,
            "nodes_in": self.nodes_in,
            "nodes_out": self.nodes_out,
            "time_us": self.time.as_secs_f64() * 1e6,
        })
    }
}

/// Translates `source` `reps` times (at least once) and keeps the fastest run.
pub fn measure(name: &str, source: &str, reps: usize) -> Result<FileStats, Vec<Diagnostic>> {
    let mut best: Option<(Duration, String, usize, usize, usize)> = None;
    for _ in 0..reps.max(1) {
        let t0 = Instant::now();
        let checked = frontend(source)?;
        let tr = translate(&checked);
        let text = emit_program(&tr.program, Style::Canonical);
        let dt = t0.elapsed();
        if best.as_ref().is_none_or(|b| dt < b.0) {
            let (ni, st) = (xdc_nodes(&checked.program), statement_count(&checked.program));
            best = Some((dt, text, ni, tr.program.count_nodes(), st));
        }
    }
    let (time, text, nodes_in, nodes_out, statements) = best.expect("at least one repetition");
    Ok(FileStats {
        name: name.to_string(),
        loc: nonblank_lines(source),
        lom: nonblank_lines(&text),
        statements,
        nodes_in,
        nodes_out,
        time,
    })
}

/// Least-squares line `y = slope * x + intercept`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

/// `None` for fewer than three points or constant `x`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Option<Fit> {
    let n = xs.len();
    if n < 3 || n != ys.len() {
        return None;
    }
    let nf = n as f64;
    let mx = xs.iter().sum::<f64>() / nf;
    let my = ys.iter().sum::<f64>() / nf;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    Some(Fit { slope, intercept, r2 })
}

#[derive(Clone, Debug)]
pub struct CorpusStats {
    pub files: Vec<FileStats>,
    pub loc: usize,
    pub lom: usize,
    /// Mean of the per-file LOM/LOC ratios.
    pub mean_ratio: f64,
    pub time: Duration,
    /// Translation time (microseconds) against statement count.
    pub fit: Option<Fit>,
}

pub fn aggregate(files: Vec<FileStats>) -> CorpusStats {
    let loc = files.iter().map(|f| f.loc).sum();
    let lom = files.iter().map(|f| f.lom).sum();
    let mean_ratio =
        if files.is_empty() { 0.0 } else { files.iter().map(FileStats::ratio).sum::<f64>() / files.len() as f64 };
    let time = files.iter().map(|f| f.time).sum();
    let xs: Vec<f64> = files.iter().map(|f| f.statements as f64).collect();
    let ys: Vec<f64> = files.iter().map(|f| f.time.as_secs_f64() * 1e6).collect();
    let fit = linear_fit(&xs, &ys);
    CorpusStats { files, loc, lom, mean_ratio, time, fit }
}

impl CorpusStats {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "files": self.files.iter().map(FileStats::to_json).collect::<Vec<_>>(),
            "loc": self.loc,
            "lom": self.lom,
            "ratio": self.lom as f64 / self.loc.max(1) as f64,
            "mean_ratio": self.mean_ratio,
            "time_us": self.time.as_secs_f64() * 1e6,
            "fit": self.fit.map(|f| serde_json::json!({"slope_us_per_stmt": f.slope, "intercept_us": f.intercept, "r2": f.r2})),
        })
    }

    /// Plain-text table: one row per file, then the totals.
    pub fn table(&self) -> String {
        let mut out = format!("{:<32} {:>7} {:>7} {:>6} {:>11}\n", "file", "LOC", "LOM", "ratio", "time(us)");
        for f in &self.files {
            out.push_str(&format!(
                "{:<32} {:>7} {:>7} {:>6.2} {:>11.1}\n",
                f.name,
                f.loc,
                f.lom,
                f.ratio(),
                f.time.as_secs_f64() * 1e6
            ));
        }
        out.push_str(&format!(
            "{:<32} {:>7} {:>7} {:>6.2} {:>11.1}\n",
            "total",
            self.loc,
            self.lom,
            self.lom as f64 / self.loc.max(1) as f64,
            self.time.as_secs_f64() * 1e6
        ));
        out.push_str(&format!("mean ratio {:.2}\n", self.mean_ratio));
        match self.fit {
            Some(f) => out.push_str(&format!("fit time = {:.3} us/stmt * n + {:.1} us, r2 = {:.4}\n", f.slope, f.intercept, f.r2)),
            None => out.push_str("fit: fewer than 3 files\n"),
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blank_lines_are_not_counted() {
        assert_eq!(nonblank_lines("a\n\n  \nb\n"), 2);
        assert_eq!(nonblank_lines(""), 0);
    }

    #[test]
    fn exact_line_has_unit_r2() {
        let f = linear_fit(&[1.0, 2.0, 3.0, 4.0], &[3.0, 5.0, 7.0, 9.0]).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-12 && (f.intercept - 1.0).abs() < 1e-12);
        assert!((f.r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fit_needs_three_points() {
        assert!(linear_fit(&[1.0, 2.0], &[1.0, 2.0]).is_none());
        assert!(linear_fit(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]).is_none());
    }

    #[test]
    fn noisy_line_r2_matches_hand_value() {
        // Hand computation: sxx = 2, sxy = 2, syy = 8/3, so r2 = 4 / (2 * 8/3) = 0.75.
        let f = linear_fit(&[0.0, 1.0, 2.0], &[0.0, 2.0, 2.0]).unwrap();
        assert!((f.r2 - 0.75).abs() < 1e-12, "{f:?}");
    }

    #[test]
    fn single_file_reports_ratio_without_fit() {
        let s = measure("t.c", "int x;\nint main(){\n  x = 1;\n  return 0;\n}\n", 1).unwrap();
        assert_eq!(s.loc, 5);
        assert!(s.lom > 0 && s.ratio() > 0.0);
        assert_eq!(s.statements, 2);
        let agg = aggregate(vec![s]);
        assert!(agg.fit.is_none());
        assert!(agg.table().contains("fewer than 3"));
    }

    #[test]
    fn node_counts() {
        let c = frontend("int x;\nint main(){ x = 1 + 2; return 0; }").unwrap();
        // x 1, main 1, seq 1, assignment 1 + 4, return 1 + 1
        assert_eq!(xdc_nodes(&c.program), 10);
    }
}
