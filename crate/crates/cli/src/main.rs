//! `c2m`: translate Xd-C to MSVL, run either interpreter, check translated
//! programs differentially and report size statistics.
//!
//! Exit codes: 0 ok, 1 internal error, 2 input or configuration error,
//! 3 equivalence failure, 4 timeout.

use c2m_core::diag::Diagnostic;
use c2m_core::equiv::corpus::{junit_xml, load_case, load_corpus, run_corpus, Case, CorpusError};
use c2m_core::externs::ExternTable;
use c2m_core::msvl::{emit_program, parse_msvl, MsvlProgram, Style};
use c2m_core::stats::{aggregate, measure, nonblank_lines};
use c2m_core::translate::translate;
use c2m_core::xdc::frontend;
use c2m_core::{msvl_interp, xdc_interp};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

const OK: u8 = 0;
const INTERNAL: u8 = 1;
const INPUT: u8 = 2;
const NOT_EQUIVALENT: u8 = 3;
const TIMEOUT: u8 = 4;

#[derive(Parser)]
#[command(name = "c2m", version, about = "Xd-C to MSVL translator and differential checker")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Step budget (Xd-C statements; the MSVL side gets a scaled budget).
    #[arg(long, env = "C2M_FUEL", default_value_t = xdc_interp::DEFAULT_FUEL,
          value_parser = clap::value_parser!(u64).range(1..))]
    fuel: u64,
    /// Print machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Translate an Xd-C file to MSVL.
    Translate {
        input: PathBuf,
        /// Output file (stdout when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// One construct per line (the default).
        #[arg(long, conflicts_with = "compact")]
        canonical: bool,
        /// Everything on one line.
        #[arg(long)]
        compact: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a program on one of the reference interpreters.
    Run {
        #[arg(value_enum)]
        which: Lang,
        /// `.c` input for xdc; `.m` or `.c` (translated first) for msvl.
        input: PathBuf,
        /// Extern call script (JSON).
        #[arg(long)]
        externs: Option<PathBuf>,
        /// Write the store/event trace (xdc) or the state-per-line interval (msvl).
        #[arg(long, visible_alias = "dump-interval", visible_alias = "trace")]
        dump: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Check case directories (`input.c`, `externs.json`, `expected.verdict`)
    /// or directories of them.
    Diff {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Write a JUnit-style XML report.
        #[arg(long)]
        junit: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// LOC, LOM, node counts and translation time for `.c` files.
    Stats {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Translations per file; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Lang {
    Xdc,
    Msvl,
}

/// A failure that ends the command with an exit code.
struct Fail(u8, String);

impl Fail {
    fn input(msg: impl Into<String>) -> Self {
        Fail(INPUT, msg.into())
    }
}

type Res = Result<u8, Fail>;

fn read(p: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(p).map_err(|e| Fail::input(format!("{}: {e}", p.display())))
}

fn write(p: &Path, text: &str) -> Result<(), Fail> {
    std::fs::write(p, text).map_err(|e| Fail::input(format!("{}: {e}", p.display())))
}

fn diagnostics(file: &Path, ds: &[Diagnostic], json: bool) -> Fail {
    let file = file.display().to_string();
    let text = if json {
        let all: Vec<_> = ds.iter().map(|d| d.to_json(&file)).collect();
        serde_json::to_string_pretty(&all).unwrap_or_default()
    } else {
        ds.iter().map(|d| d.render(&file)).collect::<Vec<_>>().join("\n")
    };
    Fail(INPUT, text)
}

fn externs(p: Option<&Path>) -> Result<ExternTable, Fail> {
    match p {
        None => Ok(ExternTable::default()),
        Some(p) => ExternTable::from_json(&read(p)?).map_err(|e| Fail::input(format!("{}: {e}", p.display()))),
    }
}

fn cmd_translate(input: &Path, output: Option<&Path>, compact: bool, json: bool) -> Res {
    let src = read(input)?;
    let t0 = Instant::now();
    let checked = frontend(&src).map_err(|ds| diagnostics(input, &ds, json))?;
    let tr = translate(&checked);
    let style = if compact { Style::Compact } else { Style::Canonical };
    let mut text = emit_program(&tr.program, style);
    if compact {
        text.push('\n');
    }
    let ms = t0.elapsed().as_secs_f64() * 1e3;
    let (loc, lom) = (nonblank_lines(&src), nonblank_lines(&text));
    let line = format!("{}: LOC {loc} LOM {lom} time {ms:.3} ms", input.display());
    match output {
        Some(out) => {
            write(out, &text)?;
            if json {
                let j = serde_json::json!({"file": input.display().to_string(), "output": out.display().to_string(),
                    "loc": loc, "lom": lom, "time_ms": ms});
                println!("{j}");
            } else {
                println!("{line}");
            }
        }
        None => {
            print!("{text}");
            eprintln!("{line}");
        }
    }
    Ok(OK)
}

fn load_msvl(input: &Path, src: &str, json: bool) -> Result<MsvlProgram, Fail> {
    if input.extension().is_some_and(|e| e == "c") {
        let checked = frontend(src).map_err(|ds| diagnostics(input, &ds, json))?;
        Ok(translate(&checked).program)
    } else {
        parse_msvl(src).map_err(|d| diagnostics(input, &[d], json))
    }
}

fn cmd_run(which: Lang, input: &Path, ext: Option<&Path>, dump: Option<&Path>, c: &Common) -> Res {
    let src = read(input)?;
    let table = externs(ext)?;
    let (verdict, code, out) = match which {
        Lang::Xdc => {
            let checked = frontend(&src).map_err(|ds| diagnostics(input, &ds, c.json))?;
            let cfg = xdc_interp::Config { fuel: c.fuel, trace_stores: dump.is_some(), ..Default::default() };
            let r = xdc_interp::run_program(&checked, &table, &cfg);
            if let Some(d) = dump {
                write(d, &r.trace_jsonl())?;
            }
            let code = match r.verdict {
                xdc_interp::Verdict::Terminates(_) => OK,
                xdc_interp::Verdict::Timeout => TIMEOUT,
                xdc_interp::Verdict::Error(_) => INPUT,
            };
            let j = serde_json::json!({
                "verdict": r.verdict.to_string(),
                "memory": r.snapshot.as_ref().map(|s| s.to_json()),
                "events": r.events.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
                "steps": r.steps,
            });
            (r.verdict.to_string(), code, j)
        }
        Lang::Msvl => {
            let prog = load_msvl(input, &src, c.json)?;
            let cfg = msvl_interp::Config { fuel: c.fuel, record_interval: dump.is_some(), ..Default::default() };
            let r = msvl_interp::run_program(&prog, &table, &cfg);
            if let Some(d) = dump {
                write(d, &r.interval_jsonl())?;
            }
            let code = match r.verdict {
                msvl_interp::Verdict::Terminates(_) => OK,
                msvl_interp::Verdict::Timeout => TIMEOUT,
                _ => INPUT,
            };
            let j = serde_json::json!({
                "verdict": r.verdict.to_string(),
                "states": r.final_config.map(|f| f.states),
                "rval": r.rval.as_ref().map(|v| v.to_json()),
                "memory": r.snapshot.as_ref().map(|s| s.to_json()),
                "events": r.events.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
                "steps": r.steps,
            });
            (r.verdict.to_string(), code, j)
        }
    };
    if c.json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap_or_default());
    } else {
        println!("{verdict}");
    }
    Ok(code)
}

fn corpus_error(e: CorpusError) -> Fail {
    Fail::input(e.to_string())
}

fn cmd_diff(paths: &[PathBuf], junit: Option<&Path>, c: &Common) -> Res {
    let mut cases: Vec<Case> = Vec::new();
    for p in paths {
        if !p.is_dir() {
            return Err(Fail::input(format!("{}: not a directory", p.display())));
        }
        if p.join("input.c").exists() {
            cases.push(load_case(p).map_err(corpus_error)?);
        } else {
            cases.extend(load_corpus(p).map_err(corpus_error)?);
        }
    }
    let results = run_corpus(&cases, c.fuel);
    if let Some(j) = junit {
        write(j, &junit_xml(&results))?;
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    if c.json {
        let all: Vec<_> = results.iter().map(|r| r.to_json()).collect();
        let j = serde_json::json!({"cases": all, "passed": results.len() - failed, "failed": failed});
        println!("{}", serde_json::to_string_pretty(&j).unwrap_or_default());
    } else {
        for r in &results {
            let mark = if r.passed() { "ok  " } else { "FAIL" };
            print!("{mark} {:<40} {}", r.name, r.verdict.status);
            if r.verdict.status != r.expected {
                print!(" (expected {})", r.expected);
            }
            if let Some(w) = &r.verdict.witness {
                print!("  at {}: xdc {} / msvl {}", w.path, w.xdc, w.msvl);
            }
            println!();
        }
        println!("{} passed, {failed} failed", results.len() - failed);
    }
    Ok(if failed == 0 { OK } else { NOT_EQUIVALENT })
}

fn c_files(p: &Path, out: &mut Vec<PathBuf>) -> Result<(), Fail> {
    if p.is_file() {
        out.push(p.to_path_buf());
        return Ok(());
    }
    let rd = std::fs::read_dir(p).map_err(|e| Fail::input(format!("{}: {e}", p.display())))?;
    let mut entries: Vec<PathBuf> = rd.filter_map(|e| e.ok().map(|e| e.path())).collect();
    entries.sort();
    for e in entries {
        if e.is_dir() {
            c_files(&e, out)?;
        } else if e.extension().is_some_and(|x| x == "c") {
            out.push(e);
        }
    }
    Ok(())
}

fn cmd_stats(paths: &[PathBuf], reps: usize, json: bool) -> Res {
    let mut files = Vec::new();
    for p in paths {
        c_files(p, &mut files)?;
    }
    let mut rows = Vec::new();
    for f in &files {
        let src = read(f)?;
        rows.push(measure(&f.display().to_string(), &src, reps).map_err(|ds| diagnostics(f, &ds, json))?);
    }
    let s = aggregate(rows);
    if json {
        println!("{}", serde_json::to_string_pretty(&s.to_json()).unwrap_or_default());
    } else {
        print!("{}", s.table());
    }
    Ok(OK)
}

fn dispatch(cli: Cli) -> Res {
    match &cli.cmd {
        Cmd::Translate { input, output, compact, json, .. } => cmd_translate(input, output.as_deref(), *compact, *json),
        Cmd::Run { which, input, externs, dump, common } => {
            cmd_run(*which, input, externs.as_deref(), dump.as_deref(), common)
        }
        Cmd::Diff { paths, junit, common } => cmd_diff(paths, junit.as_deref(), common),
        Cmd::Stats { paths, reps, json } => cmd_stats(paths, *reps, *json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { INPUT } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match std::panic::catch_unwind(|| dispatch(cli)) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(Fail(code, msg))) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
        Err(_) => ExitCode::from(INTERNAL),
    }
}
