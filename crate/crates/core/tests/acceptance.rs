//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

use c2m_core::coverage::Coverage;
use c2m_core::equiv::corpus::{load_corpus, run_corpus};
use c2m_core::equiv::harness::{differential_run, Status};
use c2m_core::equiv::injection::{check_value_equiv, MemoryInjection};
use c2m_core::externs::ExternTable;
use c2m_core::msvl::{emit, parse_msvl};
use c2m_core::msvl_interp::{self, Verdict as MVerdict};
use c2m_core::stats::{linear_fit, measure, nonblank_lines};
use c2m_core::translate::translate;
use c2m_core::types::IntTy;
use c2m_core::value::{self, BinOp, Ptr, Value};
use c2m_core::xdc::frontend;
use c2m_core::{synth, xdc_interp};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
const CORPUS_BUDGET: Duration = Duration::from_secs(60);
const EXPR_BUDGET: Duration = Duration::from_secs(30);
const MIN_CASES: usize = 60;
const EXPR_CASES: u64 = 10_000;
const LEMMA_CASES: usize = 10_000;
const FRAMING_PROGRAMS: u64 = 1_000;
const MIN_R2: f64 = 0.98;
/// Bound on MSVL nodes per Xd-C node across the whole linearity series.
const NODE_RATIO_K: f64 = 4.0;
/// Mean LOM/LOC band for the bundled synthetic corpus.
const RATIO_BAND: (f64, f64) = (1.5, 4.0);

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn translate_file(p: &Path) -> Result<String, String> {
    let c = frontend(&read(p)).map_err(|d| format!("{d:?}"))?;
    Ok(emit(&translate(&c).program))
}

/// Runs `f` over `0..n` on several threads and collects the failures.
fn par<F: Fn(u64) -> Option<String> + Sync>(n: u64, f: F) -> Vec<String> {
    let workers = std::thread::available_parallelism().map(|w| w.get()).unwrap_or(1).clamp(1, 8) as u64;
    std::thread::scope(|s| {
        let hs: Vec<_> = (0..workers)
            .map(|w| {
                let f = &f;
                s.spawn(move || (w..n).step_by(workers as usize).filter_map(f).collect::<Vec<_>>())
            })
            .collect();
        hs.into_iter().flat_map(|h| h.join().expect("worker")).collect()
    })
}

type Outcome = Result<String, String>;

/// Printed forms of the eight translation items with the elided bodies
/// filled in from the fixtures; compared ignoring whitespace.
const ITEMS: [(&str, &str); 8] = [
    ("item1_function", "function generateMTFValues(){yy[0]:=1}"),
    ("item2_declaration", "unsigned char yy[256] and skip"),
    ("item3_assignment", "i:=0"),
    (
        "item4_for_break",
        "i:=0; while(break=0 and i<=last){if(yy[i]=0)then{break:=1}else{empty}; if(break=0)then{i:=i+1}else{empty}}; break:=0",
    ),
    ("item5_while", "while(ll_i!=tmp){tmp:=tmp+1}"),
    ("item6_if", "if(j=0)then{zPend:=1}else{zPend:=0}"),
    ("item7_break", "break:=1"),
    (
        "item8_switch",
        "break:=0; switch:=0;
         if((zPend%2=0 or switch=1) and break=0 and return=0)
         then{switch:=1; wr:=1} else{empty};
         if((zPend%2=1 or switch=1) and break=0 and return=0)
         then{switch:=1; wr:=2} else{empty};
         if(switch=1 and break=0 and return=0)then{empty} else{empty};
         break:=0",
    ),
];

fn c1_golden_items() -> Outcome {
    let t0 = Instant::now();
    let dir = root().join("fixtures/golden");
    for (name, printed) in ITEMS {
        let got = translate_file(&dir.join(format!("{name}.c")))?;
        if got != read(&dir.join(format!("{name}.m"))) {
            return Err(format!("{name}: output differs from the golden file"));
        }
        if !squash(&got).contains(&squash(printed)) {
            return Err(format!("{name}: printed form not found in\n{got}"));
        }
    }
    let dt = t0.elapsed();
    if dt > GOLDEN_BUDGET {
        return Err(format!("took {dt:?}"));
    }
    Ok(format!("8 items match, {dt:.1?}"))
}

fn c2_mtf() -> Outcome {
    let dir = root().join("fixtures/golden");
    let src = read(&dir.join("mtf.c"));
    let got = translate_file(&dir.join("mtf.c"))?;
    if got != read(&dir.join("mtf.m")) {
        return Err("mtf.m differs from the translation".into());
    }
    // Statement skeleton: every C loop becomes one `while`, every `if` and
    // switch arm one `if` apart from the pure jump guards, and the switch
    // prologue appears once.
    let count = |hay: &str, needle: &str| hay.matches(needle).count();
    let guards = ["if(break=0)", "if(continue=0)", "if(return=0)"].iter().map(|g| count(&got, g)).sum::<usize>();
    let loops = count(&src, "for (") + count(&src, "while (");
    let ifs = count(&src, "if (") + count(&src, "case ") + count(&src, "default:");
    let checks = [
        ("function", got.contains("function generateMTFValues(){"), "function header"),
        ("while", count(&got, "while(") == loops, "one while per loop"),
        ("if", count(&got, "if(") - guards == ifs, "one if per branch or arm"),
        ("switch", count(&got, "switch:=0") == 1 && count(&got, "switch:=1") == 2, "switch expansion"),
        ("decl", got.contains("unsigned char yy[256] and skip"), "local array declaration"),
    ];
    for (_, ok, what) in checks {
        if !ok {
            return Err(format!("skeleton check failed: {what}"));
        }
    }
    let c = frontend(&src).map_err(|d| format!("{d:?}"))?;
    let r = differential_run(&c, &ExternTable::default(), xdc_interp::DEFAULT_FUEL);
    if r.verdict.status != Status::Equivalent {
        return Err(format!("differential run: {:?}", r.verdict));
    }
    Ok(format!("golden matches, {loops} loops, {ifs} branches, runs equivalent"))
}

fn c3_corpus() -> Outcome {
    let t0 = Instant::now();
    let cases = load_corpus(&root().join("cases")).map_err(|e| e.to_string())?;
    if cases.len() < MIN_CASES {
        return Err(format!("only {} cases", cases.len()));
    }
    let results = run_corpus(&cases, xdc_interp::DEFAULT_FUEL);
    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{}: {} (expected {})", r.name, r.verdict.status, r.expected))
        .collect();
    if !failed.is_empty() {
        return Err(failed.join("; "));
    }
    let mut cov = Coverage::default();
    results.iter().for_each(|r| cov.merge(&r.report.xdc.coverage));
    let stmt_rules: Vec<&str> = xdc_interp::RULES.iter().copied().filter(|r| r.starts_with('T')).collect();
    let missing = cov.missing(&stmt_rules);
    if !missing.is_empty() {
        return Err(format!("statement rules never hit: {missing:?}"));
    }
    let dt = t0.elapsed();
    if dt > CORPUS_BUDGET {
        return Err(format!("took {dt:?}"));
    }
    Ok(format!("{} cases, 0 mismatches, T1-T26 all hit, {dt:.1?}", results.len()))
}

fn c4_expressions() -> Outcome {
    let t0 = Instant::now();
    let errors = std::sync::atomic::AtomicUsize::new(0);
    let bad = par(EXPR_CASES, |seed| {
        let src = synth::pure_expr_case(seed);
        let c = match frontend(&src) {
            Ok(c) => c,
            Err(d) => return Some(format!("seed {seed}: frontend {d:?}")),
        };
        let r = differential_run(&c, &ExternTable::default(), 100_000);
        match r.verdict.status {
            Status::Equivalent => None,
            Status::BothError => {
                errors.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                None
            }
            s => Some(format!("seed {seed}: {s}")),
        }
    });
    let dt = t0.elapsed();
    if let Some(b) = bad.first() {
        return Err(format!("{} disagreements, first {b}", bad.len()));
    }
    if dt > EXPR_BUDGET {
        return Err(format!("took {dt:?}"));
    }
    let e = errors.into_inner();
    Ok(format!("{EXPR_CASES} expressions agree ({e} raise the same runtime error on both sides), {dt:.1?}"))
}

/// One direct check per rule: `(rule, msvl program, variable, expected)`.
const MSVL_RULES: &[(&str, &str, &str, i64)] = &[
    ("L1", "int x <== 0 and skip; x := 4", "x", 4),
    ("L2", "int a[3] <== {0, 0, 0} and skip; a[1] := 7", "a[1]", 7),
    ("L3", "int m[2][2] <== {{0, 0}, {0, 0}} and skip; m[1][0] := 5", "m[1][0]", 5),
    ("L4", "struct P {int x and int y}; struct P p and skip; p.y := 3", "p.y", 3),
    ("L5", "struct P {int x and int y}; struct P p and skip; struct P *q <== &p and skip; q->x := 2", "p.x", 2),
    ("L6", "int x <== 0 and skip; int *p <== &x and skip; *p := 9", "x", 9),
    ("R1", "int x <== 0 and skip; x := 42", "x", 42),
    ("R2", "int y <== 3 and skip; int x <== y and skip", "x", 3),
    ("R3", "int x <== 1 and skip; int *p <== &x and skip; int y <== *p and skip", "y", 1),
    ("R4", "char c <== 0 and skip; c := (char)300", "c", 44),
    ("R5", "int x <== 0 and skip; x := -(3)", "x", -3),
    ("R6", "int x <== 0 and skip; x := 2 * 3 + 1", "x", 7),
    ("R7", "int x <== 0 and skip; x := (if(1 < 2)then 5 else 6)", "x", 5),
    ("R8", "int x <== 0 and skip; x := (if(1 > 2)then 5 else 6)", "x", 6),
    ("R9", "int x <== 1 and skip; x := 2; int y <== prev(x) and skip", "y", 1),
    ("R10", "function f(int a, int RVal){return:=1 and RVal:=a+1}; int x <== ext f(4, RVal) and skip", "x", 5),
    ("B1", "int x <== 0 and skip; if(true)then{x := 1}else{x := 2}", "x", 1),
    ("B2", "int x <== 0 and skip; if(false)then{x := 1}else{x := 2}", "x", 2),
    ("B3", "int x <== 0 and skip; x := (3 < 4)", "x", 1),
    ("B4", "int x <== 0 and skip; x := !(3 < 4)", "x", 0),
    ("B5", "int x <== 0 and skip; x := (1 < 2 and 2 < 1)", "x", 0),
    ("B6", "int x <== 0 and skip; x := (1 < 2 or 2 < 1)", "x", 1),
    ("SKIP", "int x <== 1 and skip", "x", 1),
    ("UASS", "int x <== 0 and skip; x := 8", "x", 8),
    ("AND", "int x <== 0, y <== 0 and skip; x := 1 and y := 2", "y", 2),
    ("NEXT", "int x <== 0 and skip; next(x <== 6 and empty)", "x", 6),
    ("CHOP1", "int x <== 3 and skip; x <== 3; skip", "x", 3),
    ("CHOP2", "int x <== 0 and skip; x := 1; x := 2", "x", 2),
    ("CHOP3", "int x <== 0 and skip; empty; x := 1", "x", 1),
    ("IF", "int x <== 2 and skip; if(x = 2)then{x := 5}else{empty}", "x", 5),
    ("WHL", "int x <== 0 and skip; while(x < 4){x := x + 1}", "x", 4),
    ("T1", "int x <== 0 and skip; x <== 1 and skip", "x", 1),
    ("F2", "int x <== 0 and skip; if(x = 1)then{x := 5}else{x := 7}", "x", 7),
    ("MIN1", "int x <== 0 and skip; x := 1 and x := 1", "x", 1),
    ("MIN2", "int x <== 5, y <== 0 and skip; y := 1; skip", "x", 5),
    ("TR1", "int x <== 0 and skip; x := 1", "x", 1),
    ("TR2", "int x <== 3 and empty", "x", 3),
    ("FUN", "int g <== 0 and skip; function f(int k){g := g + k}; f(3); f(4)", "g", 7),
    ("EXT1", "int g <== 0 and skip; function f(int k){g := g + k; skip}; ext f(4) and skip", "g", 4),
];

fn c5_semantics() -> Outcome {
    let mut n = 0;
    let run = |src: &str, ext: &str| {
        let p = parse_msvl(src).map_err(|d| format!("{src}: {d}"))?;
        let t = ExternTable::from_json(ext).map_err(|e| e.to_string())?;
        Ok::<_, String>(msvl_interp::run_program(&p, &t, &msvl_interp::Config::default()))
    };
    for (rule, src, var, want) in MSVL_RULES {
        let r = run(src, "{}")?;
        if r.coverage.count(rule) == 0 {
            return Err(format!("{rule}: rule not exercised by `{src}` ({})", r.verdict));
        }
        let got = r.snapshot.as_ref().and_then(|s| s.get(var)).and_then(|v| v.as_int());
        if got != Some(*want) {
            return Err(format!("{rule}: {var} = {got:?}, expected {want} ({})", r.verdict));
        }
        n += 1;
    }
    // Rules observable only through verdicts or traces.
    let f1 = run("empty and skip", "{}")?;
    if !matches!(f1.verdict, MVerdict::Infeasible(_)) || f1.coverage.count("F1") == 0 {
        return Err(format!("F1: {}", f1.verdict));
    }
    let ext = r#"{"getv": {"returns": [7], "type": "int"}, "tick": {"model": {"interval": 3}, "type": "void"}}"#;
    let r11 = run("int x <== ext getv() and skip; ext tick(x) and skip; ext printf(\"%d\", x) and skip", ext)?;
    for rule in ["R11", "EXT2", "EXT3"] {
        if r11.coverage.count(rule) == 0 {
            return Err(format!("{rule}: not exercised ({})", r11.verdict));
        }
    }
    if r11.snapshot.as_ref().and_then(|s| s.get("x")) != Some(Value::int(7)) || r11.events.len() != 3 {
        return Err(format!("R11/EXT2/EXT3: {} {:?}", r11.verdict, r11.events));
    }
    n += 4;
    // `x := e` occupies exactly one transition; the final configuration is
    // (true, sigma, nothing, |sigma| + 1).
    let u = run("int x <== 0 and x := 1", "{}")?;
    let fc = u.final_config.ok_or("no final configuration")?;
    if u.verdict != MVerdict::Terminates(2) || fc.states != 2 || fc.index != 2 || !fc.is_well_formed() {
        return Err(format!("unit assignment: {} {fc:?}", u.verdict));
    }
    // Binary addition rows: int, float, double, pointer + int, int + pointer,
    // and no rule for any other combination.
    let p = Value::Ptr(Ptr::new(3, 8));
    type Row = (Value, Option<u32>, Value, Option<u32>, Option<Value>);
    let rows: [Row; 6] = [
        (Value::int(2), None, Value::int(3), None, Some(Value::int(5))),
        (Value::F32(1.5), None, Value::F32(2.0), None, Some(Value::F32(3.5))),
        (Value::F64(1.25), None, Value::F64(2.0), None, Some(Value::F64(3.25))),
        (p.clone(), Some(4), Value::int(2), None, Some(Value::Ptr(Ptr::new(3, 16)))),
        (Value::int(2), None, p.clone(), Some(4), Some(Value::Ptr(Ptr::new(3, 16)))),
        (Value::F32(1.0), None, Value::F64(1.0), None, None),
    ];
    for (a, ea, b, eb, want) in rows {
        let got = value::binop(BinOp::Add, &a, ea, &b, eb).ok();
        if got != want {
            return Err(format!("{a} + {b} = {got:?}, expected {want:?}"));
        }
        n += 1;
    }
    if value::binop(BinOp::Add, &p, Some(4), &p, Some(4)).is_ok() {
        return Err("pointer + pointer must have no rule".into());
    }
    Ok(format!("{n} rule checks, unit assignment spans 2 states, final configuration well formed"))
}

fn c6_lemma() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e33a);
    for k in 0..LEMMA_CASES {
        let mut alpha = MemoryInjection::default();
        let blocks = rng.gen_range(1..6u32);
        let mut targets: Vec<u32> = (100..100 + blocks * 3).collect();
        for b in 1..=blocks {
            let t = targets.swap_remove(rng.gen_range(0..targets.len()));
            alpha.insert(b, t, rng.gen_range(0..64)).map_err(|e| format!("{e:?}"))?;
        }
        if !alpha.is_injective() {
            return Err("generated injection is not injective".into());
        }
        let b = rng.gen_range(1..=blocks);
        let (t, delta) = alpha.get(b).ok_or("block missing")?;
        let i: i64 = rng.gen_range(0..256);
        let j: i64 = rng.gen_range(0..64);
        let esz = [1u32, 2, 4, 8][rng.gen_range(0..4)];
        let x = Value::Ptr(Ptr::new(b, i));
        let m = Value::Ptr(Ptr::new(t, i + delta));
        if !check_value_equiv(&alpha, &x, &m) {
            return Err(format!("case {k}: premise fails"));
        }
        let jv = Value::Int(j, IntTy::I32);
        let x2 = value::binop(BinOp::Add, &x, Some(esz), &jv, None).map_err(|e| e.to_string())?;
        let m2 = value::binop(BinOp::Add, &m, Some(esz), &jv, None).map_err(|e| e.to_string())?;
        if !check_value_equiv(&alpha, &x2, &m2) {
            return Err(format!("case {k}: {x2} vs {m2} under {:?}", alpha.pairs()));
        }
    }
    Ok(format!("{LEMMA_CASES} instances, 0 violations"))
}

fn framing_violation(states: &[serde_json::Value]) -> Option<String> {
    for (k, w) in states.windows(2).enumerate() {
        let (prev, cur) = (&w[0], &w[1]);
        let assigned: std::collections::HashSet<&str> =
            cur["assigned"].as_array()?.iter().filter_map(|v| v.as_str()).collect();
        let (pv, cv) = (prev["vars"].as_object()?, cur["vars"].as_object()?);
        for (name, v) in cv {
            if assigned.contains(name.as_str()) {
                continue;
            }
            if let Some(old) = pv.get(name) {
                if old != v {
                    return Some(format!("state {}: {name} changed from {old} to {v} without assignment", k + 1));
                }
            }
        }
    }
    None
}

fn c7_framing() -> Outcome {
    let bad = par(FRAMING_PROGRAMS, |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let src = synth::program(rng.gen_range(4..40), seed ^ 0xf4a3);
        let c = frontend(&src).ok()?;
        let p = translate(&c).program;
        let cfg = msvl_interp::Config { record_interval: true, ..Default::default() };
        let r = msvl_interp::run_program(&p, &ExternTable::default(), &cfg);
        if !matches!(r.verdict, MVerdict::Terminates(_)) {
            return Some(format!("seed {seed}: {}", r.verdict));
        }
        if r.interval.len() != r.final_config.map_or(0, |f| f.states) {
            return Some(format!("seed {seed}: dumped {} states", r.interval.len()));
        }
        framing_violation(&r.interval).map(|m| format!("seed {seed}: {m}"))
    });
    match bad.first() {
        Some(b) => Err(format!("{} programs violate framing, first {b}", bad.len())),
        None => Ok(format!("{FRAMING_PROGRAMS} programs, every unassigned variable keeps its value")),
    }
}

fn c8_linearity() -> Outcome {
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    let mut worst: f64 = 0.0;
    for k in 5..=12u32 {
        let src = synth::program(1 << k, u64::from(k));
        let s = measure(&format!("k{k}"), &src, 7).map_err(|d| format!("{d:?}"))?;
        xs.push(s.statements as f64);
        ys.push(s.time.as_secs_f64() * 1e6);
        worst = worst.max(s.nodes_out as f64 / s.nodes_in as f64);
    }
    let fit = linear_fit(&xs, &ys).ok_or("no fit")?;
    if fit.r2 <= MIN_R2 {
        return Err(format!("r2 = {:.4}", fit.r2));
    }
    if worst > NODE_RATIO_K {
        return Err(format!("node ratio {worst:.2} exceeds {NODE_RATIO_K}"));
    }
    Ok(format!(
        "r2 = {:.4}, {:.2} us/stmt, max output/input nodes {worst:.2} <= {NODE_RATIO_K}",
        fit.r2, fit.slope
    ))
}

fn c9_expansion() -> Outcome {
    let dir = root().join("corpus/synthetic");
    let mut ratios = Vec::new();
    for seed in 1..=8u64 {
        let p = dir.join(format!("synth_{seed:02}.c"));
        let src = read(&p);
        if src != synth::program(500, seed) {
            return Err(format!("{} is stale", p.display()));
        }
        let out = translate_file(&p)?;
        ratios.push(nonblank_lines(&out) as f64 / nonblank_lines(&src) as f64);
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    if !(RATIO_BAND.0..=RATIO_BAND.1).contains(&mean) {
        return Err(format!("mean LOM/LOC {mean:.2} outside {RATIO_BAND:?}"));
    }
    Ok(format!("mean LOM/LOC {mean:.2} over {} files, band {RATIO_BAND:?}", ratios.len()))
}

fn c10_negative() -> Outcome {
    let dir = root().join("fixtures/negative");
    let mut seen = Vec::new();
    for item in 1..=14u8 {
        let prefix = format!("item{item:02}_");
        let file = std::fs::read_dir(&dir)
            .map_err(|e| e.to_string())?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .find(|p| p.file_name().is_some_and(|n| n.to_string_lossy().starts_with(&prefix)))
            .ok_or(format!("no fixture for item {item}"))?;
        match frontend(&read(&file)) {
            Ok(_) => return Err(format!("{} accepted", file.display())),
            Err(ds) => {
                if !ds.iter().any(|d| d.item == Some(item)) {
                    return Err(format!("{}: items {:?}", file.display(), ds.iter().map(|d| d.item).collect::<Vec<_>>()));
                }
            }
        }
        seen.push(item);
    }
    Ok(format!("{} fixtures rejected with their item codes", seen.len()))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("golden translation items", c1_golden_items),
        ("end-to-end MTF fragment", c2_mtf),
        ("differential corpus", c3_corpus),
        ("random expression equivalence", c4_expressions),
        ("semantic rule unit checks", c5_semantics),
        ("pointer offset lemma sweep", c6_lemma),
        ("framing in dumped intervals", c7_framing),
        ("translation linearity", c8_linearity),
        ("expansion ratio", c9_expansion),
        ("negative-list gate", c10_negative),
    ];
    // Timing first, while the machine is otherwise idle.
    let order = [7usize, 0, 1, 2, 3, 4, 5, 6, 8, 9];
    let mut results: Vec<Option<Outcome>> = vec![None; criteria.len()];
    for &i in &order {
        results[i] = Some(criteria[i].1());
    }
    let mut failed = 0;
    for (i, ((name, _), r)) in criteria.iter().zip(results).enumerate() {
        match r.expect("every criterion ran") {
            Ok(msg) => println!("PASS {:>2} {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
