//! State equivalence and differential runs of a program against its
//! translation.

use super::injection::{build_injection, check_value_equiv, MemoryInjection};
use crate::externs::{ExternEvent, ExternTable};
use crate::msvl_interp::{self, MsvlRun};
use crate::snapshot::Snapshot;
use crate::translate::{translate, Translation};
use crate::xdc::Checked;
use crate::xdc_interp::{self, XdcRun};
use serde::Serialize;
use std::fmt;

/// MSVL reduction takes more steps per source statement than the Xd-C
/// interpreter; its budget is scaled so both sides see comparable fuel.
pub const MSVL_FUEL_FACTOR: u64 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Equivalent,
    Mismatch,
    BothTimeout,
    /// Both sides stopped with a runtime error.
    BothError,
    VerdictMismatch,
}

impl Status {
    pub fn parse(s: &str) -> Option<Status> {
        Some(match s {
            "equivalent" => Status::Equivalent,
            "mismatch" => Status::Mismatch,
            "both-timeout" => Status::BothTimeout,
            "both-error" => Status::BothError,
            "verdict-mismatch" => Status::VerdictMismatch,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Equivalent => "equivalent",
            Status::Mismatch => "mismatch",
            Status::BothTimeout => "both-timeout",
            Status::BothError => "both-error",
            Status::VerdictMismatch => "verdict-mismatch",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// First observed difference.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub path: String,
    pub xdc: String,
    pub msvl: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquivVerdict {
    pub status: Status,
    pub witness: Option<Witness>,
    /// `(Xd-C block, MSVL block, offset)` triples.
    pub alpha: Vec<(u32, u32, i64)>,
}

impl EquivVerdict {
    fn ok(status: Status, alpha: &MemoryInjection) -> Self {
        EquivVerdict { status, witness: None, alpha: alpha.pairs() }
    }

    fn differ(status: Status, path: impl Into<String>, xdc: impl Into<String>, msvl: impl Into<String>) -> Self {
        let witness = Witness { path: path.into(), xdc: xdc.into(), msvl: msvl.into() };
        EquivVerdict { status, witness: Some(witness), alpha: vec![] }
    }

    /// Equivalent, or divergent on both sides with agreeing traces.
    pub fn passes(&self) -> bool {
        matches!(self.status, Status::Equivalent | Status::BothTimeout)
    }
}

/// Compares every shared variable leaf under `alpha`. Key variables exist
/// only on the MSVL side and are never looked up.
pub fn check_state_equiv(alpha: &MemoryInjection, x: &Snapshot, m: &Snapshot, tr: &Translation) -> EquivVerdict {
    for (k, root) in &x.roots {
        let name = tr.name_map.get(k).map(String::as_str).unwrap_or(k);
        let Some(mr) = m.roots.get(name) else {
            return EquivVerdict::differ(Status::Mismatch, k.clone(), "present", "<missing>");
        };
        match alpha.get(root.block) {
            Some((b, 0)) if b == mr.block => {}
            _ => return EquivVerdict::differ(Status::Mismatch, k.clone(), format!("block {}", root.block), format!("block {}", mr.block)),
        }
        for leaf in &root.leaves {
            let path = format!("{k}{}", leaf.path);
            let mpath = tr.map_path(&leaf.path);
            let Some(ml) = mr.leaves.iter().find(|l| l.path == mpath) else {
                return EquivVerdict::differ(Status::Mismatch, path, leaf.value.to_string(), "<missing>");
            };
            if ml.offset != leaf.offset || !check_value_equiv(alpha, &leaf.value, &ml.value) {
                return EquivVerdict::differ(Status::Mismatch, path, leaf.value.to_string(), ml.value.to_string());
            }
        }
    }
    EquivVerdict::ok(Status::Equivalent, alpha)
}

fn event_equiv(alpha: &MemoryInjection, a: &ExternEvent, b: &ExternEvent) -> bool {
    a.name == b.name
        && a.args.len() == b.args.len()
        && a.args.iter().zip(&b.args).all(|(x, y)| check_value_equiv(alpha, x, y))
        && match (&a.result, &b.result) {
            (Some(x), Some(y)) => check_value_equiv(alpha, x, y),
            (None, None) => true,
            _ => false,
        }
}

/// Events must agree pairwise; with `prefix`, the shorter trace only has to
/// be a prefix of the longer one.
fn compare_traces(alpha: &MemoryInjection, x: &[ExternEvent], m: &[ExternEvent], prefix: bool) -> Option<Witness> {
    for (k, (a, b)) in x.iter().zip(m).enumerate() {
        if !event_equiv(alpha, a, b) {
            return Some(Witness { path: format!("trace[{k}]"), xdc: a.to_string(), msvl: b.to_string() });
        }
    }
    if !prefix && x.len() != m.len() {
        let k = x.len().min(m.len());
        let show = |t: &[ExternEvent]| t.get(k).map(|e| e.to_string()).unwrap_or_else(|| "<end>".into());
        return Some(Witness { path: format!("trace[{k}]"), xdc: show(x), msvl: show(m) });
    }
    None
}

/// Compares two finished runs.
pub fn compare_runs(xr: &XdcRun, mr: &MsvlRun, tr: &Translation) -> EquivVerdict {
    use msvl_interp::Verdict as M;
    use xdc_interp::Verdict as X;
    let none = MemoryInjection::default();
    match (&xr.verdict, &mr.verdict) {
        (X::Terminates(n), M::Terminates(_)) => {
            let (Some(xs), Some(ms)) = (&xr.snapshot, &mr.snapshot) else {
                return EquivVerdict::differ(Status::VerdictMismatch, "snapshot", "missing", "missing");
            };
            let alpha = match build_injection(xs, ms, tr) {
                Ok(a) => a,
                Err(e) => return EquivVerdict::differ(Status::Mismatch, "alpha", e.to_string(), ""),
            };
            let exit_ok = match &mr.rval {
                Some(v) => v.as_int() == Some(*n),
                None => *n == 0,
            };
            if !exit_ok {
                let m = mr.rval.as_ref().map(|v| v.to_string()).unwrap_or_else(|| "none".into());
                return EquivVerdict::differ(Status::Mismatch, "exit", n.to_string(), m);
            }
            if let Some(w) = compare_traces(&alpha, &xr.events, &mr.events, false) {
                return EquivVerdict { status: Status::Mismatch, witness: Some(w), alpha: alpha.pairs() };
            }
            let mut v = check_state_equiv(&alpha, xs, ms, tr);
            v.alpha = alpha.pairs();
            v
        }
        (X::Timeout, M::Timeout) => match compare_traces(&none, &xr.events, &mr.events, true) {
            None => EquivVerdict::ok(Status::BothTimeout, &none),
            Some(w) => EquivVerdict { status: Status::Mismatch, witness: Some(w), alpha: vec![] },
        },
        (X::Error(_), M::Error(_) | M::Infeasible(_)) => EquivVerdict::ok(Status::BothError, &none),
        (x, m) => EquivVerdict::differ(Status::VerdictMismatch, "verdict", x.to_string(), m.to_string()),
    }
}

/// Everything produced by one differential run.
#[derive(Clone, Debug)]
pub struct DiffReport {
    pub verdict: EquivVerdict,
    pub translation: Translation,
    pub xdc: XdcRun,
    pub msvl: MsvlRun,
}

/// Translates, runs both interpreters on the same extern script and
/// compares final states and extern traces.
pub fn differential_run(c: &Checked, externs: &ExternTable, fuel: u64) -> DiffReport {
    let translation = translate(c);
    let xcfg = xdc_interp::Config { fuel, ..xdc_interp::Config::default() };
    let xdc = xdc_interp::run_program(c, externs, &xcfg);
    let mcfg = msvl_interp::Config { fuel: fuel.saturating_mul(MSVL_FUEL_FACTOR), ..msvl_interp::Config::default() };
    let msvl = msvl_interp::run_program(&translation.program, externs, &mcfg);
    let verdict = compare_runs(&xdc, &msvl, &translation);
    DiffReport { verdict, translation, xdc, msvl }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::Value;
    use crate::xdc::frontend;

    fn diff(src: &str) -> DiffReport {
        differential_run(&frontend(src).unwrap(), &ExternTable::default(), 100_000)
    }

    #[test]
    fn increment_is_equivalent() {
        let r = diff("int main(void){ int x = 1; x++; return 0; }");
        assert_eq!(r.verdict.status, Status::Equivalent, "{:?}", r.verdict);
        assert_eq!(r.xdc.snapshot.as_ref().unwrap().get("x"), Some(Value::int(2)));
        assert_eq!(r.msvl.snapshot.as_ref().unwrap().get("x"), Some(Value::int(2)));
    }

    #[test]
    fn unit_assignment_matches_c_assignment() {
        let r = diff("int x;\nint main(void){ x = 2; return 0; }");
        assert!(r.verdict.passes());
        assert_eq!(r.verdict.alpha.len(), 1, "{:?}", r.verdict);
    }

    #[test]
    fn aliasing_pointers_resolve_to_equivalent_locations() {
        let r = diff("int x;\nint *y;\nint main(void){ y = &x; *y = 4; return 0; }");
        assert_eq!(r.verdict.status, Status::Equivalent, "{:?}", r.verdict);
    }

    #[test]
    fn both_sides_diverge() {
        let r = diff("int main(void){ while(1){ ; } return 0; }");
        assert_eq!(r.verdict.status, Status::BothTimeout, "{:?} {} {}", r.verdict, r.xdc.verdict, r.msvl.verdict);
        assert!(r.xdc.events.is_empty() && r.msvl.events.is_empty());
    }

    #[test]
    fn switch_fall_through_is_equivalent() {
        let r = diff("int x, k;\nint main(void){ x = 0; k = 1; switch(k){ case 1: x = x + 1; case 2: x = x + 2; break; default: x = 9; } return x; }");
        assert_eq!(r.verdict.status, Status::Equivalent, "{:?}", r.verdict);
    }

    #[test]
    fn corrupted_msvl_state_yields_a_witness() {
        let mut r = diff("int x;\nint main(void){ x = 2; return 0; }");
        let ms = r.msvl.snapshot.as_mut().unwrap();
        ms.roots.get_mut("x").unwrap().leaves[0].value = Value::int(3);
        let v = compare_runs(&r.xdc, &r.msvl, &r.translation);
        assert_eq!(v.status, Status::Mismatch);
        assert_eq!(v.witness.unwrap(), Witness { path: "x".into(), xdc: "2".into(), msvl: "3".into() });
    }

    #[test]
    fn key_variables_are_ignored() {
        let mut r = diff("int x;\nint main(void){ x = 2; return 0; }");
        for k in ["break", "return", "switch", "RVal"] {
            if let Some(root) = r.msvl.snapshot.as_mut().unwrap().roots.get_mut(k) {
                root.leaves[0].value = Value::int(41);
            }
        }
        r.msvl.rval = Some(Value::int(0));
        assert!(compare_runs(&r.xdc, &r.msvl, &r.translation).passes());
    }

    #[test]
    fn missing_msvl_variable_is_unmatched() {
        let mut r = diff("int x;\nint main(void){ x = 2; return 0; }");
        r.msvl.snapshot.as_mut().unwrap().roots.remove("x");
        let v = compare_runs(&r.xdc, &r.msvl, &r.translation);
        assert_eq!(v.status, Status::Mismatch);
        assert!(v.witness.unwrap().xdc.contains("only on the Xd-C side"));
    }

    #[test]
    fn empty_program_has_empty_injection() {
        let r = diff("int main(void){ return 0; }");
        assert!(r.verdict.passes());
        assert!(r.verdict.alpha.iter().all(|(b, _, _)| r.xdc.snapshot.as_ref().unwrap().functions.values().any(|f| f == b)));
    }
}
