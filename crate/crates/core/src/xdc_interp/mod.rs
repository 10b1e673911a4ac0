//! Reference big-step interpreter for Xd-C.
//!
//! Expressions follow rules C1-C15, statements T1-T23 and calls T24-T26.
//! Divergence is approximated by a fuel budget counted in statement rule
//! applications.

mod exec;
pub mod memory;

pub use exec::Outcome;
pub use memory::{MemError, Memory};

use crate::coverage::Coverage;
use crate::diag::Span;
use crate::externs::{ExternEvent, ExternTable};
use crate::snapshot::Snapshot;
use crate::value::{Ptr, Value};
use crate::xdc::Checked;
use std::fmt;

pub const DEFAULT_FUEL: u64 = 1_000_000;

/// Rules the corpus is expected to exercise.
pub const RULES: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14", "C15", "T1", "T2", "T3",
    "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11", "T12", "T13", "T14", "T15", "T16", "T17", "T18", "T19", "T20",
    "T21", "T22", "T23", "T24", "T25", "T26",
];

#[derive(Clone, Debug)]
pub struct Config {
    pub fuel: u64,
    /// Record every store in the trace.
    pub trace_stores: bool,
    pub max_depth: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config { fuel: DEFAULT_FUEL, trace_stores: false, max_depth: 5000 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// `terminates(t, n)`: main returned `n`.
    Terminates(i64),
    /// Fuel ran out; stands in for divergence.
    Timeout,
    Error(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Terminates(n) => write!(f, "terminates({n})"),
            Verdict::Timeout => write!(f, "timeout"),
            Verdict::Error(e) => write!(f, "error: {e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StoreEvent {
    pub at: Ptr,
    pub value: Value,
}

#[derive(Clone, Debug)]
pub struct XdcRun {
    pub verdict: Verdict,
    /// Final memory, taken when main's body finishes (before its locals are
    /// released). Absent when the run did not terminate.
    pub snapshot: Option<Snapshot>,
    pub events: Vec<ExternEvent>,
    pub stores: Vec<StoreEvent>,
    pub coverage: Coverage,
    pub steps: u64,
}

impl XdcRun {
    /// Store events, call events and the final snapshot as JSON lines.
    pub fn trace_jsonl(&self) -> String {
        let mut out = String::new();
        for s in &self.stores {
            let j = serde_json::json!({"event": "store", "block": s.at.block, "off": s.at.off, "value": s.value.to_json()});
            out.push_str(&j.to_string());
            out.push('\n');
        }
        for e in &self.events {
            out.push_str(&e.to_json().to_string());
            out.push('\n');
        }
        let snap = self.snapshot.as_ref().map(Snapshot::to_json);
        out.push_str(&serde_json::json!({"event": "final", "verdict": self.verdict.to_string(), "memory": snap}).to_string());
        out.push('\n');
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RuntimeError {
    pub msg: String,
    pub span: Span,
}

impl fmt::Display for RuntimeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.msg)
    }
}

/// Why evaluation stopped early.
#[derive(Clone, Debug, PartialEq)]
pub enum Stop {
    Error(RuntimeError),
    Timeout,
}

/// Runs `main` with `argc = 1`, `argv = NULL`.
pub fn run_program(c: &Checked, externs: &ExternTable, cfg: &Config) -> XdcRun {
    // Recursion in the evaluated program maps onto host recursion.
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(512 << 20)
            .spawn_scoped(s, || exec::Interp::new(c, externs, cfg).run())
            .expect("spawn interpreter thread")
            .join()
            .expect("interpreter thread panicked")
    })
}

#[cfg(test)]
mod tests;
