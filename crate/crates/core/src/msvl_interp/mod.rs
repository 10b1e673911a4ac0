//! Small-step interpreter for the MSVL subset.
//!
//! A configuration is `(program, interval so far, current state, index)`.
//! Each state is reduced to a normal form (`empty`, a pure state formula, or
//! `next p`); present assignments are discharged eagerly (MIN1) and every
//! variable left unassigned keeps its previous value (MIN2). TR1 moves to a
//! fresh state, TR2 closes the interval.

mod eval;
mod reduce;
pub mod state;

use crate::coverage::Coverage;
use crate::externs::{ExternEvent, ExternTable};
use crate::msvl::MsvlProgram;
use crate::snapshot::Snapshot;
use crate::value::Value;
use std::fmt;

pub use state::Loc;

pub const DEFAULT_FUEL: u64 = 16_000_000;

/// Rules the corpus is expected to exercise.
pub const RULES: &[&str] = &[
    "L1", "L2", "L3", "L4", "L5", "L6", "R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R10", "R11", "B1", "B3",
    "B4", "B5", "B6", "SKIP", "UASS", "AND", "CHOP1", "CHOP2", "CHOP3", "IF", "WHL", "MIN1", "MIN2", "TR1", "TR2",
    "FUN", "EXT2", "F1", "F2", "T1",
];

#[derive(Clone, Debug)]
pub struct Config {
    pub fuel: u64,
    /// Keep every state of the main interval (for `--dump-interval`).
    pub record_interval: bool,
    pub max_depth: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config { fuel: DEFAULT_FUEL, record_interval: false, max_depth: 5000 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// The model is finite; carries its number of states.
    Terminates(usize),
    Timeout,
    /// Some state has no consistent assignment.
    Infeasible(String),
    Error(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Terminates(n) => write!(f, "terminates({n} states)"),
            Verdict::Timeout => write!(f, "timeout"),
            Verdict::Infeasible(m) => write!(f, "infeasible: {m}"),
            Verdict::Error(m) => write!(f, "error: {m}"),
        }
    }
}

/// The final configuration `(true, sigma, nothing, |sigma| + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FinalConfig {
    /// Number of states in the interval.
    pub states: usize,
    /// Index reached by the last transition.
    pub index: usize,
}

impl FinalConfig {
    /// `|sigma|` counts transitions, so the index is one past it.
    pub fn is_well_formed(&self) -> bool {
        self.states >= 1 && self.index == (self.states - 1) + 1
    }
}

#[derive(Clone, Debug)]
pub struct MsvlRun {
    pub verdict: Verdict,
    /// Top-level variables at the last state, under MSVL names.
    pub snapshot: Option<Snapshot>,
    pub final_config: Option<FinalConfig>,
    /// Top-level `RVal` at the last state, if defined.
    pub rval: Option<Value>,
    pub events: Vec<ExternEvent>,
    /// One `{"vars", "assigned"}` object per state when recording was
    /// requested.
    pub interval: Vec<serde_json::Value>,
    pub coverage: Coverage,
    pub steps: u64,
}

impl MsvlRun {
    pub fn interval_jsonl(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.interval.iter().enumerate() {
            let mut line = serde_json::json!({"state": i});
            if let (Some(o), Some(src)) = (line.as_object_mut(), s.as_object()) {
                o.extend(src.clone());
            }
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }
}

/// Why reduction stopped early.
#[derive(Clone, Debug, PartialEq)]
pub enum Stop {
    Error(String),
    Infeasible(String),
    Timeout,
}

pub fn run_program(p: &MsvlProgram, externs: &ExternTable, cfg: &Config) -> MsvlRun {
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(1 << 30)
            .spawn_scoped(s, || reduce::Machine::new(p, externs, cfg).run())
            .expect("spawn interpreter thread")
            .join()
            .expect("interpreter thread panicked")
    })
}

#[cfg(test)]
mod tests;
