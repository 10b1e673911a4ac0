//! States of an MSVL interval.
//!
//! A state is a location map (variable to block) and a value map over scalar
//! leaves. Leaves are addressed by `(block, offset)` following the packed
//! layout, so `(b, d)` identifies exactly one leaf path. Values of the
//! current state are kept in place together with an undo log per state,
//! which is enough to rebuild earlier states for `prev`.

use crate::types::{CType, StructTable};
use crate::value::Value;
use std::collections::{BTreeMap, HashMap};

/// `(block, offset)` of a scalar leaf.
pub type Loc = (u32, u32);

#[derive(Clone, Debug)]
pub struct BlockInfo {
    pub name: String,
    pub frame: u32,
    pub ty: CType,
    pub live: bool,
    /// Offset to leaf type and leaf path suffix.
    pub leaves: BTreeMap<u32, (CType, String)>,
}

/// Variables bound by one activation (frame 0 is the top level).
#[derive(Clone, Debug, Default)]
pub struct Frame {
    pub func: String,
    pub vars: HashMap<String, u32>,
    pub order: Vec<String>,
}

type UndoLog = Vec<(Loc, Option<Value>)>;

/// The interval under construction.
#[derive(Clone, Debug, Default)]
pub struct Tape {
    /// Values of the current state.
    pub cur: HashMap<Loc, Value>,
    /// Undo entries turning the current state back into the previous one.
    pub log: UndoLog,
    /// `undo[k]` turns state `k` back into state `k - 1`.
    pub undo: Vec<UndoLog>,
    /// Unit assignments due in the next state.
    pub pending: Vec<(Loc, Value)>,
    /// Locations assigned in the current state.
    pub assigned: HashMap<Loc, Value>,
    /// Values the next state starts from, when an external call supplies them.
    pub splice: Option<HashMap<Loc, Value>>,
    /// Index of the current state.
    pub index: usize,
    pub record: bool,
    pub states: Vec<serde_json::Value>,
}

impl Tape {
    pub fn from_values(cur: HashMap<Loc, Value>) -> Self {
        Tape { cur, ..Tape::default() }
    }

    /// Writes a value, keeping the undo log.
    pub fn write(&mut self, l: Loc, v: Value) {
        let old = self.cur.insert(l, v);
        self.log.push((l, old));
    }

    pub fn remove(&mut self, l: Loc) {
        if let Some(old) = self.cur.remove(&l) {
            self.log.push((l, Some(old)));
        }
    }

    /// Closes the current state and opens the next one with framed values.
    pub fn advance(&mut self) {
        let log = std::mem::take(&mut self.log);
        self.undo.push(log);
        self.assigned.clear();
        self.index += 1;
    }

    /// Values of state `index - m`, or `None` before the first state.
    pub fn earlier(&self, m: usize) -> Option<HashMap<Loc, Value>> {
        if m > self.index {
            return None;
        }
        let mut vals = self.cur.clone();
        let logs = std::iter::once(&self.log).chain(self.undo.iter().rev());
        for log in logs.take(m) {
            for (l, old) in log.iter().rev() {
                match old {
                    Some(v) => vals.insert(*l, v.clone()),
                    None => vals.remove(l),
                };
            }
        }
        Some(vals)
    }
}

/// Leaf table for a fresh object of type `ty`.
pub fn leaf_table(structs: &StructTable, ty: &CType) -> BTreeMap<u32, (CType, String)> {
    structs.leaves(ty).into_iter().map(|l| (l.offset, (l.ty, l.path))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn earlier_states_are_rebuilt_from_undo_logs() {
        let mut t = Tape::default();
        t.write((1, 0), Value::int(1));
        t.advance();
        t.write((1, 0), Value::int(2));
        t.write((2, 0), Value::int(7));
        t.advance();
        t.remove((2, 0));
        assert_eq!(t.earlier(0).unwrap().get(&(2, 0)), None);
        assert_eq!(t.earlier(1).unwrap()[&(2, 0)], Value::int(7));
        assert_eq!(t.earlier(1).unwrap()[&(1, 0)], Value::int(2));
        assert_eq!(t.earlier(2).unwrap()[&(1, 0)], Value::int(1));
        assert!(!t.earlier(2).unwrap().contains_key(&(2, 0)));
        assert!(t.earlier(3).is_none());
    }
}
