//! Final-state snapshots produced by both interpreters.

use crate::value::Value;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq)]
pub struct LeafSnap {
    /// Path suffix below the root (`""`, `[2]`, `.f`, `[1][0].x`).
    pub path: String,
    pub offset: u32,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootSnap {
    pub block: u32,
    pub leaves: Vec<LeafSnap>,
}

/// Variables visible at the end of a run, keyed by name, plus the blocks
/// holding each function (targets of function pointers).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Snapshot {
    pub roots: BTreeMap<String, RootSnap>,
    pub functions: BTreeMap<String, u32>,
}

impl Snapshot {
    /// `(full path, value)` pairs in key order.
    pub fn flatten(&self) -> Vec<(String, Value)> {
        let mut out = Vec::new();
        for (name, root) in &self.roots {
            for l in &root.leaves {
                out.push((format!("{name}{}", l.path), l.value.clone()));
            }
        }
        out
    }

    pub fn get(&self, path: &str) -> Option<Value> {
        self.flatten().into_iter().find(|(p, _)| p == path).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        for (p, v) in self.flatten() {
            m.insert(p, v.to_json());
        }
        serde_json::Value::Object(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_joins_paths() {
        let mut s = Snapshot::default();
        s.roots.insert(
            "a".into(),
            RootSnap {
                block: 1,
                leaves: vec![
                    LeafSnap { path: "[0]".into(), offset: 0, value: Value::int(1) },
                    LeafSnap { path: "[1]".into(), offset: 4, value: Value::Undef },
                ],
            },
        );
        assert_eq!(s.get("a[0]"), Some(Value::int(1)));
        assert_eq!(s.to_json()["a[1]"], serde_json::Value::Null);
    }
}
