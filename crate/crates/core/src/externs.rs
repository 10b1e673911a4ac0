//! Scripted extern models shared by both interpreters.
//!
//! A fixture is a JSON object mapping an extern name to its script:
//!
//! ```json
//! { "getv": { "returns": [3, 4], "type": "int" },
//!   "tick": { "model": { "interval": 3 }, "type": "void" } }
//! ```
//!
//! Each call consumes the next scripted return value; once the script runs
//! out the last value repeats. A handful of output-style externs (`printf`,
//! `puts`, `putchar`, `print_int`) are always available and return 0.

use crate::value::Value;
use serde::Deserialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// The call is modelled by a single state.
    #[default]
    Single,
    /// The call is modelled by an interval with this many states.
    Interval(u32),
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExternSpec {
    #[serde(default)]
    pub returns: Vec<serde_json::Value>,
    #[serde(default, rename = "type")]
    pub ret: Option<String>,
    #[serde(default)]
    pub model: Model,
}

#[derive(Clone, Debug, Default)]
pub struct ExternTable {
    entries: BTreeMap<String, ExternSpec>,
}

const BUILTINS: [&str; 4] = ["printf", "puts", "putchar", "print_int"];

/// Output-style externs that may be called without a declaration.
pub fn is_builtin(name: &str) -> bool {
    BUILTINS.contains(&name)
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ExternError {
    #[error("unknown extern `{0}`")]
    Unknown(String),
    #[error("bad fixture for `{0}`: {1}")]
    Fixture(String, String),
}

impl ExternTable {
    pub fn from_json(text: &str) -> Result<Self, String> {
        let entries: BTreeMap<String, ExternSpec> = serde_json::from_str(text).map_err(|e| e.to_string())?;
        Ok(ExternTable { entries })
    }

    pub fn insert(&mut self, name: &str, spec: ExternSpec) {
        self.entries.insert(name.to_string(), spec);
    }

    pub fn spec(&self, name: &str) -> Option<ExternSpec> {
        if let Some(s) = self.entries.get(name) {
            return Some(s.clone());
        }
        BUILTINS.contains(&name).then(|| ExternSpec { returns: vec![], ret: Some("int".into()), model: Model::Single })
    }

    pub fn knows(&self, name: &str) -> bool {
        self.spec(name).is_some()
    }
}

/// One observable extern call: `id(v_args, v_res)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExternEvent {
    pub name: String,
    pub args: Vec<Value>,
    pub result: Option<Value>,
}

impl fmt::Display for ExternEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(|a| a.to_string()).collect();
        match &self.result {
            Some(r) => write!(f, "{}([{}], {})", self.name, args.join(", "), r),
            None => write!(f, "{}([{}], void)", self.name, args.join(", ")),
        }
    }
}

impl ExternEvent {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "event": "call",
            "name": self.name,
            "args": self.args.iter().map(Value::to_json).collect::<Vec<_>>(),
            "result": self.result.as_ref().map(Value::to_json),
        })
    }
}

/// Per-run extern state: script cursors and the event log.
#[derive(Clone, Debug, Default)]
pub struct ExternRuntime {
    table: ExternTable,
    cursors: HashMap<String, usize>,
    pub events: Vec<ExternEvent>,
}

impl ExternRuntime {
    pub fn new(table: ExternTable) -> Self {
        ExternRuntime { table, cursors: HashMap::new(), events: Vec::new() }
    }

    pub fn table(&self) -> &ExternTable {
        &self.table
    }

    /// Result type name declared by the fixture (`int` when absent).
    pub fn result_type(&self, name: &str) -> Option<String> {
        self.table.spec(name).map(|s| s.ret.unwrap_or_else(|| "int".into()))
    }

    /// Performs a call, logs the event and returns the scripted result with
    /// the call's model.
    pub fn call(&mut self, name: &str, args: Vec<Value>) -> Result<(Option<Value>, Model), ExternError> {
        let spec = self.table.spec(name).ok_or_else(|| ExternError::Unknown(name.to_string()))?;
        let ty = spec.ret.clone().unwrap_or_else(|| "int".into());
        let result = if ty == "void" {
            None
        } else {
            let k = self.cursors.entry(name.to_string()).or_insert(0);
            let raw = if spec.returns.is_empty() {
                serde_json::json!(0)
            } else {
                spec.returns[(*k).min(spec.returns.len() - 1)].clone()
            };
            *k += 1;
            Some(json_value(name, &raw, &ty)?)
        };
        self.events.push(ExternEvent { name: name.to_string(), args, result: result.clone() });
        Ok((result, spec.model))
    }
}

fn json_value(name: &str, raw: &serde_json::Value, ty: &str) -> Result<Value, ExternError> {
    let bad = |m: &str| ExternError::Fixture(name.to_string(), m.to_string());
    match ty {
        "int" | "unsigned int" | "char" | "short" | "long" => {
            let n = raw.as_i64().ok_or_else(|| bad("expected an integer return value"))?;
            Ok(Value::int(n))
        }
        "double" => Ok(Value::F64(raw.as_f64().ok_or_else(|| bad("expected a number"))?)),
        "float" => Ok(Value::F32(raw.as_f64().ok_or_else(|| bad("expected a number"))? as f32)),
        other => Err(bad(&format!("unsupported result type `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scripted_returns_repeat_last() {
        let t = ExternTable::from_json(r#"{"getv": {"returns": [3, 4]}}"#).unwrap();
        let mut rt = ExternRuntime::new(t);
        let vals: Vec<_> = (0..3).map(|_| rt.call("getv", vec![]).unwrap().0.unwrap()).collect();
        assert_eq!(vals, vec![Value::int(3), Value::int(4), Value::int(4)]);
        assert_eq!(rt.events.len(), 3);
        assert_eq!(rt.events[0].to_string(), "getv([], 3)");
    }

    #[test]
    fn models_and_builtins() {
        let t = ExternTable::from_json(r#"{"tick": {"model": {"interval": 3}, "type": "void"}}"#).unwrap();
        let mut rt = ExternRuntime::new(t);
        assert_eq!(rt.call("tick", vec![Value::int(1)]).unwrap(), (None, Model::Interval(3)));
        assert_eq!(rt.call("printf", vec![Value::Str("hi".into())]).unwrap(), (Some(Value::int(0)), Model::Single));
        assert_eq!(rt.call("nope", vec![]), Err(ExternError::Unknown("nope".into())));
    }

    #[test]
    fn rejects_unknown_fields() {
        assert!(ExternTable::from_json(r#"{"f": {"retruns": [1]}}"#).is_err());
    }
}
