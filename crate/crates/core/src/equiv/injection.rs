//! Memory injections and value equivalence.

use crate::snapshot::Snapshot;
use crate::translate::{Translation, KEY_VARS};
use crate::value::Value;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InjectionError {
    #[error("variable `{name}` exists only on the {side} side")]
    Unmatched { name: String, side: &'static str },
    #[error("blocks {a} and {b} would both map to block {target}")]
    NotInjective { a: u32, b: u32, target: u32 },
    #[error("block {block} is already mapped to ({to}, {delta})")]
    Remapped { block: u32, to: u32, delta: i64 },
}

/// A partial injective map from Xd-C blocks to `(MSVL block, offset)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MemoryInjection {
    map: BTreeMap<u32, (u32, i64)>,
    /// Target block to source block, for the injectivity check.
    back: BTreeMap<u32, u32>,
}

impl MemoryInjection {
    pub fn insert(&mut self, b: u32, to: u32, delta: i64) -> Result<(), InjectionError> {
        if let Some(&(t, d)) = self.map.get(&b) {
            if (t, d) == (to, delta) {
                return Ok(());
            }
            return Err(InjectionError::Remapped { block: b, to: t, delta: d });
        }
        if let Some(&a) = self.back.get(&to) {
            return Err(InjectionError::NotInjective { a, b, target: to });
        }
        self.map.insert(b, (to, delta));
        self.back.insert(to, b);
        Ok(())
    }

    pub fn get(&self, b: u32) -> Option<(u32, i64)> {
        self.map.get(&b).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn pairs(&self) -> Vec<(u32, u32, i64)> {
        self.map.iter().map(|(b, (t, d))| (*b, *t, *d)).collect()
    }

    /// Whether no two sources share a target (holds by construction).
    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.map.values().all(|(t, _)| seen.insert(*t))
    }
}

/// Constants are equivalent to themselves; pointers when the target block is
/// the image of the source block and offsets differ by the injection's
/// offset. `Undef` matches only `Undef`.
pub fn check_value_equiv(alpha: &MemoryInjection, x: &Value, m: &Value) -> bool {
    match (x, m) {
        (Value::Int(a, _), Value::Int(b, _)) => a == b,
        (Value::F32(a), Value::F32(b)) => a.to_bits() == b.to_bits(),
        (Value::F64(a), Value::F64(b)) => a.to_bits() == b.to_bits(),
        (Value::Ptr(p), Value::Ptr(q)) if p.is_null() || q.is_null() => p.is_null() && q.is_null(),
        (Value::Ptr(p), Value::Ptr(q)) => match alpha.get(p.block) {
            Some((b, delta)) => q.block == b && q.off == p.off + delta,
            None => false,
        },
        (Value::Str(a), Value::Str(b)) => a == b,
        (Value::Undef, Value::Undef) => true,
        _ => false,
    }
}

/// MSVL name of an Xd-C function (only reserved words are renamed).
pub fn msvl_func_name<'a>(tr: &'a Translation, name: &'a str) -> &'a str {
    tr.renames.get(name).map(String::as_str).unwrap_or(name)
}

/// Maps the block of every Xd-C variable (and function) to the block of its
/// MSVL counterpart at offset 0.
pub fn build_injection(x: &Snapshot, m: &Snapshot, tr: &Translation) -> Result<MemoryInjection, InjectionError> {
    let mut alpha = MemoryInjection::default();
    let mut used = std::collections::BTreeSet::new();
    for (k, root) in &x.roots {
        let name = tr.name_map.get(k).map(String::as_str).unwrap_or(k);
        let Some(mr) = m.roots.get(name) else {
            return Err(InjectionError::Unmatched { name: k.clone(), side: "Xd-C" });
        };
        used.insert(name.to_string());
        alpha.insert(root.block, mr.block, 0)?;
    }
    if let Some(extra) = m.roots.keys().find(|n| !used.contains(*n) && !KEY_VARS.contains(&n.as_str())) {
        return Err(InjectionError::Unmatched { name: extra.clone(), side: "MSVL" });
    }
    for (f, b) in &x.functions {
        if let Some(mb) = m.functions.get(msvl_func_name(tr, f)) {
            alpha.insert(*b, *mb, 0)?;
        }
    }
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::Ptr;

    fn alpha(pairs: &[(u32, u32, i64)]) -> MemoryInjection {
        let mut a = MemoryInjection::default();
        for (b, t, d) in pairs {
            a.insert(*b, *t, *d).unwrap();
        }
        a
    }

    #[test]
    fn constants_map_to_themselves() {
        let a = MemoryInjection::default();
        assert!(check_value_equiv(&a, &Value::int(1), &Value::int(1)));
        assert!(!check_value_equiv(&a, &Value::int(1), &Value::int(2)));
        assert!(check_value_equiv(&a, &Value::Undef, &Value::Undef));
        assert!(!check_value_equiv(&a, &Value::Undef, &Value::int(0)));
        assert!(check_value_equiv(&a, &Value::Ptr(Ptr::NULL), &Value::Ptr(Ptr::NULL)));
    }

    #[test]
    fn pointers_follow_the_offset_law() {
        // Two variables laid out in unrelated blocks on each side.
        let a = alpha(&[(0xffff_0000, 0xffff_aaaa, 0), (0xffff_1111, 0xffff_3333, 0), (7, 9, 4)]);
        let p = |b, o| Value::Ptr(Ptr::new(b, o));
        assert!(check_value_equiv(&a, &p(0xffff_0000, 0), &p(0xffff_aaaa, 0)));
        assert!(check_value_equiv(&a, &p(0xffff_1111, 8), &p(0xffff_3333, 8)));
        assert!(check_value_equiv(&a, &p(7, 2), &p(9, 6)));
        assert!(!check_value_equiv(&a, &p(7, 2), &p(9, 2)));
        assert!(!check_value_equiv(&a, &p(8, 0), &p(9, 4)));
    }

    #[test]
    fn injectivity_is_enforced() {
        let mut a = alpha(&[(1, 5, 0)]);
        assert_eq!(a.insert(2, 5, 0), Err(InjectionError::NotInjective { a: 1, b: 2, target: 5 }));
        assert!(a.insert(1, 6, 0).is_err());
        assert!(a.insert(1, 5, 0).is_ok());
        assert!(a.is_injective());
    }
}
