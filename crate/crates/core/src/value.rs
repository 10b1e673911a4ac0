//! Runtime values and the arithmetic both interpreters share.
//!
//! Integer arithmetic applies the C89 usual arithmetic conversions to the
//! 8/16/32-bit kinds. Integer/float mixing and float/double mixing have no
//! rule and fail, as do pointer rows other than `ptr ± int`, `int + ptr`
//! and same-block `ptr - ptr`.

use crate::types::{CType, IntTy};
use serde::Serialize;
use std::fmt;

/// A pointer: block reference plus byte offset. Block 0 is the null block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Ptr {
    pub block: u32,
    pub off: i64,
}

impl Ptr {
    pub const NULL: Ptr = Ptr { block: 0, off: 0 };

    pub fn new(block: u32, off: i64) -> Self {
        Ptr { block, off }
    }

    pub fn is_null(&self) -> bool {
        self.block == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(i64, IntTy),
    F32(f32),
    F64(f64),
    Ptr(Ptr),
    /// A string literal; only ever passed to externs or stored in `char*`.
    Str(String),
    Undef,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("no evaluation rule for {0}")]
    NoRule(String),
    #[error("division by zero")]
    DivByZero,
    #[error("read of an undefined value")]
    Undef,
    #[error("shift count {0} out of range")]
    Shift(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Mod,
    Shl,
    Shr,
    BitAnd,
    BitOr,
    BitXor,
    Lt,
    Gt,
    Le,
    Ge,
    Eq,
    Ne,
    And,
    Or,
}

impl BinOp {
    pub fn is_relational(self) -> bool {
        matches!(self, BinOp::Lt | BinOp::Gt | BinOp::Le | BinOp::Ge)
    }

    pub fn is_equality(self) -> bool {
        matches!(self, BinOp::Eq | BinOp::Ne)
    }

    pub fn is_logical(self) -> bool {
        matches!(self, BinOp::And | BinOp::Or)
    }

    pub fn is_bitwise(self) -> bool {
        matches!(self, BinOp::Shl | BinOp::Shr | BinOp::BitAnd | BinOp::BitOr | BinOp::BitXor)
    }

    /// C spelling.
    pub fn c_str(self) -> &'static str {
        use BinOp::*;
        match self {
            Add => "+",
            Sub => "-",
            Mul => "*",
            Div => "/",
            Mod => "%",
            Shl => "<<",
            Shr => ">>",
            BitAnd => "&",
            BitOr => "|",
            BitXor => "^",
            Lt => "<",
            Gt => ">",
            Le => "<=",
            Ge => ">=",
            Eq => "==",
            Ne => "!=",
            And => "&&",
            Or => "||",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum UnOp {
    Plus,
    Neg,
    BitNot,
    Not,
}

impl UnOp {
    pub fn c_str(self) -> &'static str {
        match self {
            UnOp::Plus => "+",
            UnOp::Neg => "-",
            UnOp::BitNot => "~",
            UnOp::Not => "!",
        }
    }
}

impl Value {
    pub fn int(n: i64) -> Value {
        Value::Int(IntTy::I32.normalize(n), IntTy::I32)
    }

    pub fn boolean(b: bool) -> Value {
        Value::int(b as i64)
    }

    pub fn is_undef(&self) -> bool {
        matches!(self, Value::Undef)
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(n, _) => Some(*n),
            _ => None,
        }
    }

    /// Truth of a scalar: false iff zero (or null).
    pub fn truth(&self) -> Result<bool, ArithError> {
        match self {
            Value::Int(n, _) => Ok(*n != 0),
            Value::F32(x) => Ok(*x != 0.0),
            Value::F64(x) => Ok(*x != 0.0),
            Value::Ptr(p) => Ok(!p.is_null()),
            Value::Str(_) => Ok(true),
            Value::Undef => Err(ArithError::Undef),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        match self {
            Value::Int(n, _) => json!(n),
            Value::F32(x) => json!(*x as f64),
            Value::F64(x) => json!(x),
            Value::Ptr(p) => json!({"block": p.block, "off": p.off}),
            Value::Str(s) => json!(s),
            Value::Undef => serde_json::Value::Null,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n, t) if !t.signed && t.bits == 32 => write!(f, "{n}u"),
            Value::Int(n, _) => write!(f, "{n}"),
            Value::F32(x) => write!(f, "{x:?}f"),
            Value::F64(x) => write!(f, "{x:?}"),
            Value::Ptr(p) if p.is_null() => write!(f, "null"),
            Value::Ptr(p) => write!(f, "ptr({},{})", p.block, p.off),
            Value::Str(s) => write!(f, "{s:?}"),
            Value::Undef => write!(f, "undef"),
        }
    }
}

fn promote(t: IntTy) -> IntTy {
    if t.bits < 32 {
        IntTy::I32
    } else {
        t
    }
}

fn usual(a: IntTy, b: IntTy) -> IntTy {
    let (a, b) = (promote(a), promote(b));
    if !a.signed || !b.signed {
        IntTy::U32
    } else {
        IntTy::I32
    }
}

fn no_rule(op: BinOp, a: &Value, b: &Value) -> ArithError {
    ArithError::NoRule(format!("{} {} {}", kind_name(a), op.c_str(), kind_name(b)))
}

fn kind_name(v: &Value) -> &'static str {
    match v {
        Value::Int(..) => "int",
        Value::F32(_) => "float",
        Value::F64(_) => "double",
        Value::Ptr(_) => "pointer",
        Value::Str(_) => "string",
        Value::Undef => "undef",
    }
}

/// Equality used by `==`/`!=`.
pub fn values_equal(a: &Value, b: &Value) -> Result<bool, ArithError> {
    match (a, b) {
        (Value::Undef, _) | (_, Value::Undef) => Err(ArithError::Undef),
        (Value::Int(x, tx), Value::Int(y, ty)) => {
            let c = usual(*tx, *ty);
            Ok(c.normalize(*x) == c.normalize(*y))
        }
        (Value::F32(x), Value::F32(y)) => Ok(x == y),
        (Value::F64(x), Value::F64(y)) => Ok(x == y),
        (Value::Ptr(p), Value::Ptr(q)) => Ok(p == q),
        (Value::Ptr(p), Value::Int(0, _)) | (Value::Int(0, _), Value::Ptr(p)) => Ok(p.is_null()),
        (Value::Str(s), Value::Str(t)) => Ok(s == t),
        _ => Err(no_rule(BinOp::Eq, a, b)),
    }
}

/// Binary operator evaluation. `ea`/`eb` give the pointee size when the
/// corresponding operand has pointer type.
pub fn binop(op: BinOp, a: &Value, ea: Option<u32>, b: &Value, eb: Option<u32>) -> Result<Value, ArithError> {
    use Value::*;
    if a.is_undef() || b.is_undef() {
        return Err(ArithError::Undef);
    }
    match op {
        BinOp::And => return Ok(Value::boolean(a.truth()? && b.truth()?)),
        BinOp::Or => return Ok(Value::boolean(a.truth()? || b.truth()?)),
        BinOp::Eq => return Ok(Value::boolean(values_equal(a, b)?)),
        BinOp::Ne => return Ok(Value::boolean(!values_equal(a, b)?)),
        _ => {}
    }
    match (a, b) {
        (Int(x, tx), Int(y, ty)) => int_binop(op, *x, *tx, *y, *ty),
        (F32(x), F32(y)) => float_binop(op, *x as f64, *y as f64).map(|r| match r {
            FloatRes::Num(v) => F32(v as f32),
            FloatRes::Bool(b) => Value::boolean(b),
        }),
        (F64(x), F64(y)) => float_binop(op, *x, *y).map(|r| match r {
            FloatRes::Num(v) => F64(v),
            FloatRes::Bool(b) => Value::boolean(b),
        }),
        (Ptr(p), Int(n, _)) if matches!(op, BinOp::Add | BinOp::Sub) => {
            let sz = ea.ok_or_else(|| no_rule(op, a, b))? as i64;
            let d = if op == BinOp::Add { n * sz } else { -n * sz };
            Ok(Ptr(crate::value::Ptr::new(p.block, p.off + d)))
        }
        (Int(n, _), Ptr(p)) if op == BinOp::Add => {
            let sz = eb.ok_or_else(|| no_rule(op, a, b))? as i64;
            Ok(Ptr(crate::value::Ptr::new(p.block, p.off + n * sz)))
        }
        (Ptr(p), Ptr(q)) if op == BinOp::Sub && p.block == q.block => {
            let sz = ea.filter(|s| *s > 0).ok_or_else(|| no_rule(op, a, b))? as i64;
            Ok(Value::int((p.off - q.off) / sz))
        }
        _ => Err(no_rule(op, a, b)),
    }
}

enum FloatRes {
    Num(f64),
    Bool(bool),
}

fn float_binop(op: BinOp, x: f64, y: f64) -> Result<FloatRes, ArithError> {
    use BinOp::*;
    Ok(match op {
        Add => FloatRes::Num(x + y),
        Sub => FloatRes::Num(x - y),
        Mul => FloatRes::Num(x * y),
        Div => {
            if y == 0.0 {
                return Err(ArithError::DivByZero);
            }
            FloatRes::Num(x / y)
        }
        Lt => FloatRes::Bool(x < y),
        Gt => FloatRes::Bool(x > y),
        Le => FloatRes::Bool(x <= y),
        Ge => FloatRes::Bool(x >= y),
        _ => return Err(ArithError::NoRule(format!("float {}", op.c_str()))),
    })
}

fn int_binop(op: BinOp, x: i64, tx: IntTy, y: i64, ty: IntTy) -> Result<Value, ArithError> {
    use BinOp::*;
    if matches!(op, Shl | Shr) {
        let lt = promote(tx);
        let a = lt.normalize(x);
        let n = promote(ty).normalize(y);
        if !(0..32).contains(&n) {
            return Err(ArithError::Shift(n));
        }
        let r = if op == Shl { a.wrapping_shl(n as u32) } else { a >> n };
        return Ok(Value::Int(lt.normalize(r), lt));
    }
    let c = usual(tx, ty);
    let a = c.normalize(x);
    let b = c.normalize(y);
    let num = |r: i64| Ok(Value::Int(c.normalize(r), c));
    match op {
        Add => num(a.wrapping_add(b)),
        Sub => num(a.wrapping_sub(b)),
        Mul => num(a.wrapping_mul(b)),
        Div | Mod => {
            if b == 0 {
                return Err(ArithError::DivByZero);
            }
            num(if op == Div { a / b } else { a % b })
        }
        BitAnd => num(a & b),
        BitOr => num(a | b),
        BitXor => num(a ^ b),
        Lt => Ok(Value::boolean(a < b)),
        Gt => Ok(Value::boolean(a > b)),
        Le => Ok(Value::boolean(a <= b)),
        Ge => Ok(Value::boolean(a >= b)),
        Shl | Shr | Eq | Ne | And | Or => unreachable!(),
    }
}

pub fn unop(op: UnOp, v: &Value) -> Result<Value, ArithError> {
    use Value::*;
    match (op, v) {
        (_, Undef) => Err(ArithError::Undef),
        (UnOp::Not, v) => Ok(Value::boolean(!v.truth()?)),
        (_, Int(x, t)) => {
            let p = promote(*t);
            let a = p.normalize(*x);
            let r = match op {
                UnOp::Plus => a,
                UnOp::Neg => a.wrapping_neg(),
                UnOp::BitNot => !a,
                UnOp::Not => unreachable!(),
            };
            Ok(Int(p.normalize(r), p))
        }
        (UnOp::Plus, F32(x)) => Ok(F32(*x)),
        (UnOp::Neg, F32(x)) => Ok(F32(-x)),
        (UnOp::Plus, F64(x)) => Ok(F64(*x)),
        (UnOp::Neg, F64(x)) => Ok(F64(-x)),
        _ => Err(ArithError::NoRule(format!("{}{}", op.c_str(), kind_name(v)))),
    }
}

/// Conversion to `target`, used for casts and for every store (assignment,
/// initialization, parameter binding, return).
pub fn convert(v: &Value, target: &CType) -> Result<Value, ArithError> {
    use Value::*;
    if v.is_undef() {
        return Err(ArithError::Undef);
    }
    let fail = || ArithError::NoRule(format!("conversion of {} to {}", kind_name(v), target));
    match target {
        CType::Int(k) => {
            let t = k.ty();
            match v {
                Int(n, _) => Ok(Int(t.normalize(*n), t)),
                F32(x) => Ok(Int(t.normalize(x.trunc() as i64), t)),
                F64(x) => Ok(Int(t.normalize(x.trunc() as i64), t)),
                _ => Err(fail()),
            }
        }
        CType::Float => match v {
            Int(n, _) => Ok(F32(*n as f32)),
            F32(x) => Ok(F32(*x)),
            F64(x) => Ok(F32(*x as f32)),
            _ => Err(fail()),
        },
        CType::Double | CType::LongDouble => match v {
            Int(n, _) => Ok(F64(*n as f64)),
            F32(x) => Ok(F64(*x as f64)),
            F64(x) => Ok(F64(*x)),
            _ => Err(fail()),
        },
        CType::Pointer(_) => match v {
            Ptr(p) => Ok(Ptr(*p)),
            Int(0, _) => Ok(Ptr(crate::value::Ptr::NULL)),
            Str(s) => Ok(Str(s.clone())),
            _ => Err(fail()),
        },
        _ => Err(fail()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::IntKind;

    fn i(n: i64) -> Value {
        Value::int(n)
    }

    #[test]
    fn table7_rows() {
        // int + int
        assert_eq!(binop(BinOp::Add, &i(2), None, &i(3), None), Ok(i(5)));
        // float + float
        assert_eq!(binop(BinOp::Add, &Value::F32(1.5), None, &Value::F32(2.0), None), Ok(Value::F32(3.5)));
        // double + double
        assert_eq!(binop(BinOp::Add, &Value::F64(0.25), None, &Value::F64(0.5), None), Ok(Value::F64(0.75)));
        // ptr + int
        let p = Value::Ptr(Ptr::new(3, 8));
        assert_eq!(binop(BinOp::Add, &p, Some(4), &i(2), None), Ok(Value::Ptr(Ptr::new(3, 16))));
        // int + ptr
        assert_eq!(binop(BinOp::Add, &i(2), None, &p, Some(8)), Ok(Value::Ptr(Ptr::new(3, 24))));
        // otherwise: no rule
        assert!(matches!(binop(BinOp::Add, &Value::F32(1.0), None, &Value::F64(2.0), None), Err(ArithError::NoRule(_))));
        assert!(matches!(binop(BinOp::Add, &i(1), None, &Value::F64(2.0), None), Err(ArithError::NoRule(_))));
        assert!(matches!(binop(BinOp::Add, &p, Some(4), &p, Some(4)), Err(ArithError::NoRule(_))));
    }

    #[test]
    fn usual_conversions() {
        let uc = Value::Int(200, IntKind::UChar.ty());
        assert_eq!(binop(BinOp::Add, &uc, None, &uc, None), Ok(i(400)));
        let u = Value::Int(0, IntTy::U32);
        assert_eq!(binop(BinOp::Sub, &u, None, &i(1), None), Ok(Value::Int(4294967295, IntTy::U32)));
        assert_eq!(binop(BinOp::Eq, &i(-1), None, &Value::Int(4294967295, IntTy::U32), None), Ok(i(1)));
        assert_eq!(binop(BinOp::Lt, &i(-1), None, &u, None), Ok(i(0)));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(binop(BinOp::Div, &i(1), None, &i(0), None), Err(ArithError::DivByZero));
        assert_eq!(binop(BinOp::Mod, &i(1), None, &i(0), None), Err(ArithError::DivByZero));
        assert_eq!(binop(BinOp::Div, &i(-7), None, &i(2), None), Ok(i(-3)));
        assert_eq!(binop(BinOp::Mod, &i(-7), None, &i(2), None), Ok(i(-1)));
    }

    #[test]
    fn logic_is_total() {
        assert_eq!(binop(BinOp::And, &i(0), None, &Value::Undef, None), Err(ArithError::Undef));
        assert_eq!(binop(BinOp::Or, &i(0), None, &i(7), None), Ok(i(1)));
    }

    #[test]
    fn pointer_difference_and_null() {
        let p = Value::Ptr(Ptr::new(2, 12));
        let q = Value::Ptr(Ptr::new(2, 4));
        assert_eq!(binop(BinOp::Sub, &p, Some(4), &q, Some(4)), Ok(i(2)));
        assert_eq!(binop(BinOp::Eq, &Value::Ptr(Ptr::NULL), None, &i(0), None), Ok(i(1)));
        assert_eq!(binop(BinOp::Ne, &p, None, &i(0), None), Ok(i(1)));
    }

    #[test]
    fn unops_and_shifts() {
        assert_eq!(unop(UnOp::Neg, &i(5)), Ok(i(-5)));
        assert_eq!(unop(UnOp::BitNot, &i(0)), Ok(i(-1)));
        assert_eq!(unop(UnOp::Not, &Value::F64(0.0)), Ok(i(1)));
        assert!(unop(UnOp::BitNot, &Value::F64(1.0)).is_err());
        assert_eq!(binop(BinOp::Shl, &i(1), None, &i(31), None), Ok(i(i32::MIN as i64)));
        assert_eq!(binop(BinOp::Shr, &i(-8), None, &i(1), None), Ok(i(-4)));
        assert_eq!(binop(BinOp::Shl, &i(1), None, &i(32), None), Err(ArithError::Shift(32)));
    }

    #[test]
    fn conversions() {
        assert_eq!(convert(&i(300), &CType::Int(IntKind::UChar)), Ok(Value::Int(44, IntKind::UChar.ty())));
        assert_eq!(convert(&Value::F64(2.9), &CType::INT), Ok(i(2)));
        assert_eq!(convert(&Value::F64(-2.9), &CType::INT), Ok(i(-2)));
        assert_eq!(convert(&i(3), &CType::Double), Ok(Value::F64(3.0)));
        assert_eq!(convert(&i(0), &CType::ptr(CType::INT)), Ok(Value::Ptr(Ptr::NULL)));
        assert!(convert(&i(4), &CType::ptr(CType::INT)).is_err());
    }
}
