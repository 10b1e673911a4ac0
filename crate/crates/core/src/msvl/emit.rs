//! MSVL text output. Parentheses are inserted only where precedence
//! requires them; `and`, `or` and conditional expressions are always
//! bracketed on the right of an assignment so they cannot be read as
//! statement-level conjunction.

use super::ast::*;
use crate::value::{BinOp, UnOp};
use crate::xdc::printer::{char_lit, float_lit, str_lit};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    /// One construct per line, two-space indentation.
    Canonical,
    /// Everything on one line.
    Compact,
}

const ITE: u8 = 0;
const ASSIGN_RHS: u8 = 3;
const UNARY: u8 = 11;
const POSTFIX: u8 = 12;
const ATOM: u8 = 13;

pub fn binop_level(op: BinOp) -> u8 {
    use BinOp::*;
    match op {
        Or => 1,
        And => 2,
        Eq | Ne => 3,
        Lt | Gt | Le | Ge => 4,
        BitOr => 5,
        BitXor => 6,
        BitAnd => 7,
        Shl | Shr => 8,
        Add | Sub => 9,
        Mul | Div | Mod => 10,
    }
}

pub fn binop_str(op: BinOp) -> &'static str {
    match op {
        BinOp::And => " and ",
        BinOp::Or => " or ",
        BinOp::Eq => "=",
        op => op.c_str(),
    }
}

fn level(e: &MExpr) -> u8 {
    use MExpr::*;
    match e {
        IfThenElse(..) => ITE,
        Binary(op, ..) => binop_level(*op),
        Deref(_) | AddrOf(_) | Cast(..) | Unary(..) => UNARY,
        Index(..) | Index2(..) | Member(..) | Arrow(..) | ExtCall(..) => POSTFIX,
        Int(..) | Float(..) | Char(_) | Str(_) | True | False | Var(_) | Prev(..) => ATOM,
    }
}

pub fn expr(e: &MExpr) -> String {
    use MExpr::*;
    match e {
        Int(n, ty) => {
            if ty.signed {
                n.to_string()
            } else {
                format!("{n}u")
            }
        }
        Float(x, single) => float_lit(*x, *single),
        Char(c) => char_lit(*c),
        Str(s) => str_lit(s),
        True => "true".into(),
        False => "false".into(),
        Var(n) => n.clone(),
        Index(a, i) => format!("{a}[{}]", expr(i)),
        Index2(a, i, j) => format!("{a}[{}][{}]", expr(i), expr(j)),
        Member(s, f) => format!("{}.{f}", at(s, POSTFIX)),
        Arrow(p, f) => format!("{}->{f}", at(p, POSTFIX)),
        Deref(p) => format!("*{}", at(p, UNARY)),
        AddrOf(x) => format!("&{}", at(x, UNARY)),
        Cast(t, x) => format!("({}){}", t.declare(""), at(x, UNARY)),
        Unary(op, x) => format!("{}{}", op_str(*op), at(x, UNARY)),
        Binary(op, a, b) => {
            let l = binop_level(*op);
            let rhs = at(b, l + 1);
            let sep = if *op == BinOp::Div && rhs.starts_with(['*', '/']) { " " } else { "" };
            format!("{}{}{sep}{rhs}", at(a, l), binop_str(*op))
        }
        IfThenElse(c, a, b) => format!("if({})then {} else {}", expr(c), at(a, ITE + 1), expr(b)),
        Prev(1, x) => format!("prev({})", expr(x)),
        Prev(m, x) => format!("prev({}, {m})", expr(x)),
        ExtCall(c, args, rval) => format!("ext {}({})", at(c, POSTFIX), arg_list(args, *rval)),
    }
}

fn op_str(op: UnOp) -> &'static str {
    op.c_str()
}

/// `e` printed so that it parses back at precedence `min` or tighter.
pub fn at(e: &MExpr, min: u8) -> String {
    if level(e) < min {
        format!("({})", expr(e))
    } else {
        expr(e)
    }
}

fn arg_list(args: &[MExpr], rval: bool) -> String {
    let mut v: Vec<String> = args.iter().map(|a| at(a, ASSIGN_RHS)).collect();
    if rval {
        v.push("RVal".into());
    }
    v.join(", ")
}

fn init(i: &MInit) -> String {
    match i {
        MInit::Expr(e) => at(e, ASSIGN_RHS),
        MInit::List(items) => format!("{{{}}}", items.iter().map(init).collect::<Vec<_>>().join(", ")),
    }
}

pub fn decl(vs: &[MVar]) -> String {
    let Some(first) = vs.first() else { return String::new() };
    let base = first.ty.base_type().declare("");
    let parts: Vec<String> = vs
        .iter()
        .map(|v| match &v.init {
            Some(i) => format!("{} <== {}", v.ty.declarator(&v.name), init(i)),
            None => v.ty.declarator(&v.name),
        })
        .collect();
    format!("{base} {}", parts.join(", "))
}

struct Emitter {
    style: Style,
}

impl Emitter {
    fn nl(&self, depth: usize) -> String {
        match self.style {
            Style::Canonical => format!("\n{}", "  ".repeat(depth)),
            Style::Compact => " ".into(),
        }
    }

    fn grouped(&self, s: &MStmt, depth: usize) -> String {
        format!("({})", self.stmt(s, depth))
    }

    /// A `{ ... }` body; short single-line bodies stay inline.
    fn block(&self, s: &MStmt, depth: usize) -> String {
        let inner = self.stmt(s, depth + 1);
        if self.style == Style::Compact || (!inner.contains('\n') && inner.len() <= 40) {
            format!("{{{inner}}}")
        } else {
            format!("{{{}{inner}{}}}", self.nl(depth + 1), self.nl(depth))
        }
    }

    fn stmt(&self, s: &MStmt, depth: usize) -> String {
        use MStmt::*;
        match s {
            Empty => "empty".into(),
            Skip => "skip".into(),
            Assign(l, r) => format!("{} <== {}", expr(l), at(r, ASSIGN_RHS)),
            UnitAssign(l, r) => format!("{}:={}", expr(l), at(r, ASSIGN_RHS)),
            And(a, b) => {
                let l = if matches!(**a, Chop(..) | And(..)) { self.grouped(a, depth) } else { self.stmt(a, depth) };
                let r = if matches!(**b, Chop(..)) { self.grouped(b, depth) } else { self.stmt(b, depth) };
                format!("{l} and {r}")
            }
            Next(a) => {
                let inner = if matches!(**a, Chop(..) | And(..)) { self.grouped(a, depth) } else { self.stmt(a, depth) };
                format!("next {inner}")
            }
            Chop(a, b) => {
                let l = if matches!(**a, Chop(..)) { self.grouped(a, depth) } else { self.stmt(a, depth) };
                format!("{l};{}{}", self.nl(depth), self.stmt(b, depth))
            }
            If(c, a, b) => format!("if({})then{}else{}", expr(c), self.block(a, depth), self.block(b, depth)),
            While(c, b) => format!("while({}){}", expr(c), self.block(b, depth)),
            Call(c, args, rval) => format!("{}({})", at(c, POSTFIX), arg_list(args, *rval)),
            ExtCall(c, args) => format!("ext {}({})", at(c, POSTFIX), arg_list(args, false)),
            Decl(vs) => decl(vs),
            StructDef(d) => {
                let fields: Vec<String> = d.fields.iter().map(|(n, t)| t.declare(n)).collect();
                format!("struct {} {{{}}}", d.name, fields.join(" and "))
            }
        }
    }

    fn func(&self, f: &MFunc) -> String {
        let mut ps: Vec<String> = f.params.iter().map(|(n, t)| t.declare(n)).collect();
        if let Some(t) = &f.rval {
            ps.push(t.declare("RVal"));
        }
        let body = self.stmt(&f.body, 1);
        format!("function {}({}){{{}{body}{}}}", f.name, ps.join(", "), self.nl(1), self.nl(0))
    }
}

pub fn emit_stmt(s: &MStmt, style: Style) -> String {
    Emitter { style }.stmt(s, 0)
}

pub fn emit_program(p: &MsvlProgram, style: Style) -> String {
    let em = Emitter { style };
    let units: Vec<String> = p
        .units
        .iter()
        .map(|u| match u {
            Unit::Stmt(s) => em.stmt(s, 0),
            Unit::Func(f) => em.func(f),
        })
        .collect();
    match style {
        Style::Canonical => format!("{}\n", units.join(";\n")),
        Style::Compact => units.join("; "),
    }
}

pub fn emit(p: &MsvlProgram) -> String {
    emit_program(p, Style::Canonical)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::CType;

    fn v(n: &str) -> MExpr {
        MExpr::var(n)
    }

    #[test]
    fn loop_guard_needs_no_parentheses() {
        let g = MExpr::and(MExpr::eq(v("break"), MExpr::int(0)), MExpr::bin(BinOp::Le, v("i"), v("last")));
        assert_eq!(expr(&g), "break=0 and i<=last");
    }

    #[test]
    fn disjunction_inside_conjunction_is_bracketed() {
        let d = MExpr::bin(BinOp::Or, MExpr::eq(v("a"), MExpr::int(0)), MExpr::eq(v("switch"), MExpr::int(1)));
        let g = MExpr::and(d, MExpr::eq(v("break"), MExpr::int(0)));
        assert_eq!(expr(&g), "(a=0 or switch=1) and break=0");
    }

    #[test]
    fn c_precedence_differences_are_made_explicit() {
        // C `x & 1 == 0` groups as `x & (1 == 0)`.
        let e = MExpr::bin(BinOp::BitAnd, v("x"), MExpr::eq(MExpr::int(1), MExpr::int(0)));
        assert_eq!(expr(&e), "x&(1=0)");
        let e = MExpr::bin(BinOp::Sub, v("a"), MExpr::bin(BinOp::Sub, v("b"), v("c")));
        assert_eq!(expr(&e), "a-(b-c)");
        let e = MExpr::bin(BinOp::Div, v("a"), MExpr::Deref(Box::new(v("p"))));
        assert_eq!(expr(&e), "a/ *p");
    }

    #[test]
    fn logical_rhs_is_bracketed() {
        let s = MStmt::unit(v("x"), MExpr::and(v("a"), v("b")));
        assert_eq!(emit_stmt(&s, Style::Compact), "x:=(a and b)");
    }

    #[test]
    fn declarations() {
        let vs = vec![
            MVar { name: "yy".into(), ty: CType::Array(Box::new(CType::Int(crate::types::IntKind::UChar)), vec![256]), init: None },
            MVar { name: "p".into(), ty: CType::ptr(CType::Int(crate::types::IntKind::UChar)), init: Some(MInit::Expr(MExpr::int(0))) },
        ];
        let s = MStmt::and(MStmt::Decl(vs), MStmt::Skip);
        assert_eq!(emit_stmt(&s, Style::Compact), "unsigned char yy[256], *p <== 0 and skip");
    }

    #[test]
    fn canonical_layout() {
        let body = MStmt::chop(MStmt::unit(v("x"), MExpr::int(1)), MStmt::unit(v("y"), MExpr::int(2)));
        let s = MStmt::While(MExpr::True, Box::new(body));
        assert_eq!(emit_stmt(&s, Style::Canonical), "while(true){\n  x:=1;\n  y:=2\n}");
        assert_eq!(emit_stmt(&s, Style::Compact), "while(true){x:=1; y:=2}");
    }
}
