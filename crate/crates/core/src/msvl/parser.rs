//! Reader for MSVL text as produced by the emitter.

use super::ast::*;
use super::emit::binop_level;
use crate::diag::{Diagnostic, Span};
use crate::types::{CType, FuncSig, IntKind, StructDef};
use crate::value::{BinOp, UnOp};
use crate::xdc::lexer::{tokenize_with, Dialect, Tok, Token};

pub const KEYWORDS: &[&str] = &[
    "int", "char", "float", "double", "long", "short", "signed", "unsigned", "void", "struct", "if", "then", "else",
    "while", "function", "ext", "empty", "skip", "next", "and", "or", "true", "false", "prev",
];

pub const PUNCTS: &[&str] = &[
    "<==", ":=", "->", "<<", ">>", "<=", ">=", "!=", "(", ")", "[", "]", "{", "}", ";", ",", ".", "+", "-", "*", "/",
    "%", "<", ">", "&", "|", "^", "!", "~", "=",
];

pub const MSVL: Dialect = Dialect { keywords: KEYWORDS, puncts: PUNCTS };

type PResult<T> = Result<T, Diagnostic>;

pub fn parse_msvl(source: &str) -> PResult<MsvlProgram> {
    let mut p = Parser { toks: tokenize_with(source, MSVL)?, pos: 0 };
    let mut units = Vec::new();
    loop {
        if p.is_kw("function") {
            units.push(Unit::Func(p.func()?));
        } else {
            units.push(Unit::Stmt(p.and_stmt()?));
        }
        if !p.eat(";") {
            break;
        }
    }
    p.expect_eof()?;
    Ok(MsvlProgram::new(units))
}

pub fn parse_mstmt(source: &str) -> PResult<MStmt> {
    let mut p = Parser { toks: tokenize_with(source, MSVL)?, pos: 0 };
    let s = p.stmt()?;
    p.expect_eof()?;
    Ok(s)
}

pub fn parse_mexpr(source: &str) -> PResult<MExpr> {
    let mut p = Parser { toks: tokenize_with(source, MSVL)?, pos: 0 };
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(e)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

/// One layer of a declarator, applied innermost-last.
enum Wrap {
    Ptr,
    Arr(Vec<u32>),
    Func(Vec<CType>),
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn span(&self) -> Span {
        self.toks[self.pos].span
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is(&self, p: &str) -> bool {
        matches!(self.peek(), Tok::Punct(q) if *q == p)
    }

    fn is_kw(&self, k: &str) -> bool {
        matches!(self.peek(), Tok::Kw(q) if *q == k)
    }

    fn eat(&mut self, p: &str) -> bool {
        if self.is(p) || self.is_kw(p) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(Diagnostic::error(self.span(), msg))
    }

    fn expect(&mut self, p: &str) -> PResult<()> {
        if self.eat(p) {
            Ok(())
        } else {
            self.err(format!("expected `{p}`, found {}", self.toks[self.pos]))
        }
    }

    fn expect_eof(&self) -> PResult<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.err(format!("unexpected {}", self.toks[self.pos]))
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.err(format!("expected an identifier, found {}", self.toks[self.pos])),
        }
    }

    // ---- types ----

    fn at_type(&self) -> bool {
        match self.peek() {
            Tok::Kw(k) => {
                matches!(*k, "int" | "char" | "float" | "double" | "long" | "short" | "signed" | "unsigned" | "void")
                    || (*k == "struct" && !matches!(self.peek_at(2), Tok::Punct("{")))
            }
            _ => false,
        }
    }

    fn base_type(&mut self) -> PResult<CType> {
        if self.eat("struct") {
            return Ok(CType::Struct(self.ident()?));
        }
        let mut words = Vec::new();
        while let Tok::Kw(k) = self.peek() {
            if !matches!(*k, "int" | "char" | "float" | "double" | "long" | "short" | "signed" | "unsigned" | "void") {
                break;
            }
            words.push(*k);
            self.bump();
        }
        let has = |w: &str| words.contains(&w);
        let unsigned = has("unsigned");
        Ok(if has("void") {
            CType::Void
        } else if has("float") {
            CType::Float
        } else if has("double") {
            if has("long") {
                CType::LongDouble
            } else {
                CType::Double
            }
        } else if has("char") {
            CType::Int(if unsigned {
                IntKind::UChar
            } else if has("signed") {
                IntKind::SChar
            } else {
                IntKind::Char
            })
        } else if has("short") {
            CType::Int(if unsigned { IntKind::UShort } else { IntKind::Short })
        } else if has("long") {
            CType::Int(if unsigned { IntKind::ULong } else { IntKind::Long })
        } else if words.is_empty() {
            return self.err("expected a type");
        } else {
            CType::Int(if unsigned { IntKind::UInt } else { IntKind::Int })
        })
    }

    fn declarator(&mut self) -> PResult<(Option<String>, Vec<Wrap>)> {
        let mut wraps = Vec::new();
        while self.eat("*") {
            wraps.push(Wrap::Ptr);
        }
        let (name, inner) = if self.is("(") && matches!(self.peek_at(1), Tok::Punct("*")) {
            self.bump();
            let r = self.declarator()?;
            self.expect(")")?;
            r
        } else if let Tok::Ident(_) = self.peek() {
            (Some(self.ident()?), Vec::new())
        } else {
            (None, Vec::new())
        };
        let mut dims = Vec::new();
        while self.eat("[") {
            match self.bump() {
                Tok::Int(n, _) if n >= 0 => dims.push(n as u32),
                _ => return self.err("expected an array extent"),
            }
            self.expect("]")?;
        }
        if !dims.is_empty() {
            wraps.push(Wrap::Arr(dims));
        }
        if self.is("(") {
            self.bump();
            let mut ps = Vec::new();
            if self.is_kw("void") && matches!(self.peek_at(1), Tok::Punct(")")) {
                self.bump();
            } else if !self.is(")") {
                loop {
                    let b = self.base_type()?;
                    let (_, w) = self.declarator()?;
                    ps.push(apply(b, w));
                    if !self.eat(",") {
                        break;
                    }
                }
            }
            self.expect(")")?;
            wraps.push(Wrap::Func(ps));
        }
        wraps.extend(inner);
        Ok((name, wraps))
    }

    fn named(&mut self, base: &CType) -> PResult<(String, CType)> {
        let (name, w) = self.declarator()?;
        match name {
            Some(n) => Ok((n, apply(base.clone(), w))),
            None => self.err("expected a declarator name"),
        }
    }

    fn type_name(&mut self) -> PResult<CType> {
        let b = self.base_type()?;
        let (_, w) = self.declarator()?;
        Ok(apply(b, w))
    }

    fn init(&mut self) -> PResult<MInit> {
        if self.eat("{") {
            let mut items = Vec::new();
            if !self.is("}") {
                loop {
                    items.push(self.init()?);
                    if !self.eat(",") {
                        break;
                    }
                }
            }
            self.expect("}")?;
            Ok(MInit::List(items))
        } else {
            Ok(MInit::Expr(self.binary(3)?))
        }
    }

    fn func(&mut self) -> PResult<MFunc> {
        self.expect("function")?;
        let name = self.ident()?;
        self.expect("(")?;
        let mut params = Vec::new();
        if !self.is(")") {
            loop {
                let b = self.base_type()?;
                params.push(self.named(&b)?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(")")?;
        let rval = match params.last() {
            Some((n, _)) if n == "RVal" => params.pop().map(|(_, t)| t),
            _ => None,
        };
        self.expect("{")?;
        let body = self.stmt()?;
        self.expect("}")?;
        Ok(MFunc { name, params, rval, body })
    }

    // ---- statements ----

    fn stmt(&mut self) -> PResult<MStmt> {
        let a = self.and_stmt()?;
        if self.eat(";") {
            Ok(MStmt::Chop(Box::new(a), Box::new(self.stmt()?)))
        } else {
            Ok(a)
        }
    }

    fn and_stmt(&mut self) -> PResult<MStmt> {
        let a = self.prim_stmt()?;
        if self.eat("and") {
            Ok(MStmt::And(Box::new(a), Box::new(self.and_stmt()?)))
        } else {
            Ok(a)
        }
    }

    fn block(&mut self) -> PResult<MStmt> {
        self.expect("{")?;
        let s = self.stmt()?;
        self.expect("}")?;
        Ok(s)
    }

    fn prim_stmt(&mut self) -> PResult<MStmt> {
        if self.eat("empty") {
            return Ok(MStmt::Empty);
        }
        if self.eat("skip") {
            return Ok(MStmt::Skip);
        }
        if self.eat("next") {
            return Ok(MStmt::Next(Box::new(self.prim_stmt()?)));
        }
        if self.eat("if") {
            self.expect("(")?;
            let c = self.expr()?;
            self.expect(")")?;
            self.expect("then")?;
            let a = self.block()?;
            let b = if self.eat("else") { self.block()? } else { MStmt::Empty };
            return Ok(MStmt::If(c, Box::new(a), Box::new(b)));
        }
        if self.eat("while") {
            self.expect("(")?;
            let c = self.expr()?;
            self.expect(")")?;
            return Ok(MStmt::While(c, Box::new(self.block()?)));
        }
        if self.eat("ext") {
            let c = self.postfix_no_call()?;
            let (args, _) = self.args(false)?;
            return Ok(MStmt::ExtCall(c, args));
        }
        if self.is_kw("struct") && matches!(self.peek_at(2), Tok::Punct("{")) {
            self.bump();
            let name = self.ident()?;
            self.expect("{")?;
            let mut fields = Vec::new();
            loop {
                let b = self.base_type()?;
                fields.push(self.named(&b)?);
                if !self.eat("and") {
                    break;
                }
            }
            self.expect("}")?;
            return Ok(MStmt::StructDef(StructDef { name, fields }));
        }
        if self.at_type() {
            let base = self.base_type()?;
            let mut vs = Vec::new();
            loop {
                let (name, ty) = self.named(&base)?;
                let init = if self.eat("<==") { Some(self.init()?) } else { None };
                vs.push(MVar { name, ty, init });
                if !self.eat(",") {
                    break;
                }
            }
            return Ok(MStmt::Decl(vs));
        }
        if self.is("(") {
            let save = self.pos;
            if let Ok(s) = self.group() {
                return Ok(s);
            }
            self.pos = save;
        }
        let target = self.unary()?;
        if self.eat(":=") {
            return Ok(MStmt::UnitAssign(target, self.binary(3)?));
        }
        if self.eat("<==") {
            return Ok(MStmt::Assign(target, self.binary(3)?));
        }
        if self.is("(") {
            let (args, rval) = self.args(true)?;
            return Ok(MStmt::Call(target, args, rval));
        }
        self.err("expected a statement")
    }

    fn group(&mut self) -> PResult<MStmt> {
        self.expect("(")?;
        let s = self.stmt()?;
        self.expect(")")?;
        if self.is(";") || self.is(")") || self.is("}") || self.is_kw("and") || *self.peek() == Tok::Eof {
            Ok(s)
        } else {
            self.err("not a statement group")
        }
    }

    fn args(&mut self, rval_ok: bool) -> PResult<(Vec<MExpr>, bool)> {
        self.expect("(")?;
        let mut args = Vec::new();
        if !self.is(")") {
            loop {
                args.push(self.binary(3)?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(")")?;
        let rval = rval_ok && matches!(args.last(), Some(MExpr::Var(n)) if n == "RVal");
        if rval {
            args.pop();
        }
        Ok((args, rval))
    }

    // ---- expressions ----

    fn expr(&mut self) -> PResult<MExpr> {
        self.binary(1)
    }

    fn binop(&self) -> Option<BinOp> {
        use BinOp::*;
        Some(match self.peek() {
            Tok::Kw("or") => Or,
            Tok::Kw("and") => And,
            Tok::Punct(p) => match *p {
                "=" => Eq,
                "!=" => Ne,
                "<" => Lt,
                ">" => Gt,
                "<=" => Le,
                ">=" => Ge,
                "|" => BitOr,
                "^" => BitXor,
                "&" => BitAnd,
                "<<" => Shl,
                ">>" => Shr,
                "+" => Add,
                "-" => Sub,
                "*" => Mul,
                "/" => Div,
                "%" => Mod,
                _ => return None,
            },
            _ => return None,
        })
    }

    fn binary(&mut self, min: u8) -> PResult<MExpr> {
        let mut lhs = self.unary()?;
        while let Some(op) = self.binop() {
            let l = binop_level(op);
            if l < min {
                break;
            }
            self.bump();
            let rhs = self.binary(l + 1)?;
            lhs = MExpr::bin(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<MExpr> {
        let op = match self.peek() {
            Tok::Punct("-") => Some(UnOp::Neg),
            Tok::Punct("+") => Some(UnOp::Plus),
            Tok::Punct("!") => Some(UnOp::Not),
            Tok::Punct("~") => Some(UnOp::BitNot),
            _ => None,
        };
        if let Some(op) = op {
            self.bump();
            return Ok(MExpr::Unary(op, Box::new(self.unary()?)));
        }
        if self.eat("*") {
            return Ok(MExpr::Deref(Box::new(self.unary()?)));
        }
        if self.eat("&") {
            return Ok(MExpr::AddrOf(Box::new(self.unary()?)));
        }
        if self.is("(") && matches!(self.peek_at(1), Tok::Kw(k) if *k != "if" && *k != "true" && *k != "false" && *k != "prev" && *k != "ext")
        {
            self.bump();
            let t = self.type_name()?;
            self.expect(")")?;
            return Ok(MExpr::Cast(t, Box::new(self.unary()?)));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> PResult<MExpr> {
        self.postfix_no_call()
    }

    fn postfix_no_call(&mut self) -> PResult<MExpr> {
        let mut e = self.primary()?;
        loop {
            if self.is("[") {
                let MExpr::Var(name) = &e else { return self.err("subscripts apply to array or pointer names only") };
                let name = name.clone();
                self.bump();
                let i = self.expr()?;
                self.expect("]")?;
                if self.eat("[") {
                    let j = self.expr()?;
                    self.expect("]")?;
                    e = MExpr::Index2(name, Box::new(i), Box::new(j));
                } else {
                    e = MExpr::Index(name, Box::new(i));
                }
            } else if self.eat(".") {
                e = MExpr::Member(Box::new(e), self.ident()?);
            } else if self.eat("->") {
                e = MExpr::Arrow(Box::new(e), self.ident()?);
            } else {
                return Ok(e);
            }
        }
    }

    fn primary(&mut self) -> PResult<MExpr> {
        let sp = self.span();
        match self.bump() {
            Tok::Int(n, ty) => Ok(MExpr::Int(n, ty)),
            Tok::Float(x, single) => Ok(MExpr::Float(x, single)),
            Tok::Char(c) => Ok(MExpr::Char(c)),
            Tok::Str(s) => Ok(MExpr::Str(s)),
            Tok::Ident(n) => Ok(MExpr::Var(n)),
            Tok::Kw("true") => Ok(MExpr::True),
            Tok::Kw("false") => Ok(MExpr::False),
            Tok::Kw("prev") => {
                self.expect("(")?;
                let e = self.expr()?;
                let m = if self.eat(",") {
                    match self.bump() {
                        Tok::Int(m, _) if m >= 1 => m as u32,
                        _ => return self.err("expected a positive state distance"),
                    }
                } else {
                    1
                };
                self.expect(")")?;
                Ok(MExpr::Prev(m, Box::new(e)))
            }
            Tok::Kw("if") => {
                self.expect("(")?;
                let c = self.expr()?;
                self.expect(")")?;
                self.expect("then")?;
                let a = self.expr()?;
                self.expect("else")?;
                let b = self.expr()?;
                Ok(MExpr::IfThenElse(Box::new(c), Box::new(a), Box::new(b)))
            }
            Tok::Kw("ext") => {
                let c = self.postfix_no_call()?;
                let (args, rval) = self.args(true)?;
                Ok(MExpr::ExtCall(Box::new(c), args, rval))
            }
            Tok::Punct("(") => {
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            t => Err(Diagnostic::error(sp, format!("expected an expression, found {}", Token { tok: t, span: sp }))),
        }
    }
}

fn apply(base: CType, wraps: Vec<Wrap>) -> CType {
    wraps.into_iter().fold(base, |t, w| match w {
        Wrap::Ptr => CType::ptr(t),
        Wrap::Arr(d) => CType::Array(Box::new(t), d),
        Wrap::Func(params) => CType::Func(Box::new(FuncSig { ret: t, params })),
    })
}

#[cfg(test)]
mod tests {
    use super::super::emit::{emit, emit_stmt, Style};
    use super::*;

    #[test]
    fn switch_head_from_the_golden() {
        let s = parse_mstmt(
            "break:=0; switch:=0;\n\
             if((zPend % 2=0 or switch=1) and break=0 and return=0) then{switch:=1; x:=1} else{empty};\n\
             if((switch=1 and break=0 and return=0))then{empty} else{empty};\n\
             break:=0",
        )
        .unwrap();
        let text = emit_stmt(&s, Style::Canonical);
        assert!(text.contains("if((zPend%2=0 or switch=1) and break=0 and return=0)then{"));
        assert!(text.contains("if(switch=1 and break=0 and return=0)then{empty}else{empty}"));
    }

    #[test]
    fn expression_round_trip() {
        for src in [
            "a+b*c",
            "(a+b)*c",
            "a-(b-c)",
            "x&(1=0)",
            "!(a and b) or c",
            "(int)x+1",
            "*p->link",
            "(*p).f",
            "m[i][j+1]",
            "prev(x)",
            "prev(x, 2)",
            "ext f(1, RVal)",
            "if(c)then 1 else 2",
            "a/ *p",
            "1.5f+2.0",
            "'a'",
            "\"s\\n\"",
            "7u",
        ] {
            let e = parse_mexpr(src).unwrap();
            assert_eq!(super::super::emit::expr(&e), src);
        }
    }

    #[test]
    fn declarators() {
        let p = parse_msvl("int (*fp)(int, char *) and skip; unsigned char yy[256], *q and skip; skip").unwrap();
        let Unit::Stmt(MStmt::Chop(a, _)) = &p.units[0] else { panic!() };
        let MStmt::And(d, _) = &**a else { panic!() };
        let MStmt::Decl(vs) = &**d else { panic!() };
        assert_eq!(vs[0].ty.declare("fp"), "int (*fp)(int, char *)");
        let text = emit(&p);
        assert_eq!(parse_msvl(&text).unwrap(), p);
    }

    #[test]
    fn program_round_trip() {
        let src = "struct node {int v and struct node *link};\n\
                   int g <== 3 and skip;\n\
                   function f(int a, int RVal){\n  return:=1 and RVal:=a+g\n};\n\
                   function h(struct node *n){\n  n->v:=(a and b)\n};\n\
                   int x and skip;\n\
                   f(2, RVal);\n\
                   x:=RVal;\n\
                   while(break=0 and x<10){\n  x:=x+1;\n  (y:=1; z:=2) and skip\n}\n";
        let p = parse_msvl(src).unwrap();
        assert_eq!(p.funcs().count(), 2);
        assert_eq!(p.func("f").unwrap().rval, Some(CType::INT));
        let text = emit(&p);
        let q = parse_msvl(&text).unwrap();
        assert_eq!(q, p);
        assert_eq!(emit(&q), text);
    }

    #[test]
    fn statement_groups_and_parenthesized_targets() {
        let s = parse_mstmt("(*p).x:=1 and (a:=1; b:=2)").unwrap();
        let MStmt::And(a, b) = s else { panic!() };
        assert!(matches!(*a, MStmt::UnitAssign(MExpr::Member(..), _)));
        assert!(matches!(*b, MStmt::Chop(..)));
    }
}
